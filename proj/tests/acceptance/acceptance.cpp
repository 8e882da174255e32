#include <stconn/affine_plane.hpp>
#include <stconn/constructions.hpp>
#include <stconn/evaluator.hpp>
#include <stconn/family.hpp>
#include <stconn/oracles.hpp>
#include <stconn/predict.hpp>
#include <stconn/rng.hpp>
#include <stconn/theorem.hpp>

#ifdef STCONN_HAVE_CLI
#include <stconn_cli/cli.hpp>
#endif

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace stconn;

namespace
{

struct outcome
{
  bool passed;
  std::string detail;
};

int failures = 0;

void report( int id, std::string const& name, std::function<outcome()> const& body )
{
  auto const t0 = std::chrono::steady_clock::now();
  outcome r;
  try
  {
    r = body();
  }
  catch ( std::exception const& e )
  {
    r = { false, std::string( "exception: " ) + e.what() };
  }
  auto const secs = std::chrono::duration<double>( std::chrono::steady_clock::now() - t0 ).count();
  std::cout << "criterion " << id << ": " << ( r.passed ? "PASS" : "FAIL" ) << " " << name << " (" << r.detail
            << "; " << std::fixed;
  std::cout.precision( 1 );
  std::cout << secs << "s)" << std::endl;
  failures += !r.passed;
}

/* number of graphs where the first output differs from `expected` */
template<class Gen, class Expect>
std::uint64_t count_mismatches( monotone_circuit const& c, std::uint64_t count, Gen&& gen, Expect&& expect )
{
  batch_evaluator const eval( c );
  std::uint64_t bad = 0;
  std::vector<adjacency_matrix> batch;
  for ( std::uint64_t i = 0; i < count; )
  {
    batch.clear();
    for ( ; i < count && batch.size() < 64; ++i )
      batch.push_back( gen( i ) );
    auto const words = eval.run( batch );
    for ( std::size_t k = 0; k < batch.size(); ++k )
      bad += ( ( words[0] >> k ) & 1 ) != expect( batch[k] );
  }
  return bad;
}

bool reachable( adjacency_matrix const& g )
{
  return bfs_reachable( g, 1, g.size() );
}

/* ---- 1 ---- */

outcome exhaustive_equivalence()
{
  std::uint64_t bad = 0, evaluations = 0;
  for ( std::size_t n = 2; n <= 4; ++n )
    for ( auto const& c : { build_reach( n ).circuit, build_explicit( n ).circuit } )
    {
      auto const total = graph_count( n );
      bad += count_mismatches( c, total, [n]( std::uint64_t code ) { return graph_from_code( n, code ); }, reachable );
      evaluations += total;
    }
  return { bad == 0, std::to_string( evaluations ) + " evaluations, " + std::to_string( bad ) + " mismatches" };
}

/* ---- 2 ---- */

outcome random_equivalence()
{
  constexpr double densities[] = { 0.02, 0.1, 0.5 };
  std::uint64_t bad = 0;
  std::string sizes;
  for ( std::size_t n : { 9, 16, 25, 64 } )
  {
    auto const built = build_explicit( n );
    bad += count_mismatches(
        built.circuit, 100'000,
        [n, &densities]( std::uint64_t i ) { return random_graph( n, densities[i % 3], 1000 * n + i ).matrix; },
        reachable );
    sizes += ( sizes.empty() ? "" : " " ) + std::to_string( n ) + ":" + std::to_string( built.circuit.num_gates() );
  }
  return { bad == 0, "4 x 100000 graphs, gates " + sizes + ", " + std::to_string( bad ) + " mismatches" };
}

/* ---- 3 ---- */

std::uint64_t promise_violations( monotone_circuit const& c, std::size_t n, std::size_t l, std::uint64_t seed )
{
  constexpr double noise[] = { 0.0, 0.02, 0.05 };
  constexpr double dense[] = { 0.1, 0.3, 0.6 };
  auto const max_len = std::min( l, n - 1 );
  auto const yes = count_mismatches(
      c, 10'000,
      [&]( std::uint64_t i ) {
        rng r( seed, { static_cast<std::uint32_t>( i ), 1 } );
        auto const len = r.uniform( 1, max_len );
        return planted_path_graph( n, len, noise[i % 3], r.next() ).matrix;
      },
      []( adjacency_matrix const& ) { return true; } );
  auto const no = count_mismatches(
      c, 10'000,
      [&]( std::uint64_t i ) {
        rng r( seed, { static_cast<std::uint32_t>( i ), 2 } );
        return no_path_graph( n, dense[i % 3], r.next() ).matrix;
      },
      []( adjacency_matrix const& ) { return false; } );
  return yes + no;
}

outcome promise_soundness()
{
  std::uint64_t bad = 0;
  std::size_t configs = 0;
  for ( auto [n, l] : std::vector<std::pair<std::size_t, std::size_t>>{ { 8, 3 }, { 12, 11 }, { 16, 5 }, { 32, 7 }, { 64, 10 } } )
  {
    bad += promise_violations( build_reach_leq( n, l ).circuit, n, l, 31 * n + l );
    ++configs;
  }
  for ( auto [n, l] : std::vector<std::pair<std::size_t, std::size_t>>{ { 3, 2 }, { 7, 6 }, { 8, 7 }, { 16, 9 }, { 16, 15 } } )
  {
    auto const tb = build_theorem( n, l, 1 );
    bad += promise_violations( tb.built.circuit, n, l, 7 * n + l );
    ++configs;
  }
  return { bad == 0, std::to_string( configs ) + " configurations x 20000 graphs, " + std::to_string( bad ) +
                         " violations" };
}

/* ---- 4 ---- */

bool identity_holds( built_circuit const& b )
{
  return b.ledger.stage_sum_identity_holds() && b.ledger.total_measured &&
         *b.ledger.total_measured == static_cast<std::int64_t>( measure_depth( b.circuit ) );
}

outcome depth_bound_and_identity()
{
  std::size_t over = 0, pairs = 0;
  std::string first_bad;
  for ( std::size_t n = 2; n <= 64; ++n )
    for ( std::size_t l = 2; l <= 64; ++l )
    {
      auto const depth = measure_depth( build_reach_leq( n, l ).circuit );
      auto const bound = ceil_log2( l ) * ( 2 + ceil_log2( n ) );
      ++pairs;
      if ( depth > bound )
      {
        if ( !over++ )
          first_bad = " first at n=" + std::to_string( n ) + " l=" + std::to_string( l );
      }
    }

  std::size_t composed = 0, broken = 0;
  for ( std::size_t n = 2; n <= 64; ++n )
  {
    ++composed;
    broken += !identity_holds( build_explicit( n ) );
  }
  for ( auto [n, l] : std::vector<std::pair<std::size_t, std::size_t>>{ { 3, 2 }, { 7, 6 }, { 8, 7 }, { 16, 9 }, { 16, 15 } } )
  {
    ++composed;
    broken += !identity_holds( build_theorem( n, l, 1 ).built );
  }
  auto const f = plane_family( 25 );
  auto const inner = build_reach_leq( f.params().s + 2, f.params().l / f.params().d + 1 );
  ++composed;
  broken += !identity_holds( compose_family( f, inner ) );

  return { over == 0 && broken == 0, std::to_string( pairs ) + " (n,l) pairs, " + std::to_string( over ) +
                                         " over the bound" + first_bad + "; " + std::to_string( composed ) +
                                         " composed builds, " + std::to_string( broken ) + " identity failures" };
}

/* ---- 5 ---- */

outcome cover_bound()
{
  auto const two = verify_cover_bound_exhaustive( 2 );
  auto const three = verify_cover_bound_exhaustive( 3 );
  bool const ok = two.passed && three.passed && two.subsets_checked == 64 && three.subsets_checked == 4096;
  return { ok, "q=2: " + std::to_string( two.subsets_checked ) + " subsets, q=3: " +
                   std::to_string( three.subsets_checked ) + " subsets" };
}

/* ---- 6 ---- */

outcome plane_families()
{
  bool ok = true;
  std::string detail;
  for ( std::size_t n : { 4, 9 } )
  {
    auto const r = check_family_exact( plane_family( n ) );
    ok = ok && r.passed;
    detail += "exact n=" + std::to_string( n ) + ( r.passed ? " ok" : " FAILED" ) + "; ";
  }
  for ( std::size_t n : { 16, 25, 49 } )
  {
    auto const r = check_family_sampled( plane_family( n ), 100'000, n );
    ok = ok && r.passed;
    detail += "sampled n=" + std::to_string( n ) + ( r.passed ? " ok" : " FAILED" ) + "; ";
  }
  detail.resize( detail.size() - 2 );
  return { ok, detail };
}

/* ---- 7 ---- */

outcome sampler()
{
  std::vector<family_params> const sets = {
      { 12, 12, 10, 6, 6 }, { 16, 16, 12, 8, 8 }, { 20, 20, 12, 10, 10 }, { 20, 20, 20, 12, 6 } };
  bool ok = true;
  std::ostringstream detail;
  for ( auto const& p : sets )
  {
    bool const eligible = sampler_regime( p ) && exact_check_cost( p ) <= 10'000'000;
    bool found = false;
    try
    {
      found = find_family( p, 0, family_search_options{ 10, false, 10'000'000, 0 } ).attempts_used <= 10;
    }
    catch ( error const& )
    {
    }
    std::size_t fails = 0;
    for ( std::uint64_t seed = 0; seed < 100; ++seed )
      fails += !check_family_exact( sample_family( p, seed ) ).passed;
    double const allowed = 10.0 * failure_probability_bound( p );
    bool const freq_ok = fails / 100.0 <= allowed;
    ok = ok && eligible && found && freq_ok;
    detail << "(" << p.n << "," << p.m << "," << p.s << "," << p.l << "," << p.d << ") "
           << ( eligible ? "" : "ineligible " ) << ( found ? "found" : "not found" ) << " fails=" << fails
           << "/100 bound=" << allowed << "; ";
  }
  auto s = detail.str();
  s.resize( s.size() - 2 );
  return { ok, s };
}

/* ---- 8 ---- */

outcome hitting_witnesses()
{
  std::vector<covering_family> families = { plane_family( 25 ), plane_family( 49 ) };
  families.push_back( find_family( { 20, 20, 20, 12, 6 }, 0 ).family );
  families.push_back( find_family( { 16, 16, 12, 8, 4 }, 0, family_search_options{ 10, false, 10'000'000, 0 } ).family );

  std::size_t checked = 0, bad = 0, nontrivial = 0;
  for ( std::uint64_t i = 0; checked < 1000; ++i )
  {
    auto const& f = families[i % families.size()];
    auto const& p = f.params();
    rng r( 77, { static_cast<std::uint32_t>( i ) } );
    auto const len = r.uniform( 1, std::min( p.l, p.n - 1 ) );
    double const noise = i % 4 == 0 ? 0.02 : 0.0;
    auto const g = planted_path_graph( p.n, len, noise, r.next() ).matrix;
    auto const path = shortest_path( g, 1, p.n );
    if ( !path )
      continue;
    std::vector<std::size_t> const seq( path->begin(), path->end() );
    auto const w = hitting_decomposition( f, seq );
    auto const k = w.indices.size() - 1;
    bool ok = witness_is_valid( f, seq, w ) && k * p.d <= p.l && w.indices.front() == 0 &&
              w.indices.back() == seq.size() - 1;
    for ( std::size_t t = 0; t + 1 < w.indices.size(); ++t )
      ok = ok && w.indices[t] < w.indices[t + 1] && w.indices[t + 1] - w.indices[t] <= 2 * p.d;
    auto const& set = f[w.set_index];
    for ( std::size_t t = 1; t + 1 < w.indices.size(); ++t )
      ok = ok && std::find( set.begin(), set.end(), seq[w.indices[t]] ) != set.end();
    bad += !ok;
    nontrivial += k > 1;
    ++checked;
  }
  return { bad == 0, std::to_string( checked ) + " witnesses (" + std::to_string( nontrivial ) + " nontrivial), " +
                         std::to_string( bad ) + " invalid" };
}

/* ---- 9 ---- */

/* a/b < c/d for ratios total/(e^2), compared by cross-multiplication */
bool ratio_less( std::int64_t t1, std::uint64_t e1, std::int64_t t2, std::uint64_t e2 )
{
  return big_int( t1 ) * e2 * e2 < big_int( t2 ) * e1 * e1;
}

outcome trend_report()
{
  std::vector<std::uint64_t> grid = { 10 };
  for ( std::uint64_t e = 12; e <= 1024; e += 4 )
    grid.push_back( e );

  std::size_t increases = 0, not_below = 0;
  std::uint64_t first_not_below = 0, last_not_below = 0;
  std::int64_t prev_total = 0;
  std::uint64_t prev_e = 0;
  for ( auto e : grid )
  {
    auto const n = pow2( e );
    auto const ex = predict_depth( build_mode::explicit_plane, n, n - 1 ).total_predicted;
    if ( prev_e && ratio_less( prev_total, prev_e, ex, e ) )
      ++increases;
    prev_total = ex;
    prev_e = e;
    if ( e >= 20 )
    {
      auto const th = predict_depth( build_mode::theorem, n, n - 1 ).total_predicted;
      auto const sq = predict_depth( build_mode::squaring, n, n - 1 ).total_predicted;
      if ( !ratio_less( th, e, sq, e ) )
      {
        if ( !not_below++ )
          first_not_below = e;
        last_not_below = e;
      }
    }
  }

  auto ratio = []( build_mode m, std::uint64_t e ) {
    std::ostringstream s;
    s.precision( 4 );
    auto const n = pow2( e );
    s << depth_ratio( predict_depth( m, n, n - 1 ), n );
    return s.str();
  };
  std::ostringstream d;
  d << grid.size() << " exponents 10,12,16..1024; explicit increases=" << increases
    << "; theorem not below squaring at " << not_below << " exponents";
  if ( not_below )
    d << " (2^" << first_not_below << "..2^" << last_not_below << ")";
  d << "; ratios at 2^20 sq/ex/th " << ratio( build_mode::squaring, 20 ) << "/" << ratio( build_mode::explicit_plane, 20 )
    << "/" << ratio( build_mode::theorem, 20 ) << ", at 2^1024 " << ratio( build_mode::squaring, 1024 ) << "/"
    << ratio( build_mode::explicit_plane, 1024 ) << "/" << ratio( build_mode::theorem, 1024 );
  return { increases == 0 && not_below == 0, d.str() };
}

/* ---- 10 ---- */

std::string slurp( std::filesystem::path const& p )
{
  std::ifstream f( p, std::ios::binary );
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

outcome reproducibility()
{
  namespace fs = std::filesystem;
  auto const dir = fs::temp_directory_path() / "stconn_acceptance_repro";
  fs::remove_all( dir );
  fs::create_directories( dir );

  std::vector<std::vector<std::string>> const runs = {
      { "--mode", "squaring", "--n", "20", "--l", "19" },
      { "--mode", "exact", "--n", "20", "--l", "13" },
      { "--mode", "explicit", "--n", "25" },
      { "--mode", "theorem", "--n", "16", "--l", "15", "--seed", "5" },
      { "--mode", "theorem", "--n", "7", "--l", "6", "--seed", "12345678901234" } };
  std::size_t same = 0;
  for ( std::size_t i = 0; i < runs.size(); ++i )
  {
    std::string files[2];
    for ( int k = 0; k < 2; ++k )
    {
      auto const out = dir / ( "run" + std::to_string( i ) + "_" + std::to_string( k ) + ".mc" );
#ifdef STCONN_HAVE_CLI
      std::vector<std::string> args = { "build" };
      args.insert( args.end(), runs[i].begin(), runs[i].end() );
      args.insert( args.end(), { "--out", out.string() } );
      std::ostringstream o, e;
      if ( cli::run( args, o, e ) != 0 )
        return { false, "build failed: " + e.str() };
#else
      return { false, "tool not built" };
#endif
      files[k] = slurp( out );
    }
    same += !files[0].empty() && files[0] == files[1];
  }
  fs::remove_all( dir );
  return { same == runs.size(), std::to_string( same ) + "/" + std::to_string( runs.size() ) +
                                    " builds byte-identical across two runs" };
}

} // namespace

int main()
{
  report( 1, "exhaustive oracle equivalence, n=2..4", exhaustive_equivalence );
  report( 2, "randomized oracle equivalence of the plane construction", random_equivalence );
  report( 3, "promise circuits on planted and no-path graphs", promise_soundness );
  report( 4, "squaring depth bound and ledger stage sums", depth_bound_and_identity );
  report( 5, "line cover bound, q=2 and q=3", cover_bound );
  report( 6, "plane family covering condition", plane_families );
  report( 7, "random family sampler", sampler );
  report( 8, "hitting decomposition witnesses", hitting_witnesses );
  report( 9, "predicted depth ratio trends", trend_report );
  report( 10, "byte-identical builds", reproducibility );
  std::cout << ( failures ? "FAIL" : "PASS" ) << ": " << 10 - failures << "/10 criteria" << std::endl;
  return failures ? 1 : 0;
}
