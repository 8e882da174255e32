#include <stconn_cli/cli.hpp>

#include <stconn/affine_plane.hpp>
#include <stconn/constructions.hpp>
#include <stconn/error.hpp>
#include <stconn/evaluator.hpp>
#include <stconn/family.hpp>
#include <stconn/io.hpp>
#include <stconn/oracles.hpp>
#include <stconn/predict.hpp>
#include <stconn/rng.hpp>
#include <stconn/theorem.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#ifndef STCONN_VERSION
#define STCONN_VERSION "0.0.0"
#endif

namespace stconn::cli
{

namespace
{

struct usage_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::string quote_arg( std::string const& a )
{
  if ( !a.empty() && a.find_first_of( " \t\"'\\" ) == std::string::npos )
    return a;
  std::string q = "\"";
  for ( char c : a )
  {
    if ( c == '"' || c == '\\' )
      q += '\\';
    q += c;
  }
  return q + "\"";
}

std::string command_line( std::vector<std::string> const& args )
{
  std::string s = "stconn";
  for ( auto const& a : args )
    s += " " + quote_arg( a );
  return s;
}

/* decimal, or 2^E */
big_int parse_big( std::string const& text, std::string const& flag )
{
  auto bad = [&] { return usage_error( flag + ": expected a positive integer or 2^E, got '" + text + "'" ); };
  if ( text.empty() )
    throw bad();
  if ( text.rfind( "2^", 0 ) == 0 )
  {
    auto const e = text.substr( 2 );
    if ( e.empty() || e.size() > 4 || !std::all_of( e.begin(), e.end(), ::isdigit ) )
      throw bad();
    auto const exp = std::stoul( e );
    if ( exp > 1024 )
      throw usage_error( flag + ": exponent above 1024" );
    return pow2( exp );
  }
  if ( text.size() > 320 || !std::all_of( text.begin(), text.end(), ::isdigit ) )
    throw bad();
  big_int v( text );
  if ( v < 1 )
    throw bad();
  return v;
}

std::uint64_t sample_seed( std::uint64_t seed, std::uint64_t index )
{
  return rng( seed, { static_cast<std::uint32_t>( index ), static_cast<std::uint32_t>( index >> 32 ) } ).next();
}

constexpr double densities[] = { 0.02, 0.1, 0.5 };

void write_text_file( std::string const& path, std::string const& text )
{
  std::ofstream f( path, std::ios::binary );
  if ( !f )
    throw error( error_kind::parse_error, "cannot open '" + path + "' for writing" );
  f << text;
  if ( !f )
    throw error( error_kind::parse_error, "write to '" + path + "' failed" );
}

std::string format_set( vertex_set const& s )
{
  std::string r;
  for ( auto v : s )
    r += ( r.empty() ? "" : " " ) + std::to_string( v );
  return r;
}

/* ---- build ---- */

struct build_args
{
  std::string mode;
  std::size_t n = 0;
  std::optional<std::size_t> l;
  std::uint64_t seed = 1;
  std::size_t attempts = 10;
  bool allow_sampled = false;
  std::uint64_t exact_budget = default_exact_budget;
  std::uint64_t max_gates = 0;
  std::string out;
  std::string ledger;
};

int do_build( build_args const& a, std::string const& cmdline, std::ostream& out )
{
  auto const mode = parse_build_mode( a.mode );
  if ( a.n < 2 || a.n > 46340 )
    throw usage_error( "--n must be in 2..46340" );
  std::size_t const l = a.l.value_or( a.n - 1 );
  if ( mode != build_mode::explicit_plane && l < 1 )
    throw usage_error( "--l must be positive" );

  // squaring-type constructions use about 2n^3 gates per level
  if ( a.max_gates && ( mode == build_mode::squaring || mode == build_mode::exact ) )
  {
    auto const levels = predict_depth( mode, a.n, l ).total_predicted / ( 1 + ceil_log2( a.n ) );
    auto const estimate = big_int( levels ) * a.n * a.n * ( 2 * a.n );
    if ( estimate > a.max_gates )
      throw error( error_kind::budget_exceeded, "estimated " + estimate.str() + " gates exceeds --max-gates" );
  }

  std::vector<std::string> headers = { "tool=stconn", std::string( "version=" ) + STCONN_VERSION,
                                       "command=" + cmdline, "mode=" + to_string( mode ),
                                       "n=" + std::to_string( a.n ) };
  if ( mode != build_mode::explicit_plane )
    headers.push_back( "l=" + std::to_string( l ) );
  headers.push_back( "seed=" + std::to_string( a.seed ) );

  auto const build = [&]() -> built_circuit {
    switch ( mode )
    {
    case build_mode::squaring:
      return build_reach_leq( a.n, l );
    case build_mode::exact:
      return build_reach_exact( a.n, l );
    case build_mode::explicit_plane:
      return build_explicit( a.n );
    case build_mode::theorem:
      break;
    }
    theorem_options opt;
    opt.attempts = a.attempts;
    opt.allow_sampled = a.allow_sampled;
    opt.exact_budget = a.exact_budget;
    auto tb = build_theorem( a.n, l, a.seed, opt );
    headers.push_back( "levels=" + std::to_string( tb.schedule.k ) );
    for ( auto const& rec : tb.levels )
    {
      auto const& p = rec.params;
      std::ostringstream h;
      h << "level" << rec.level << "=family(" << p.n << "," << p.m << "," << p.s << "," << p.l << "," << p.d
        << ") seed=" << rec.seed << " attempts=" << rec.attempts_used
        << " validated=" << ( rec.validated_by == validation_mode::exact ? "exact" : "sampled" );
      headers.push_back( h.str() );
    }
    return std::move( tb.built );
  };
  auto const built = build();

  if ( a.max_gates && built.circuit.num_gates() > a.max_gates )
    throw error( error_kind::budget_exceeded,
                 std::to_string( built.circuit.num_gates() ) + " gates exceeds --max-gates" );

  std::ostringstream mc;
  write_circuit( mc, built.circuit );
  write_text_file( a.out, mc.str() );

  std::ostringstream csv;
  write_ledger_csv( csv, built.ledger, headers );
  auto const ledger_path = a.ledger.empty() ? a.out + ".ledger.csv" : a.ledger;
  write_text_file( ledger_path, csv.str() );

  out << "mode " << to_string( mode ) << "\n";
  out << "gates " << built.circuit.num_gates() << "\n";
  out << "depth " << measure_depth( built.circuit ) << "\n";
  out << "predicted " << built.ledger.total_predicted << "\n";
  out << "circuit " << a.out << "\n";
  out << "ledger " << ledger_path << "\n";
  return exit_ok;
}

/* ---- eval ---- */

int do_eval( std::string const& circuit_path, std::string const& graph_path, std::ostream& out )
{
  auto const c = load_circuit( circuit_path );
  auto const g = load_graph( graph_path );
  if ( g.size() != c.num_vertices() )
    throw usage_error( "graph has " + std::to_string( g.size() ) + " vertices, circuit expects " +
                       std::to_string( c.num_vertices() ) );
  auto const values = evaluate_all( c, g );
  for ( std::size_t i = 0; i < values.size(); ++i )
    out << ( i ? " " : "" ) << ( values[i] ? 1 : 0 );
  out << "\n";
  return exit_ok;
}

/* ---- verify ---- */

struct verify_args
{
  std::string circuit;
  std::size_t n = 0;
  std::string mode;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
  std::optional<std::size_t> l;
};

int do_verify( verify_args const& a, std::ostream& out )
{
  auto const c = load_circuit( a.circuit );
  if ( c.num_vertices() != a.n )
    throw usage_error( "circuit has " + std::to_string( c.num_vertices() ) + " vertices, --n is " +
                       std::to_string( a.n ) );
  if ( a.n < 2 )
    throw usage_error( "--n must be at least 2" );
  if ( c.outputs().empty() )
    throw usage_error( "circuit has no outputs" );
  if ( a.mode != "exhaustive" && a.mode != "random" && a.mode != "planted" )
    throw usage_error( "--mode must be exhaustive, random or planted" );
  if ( a.l && *a.l < 1 )
    throw usage_error( "--l must be positive" );

  batch_evaluator const eval( c );
  std::uint64_t const total = a.mode == "exhaustive" ? graph_count( a.n ) : a.samples;

  auto make = [&]( std::uint64_t i ) -> adjacency_matrix {
    if ( a.mode == "exhaustive" )
      return graph_from_code( a.n, i );
    auto const s = sample_seed( a.seed, i );
    rng r( s );
    double const p = densities[r.uniform( 0, 2 )];
    if ( a.mode == "random" )
      return random_graph( a.n, p, r.next() ).matrix;
    if ( i % 2 == 1 )
      return no_path_graph( a.n, p, r.next() ).matrix;
    std::size_t const max_len = std::min( a.n - 1, a.l.value_or( a.n - 1 ) );
    std::size_t const len = r.uniform( 1, max_len );
    return planted_path_graph( a.n, len, p / 4, r.next() ).matrix;
  };

  std::uint64_t checked = 0, skipped = 0, positives = 0;
  std::vector<adjacency_matrix> batch;
  std::vector<std::uint64_t> index;
  std::vector<bool> expected;
  for ( std::uint64_t i = 0; i < total; )
  {
    batch.clear();
    index.clear();
    expected.clear();
    for ( ; i < total && batch.size() < 64; ++i )
    {
      auto g = make( i );
      bool want;
      if ( a.l )
      {
        auto const d = shortest_path_length( g, 1, a.n );
        if ( d && *d > *a.l )
        {
          ++skipped;
          continue;
        }
        want = d.has_value();
      }
      else
        want = bfs_reachable( g, 1, a.n );
      batch.push_back( std::move( g ) );
      index.push_back( i );
      expected.push_back( want );
    }
    if ( batch.empty() )
      continue;
    auto const words = eval.run( batch );
    for ( std::size_t k = 0; k < batch.size(); ++k )
    {
      bool const got = ( words[0] >> k ) & 1;
      if ( got != expected[k] )
      {
        out << "MISMATCH sample " << index[k] << " expected " << expected[k] << " got " << got << "\n";
        write_graph( out, batch[k] );
        return exit_mismatch;
      }
      positives += expected[k];
    }
    checked += batch.size();
  }
  out << "PASS mode=" << a.mode << " checked=" << checked << " reachable=" << positives
      << " skipped=" << skipped << " seed=" << a.seed << "\n";
  return exit_ok;
}

/* ---- family ---- */

int print_check( family_check_result const& r, std::ostream& out )
{
  if ( r.passed )
  {
    out << "PASS subsets=" << r.subsets_checked << "\n";
    return exit_ok;
  }
  out << "FAIL subsets=" << r.subsets_checked << "\n";
  out << "witness " << format_set( r.witness ) << "\n";
  out << "avoiding_sets";
  for ( auto s : r.offending_sets )
    out << " " << s;
  out << "\n";
  return exit_mismatch;
}

/* ---- predict ---- */

int do_predict( std::string const& mode_name, std::string const& n_text, std::string const& l_text,
                std::string const& cmdline, std::ostream& out )
{
  auto const mode = parse_build_mode( mode_name );
  auto const n = parse_big( n_text, "--n" );
  if ( n < 2 )
    throw usage_error( "--n must be at least 2" );
  big_int const l = l_text.empty() ? big_int( n - 1 ) : parse_big( l_text, "--l" );
  auto const ledger = predict_depth( mode, n, l );
  std::vector<std::string> headers = { "tool=stconn", std::string( "version=" ) + STCONN_VERSION,
                                       "command=" + cmdline, "mode=" + to_string( mode ), "n=" + n_text };
  if ( mode != build_mode::explicit_plane )
    headers.push_back( "l=" + ( l_text.empty() ? std::string( "n-1" ) : l_text ) );
  write_ledger_csv( out, ledger, headers );
  out << "# ratio=" << std::setprecision( 6 ) << depth_ratio( ledger, n ) << "\n";
  out << "# overhead=" << std::setprecision( 6 ) << ledger.overhead << "\n";
  return exit_ok;
}

/* ---- stats ---- */

int do_stats( std::string const& path, std::ostream& out )
{
  auto const c = load_circuit( path );
  auto const v = validate( c );
  out << "n " << c.num_vertices() << "\n";
  out << "gates " << c.num_gates() << "\n";
  out << "outputs " << c.outputs().size() << "\n";
  out << "depth " << ( v ? 0 : measure_depth( c ) ) << "\n";
  out << "valid " << ( v ? "no: " + v->message : std::string( "yes" ) ) << "\n";
  return v ? exit_mismatch : exit_ok;
}

int exit_code_for( error_kind kind )
{
  switch ( kind )
  {
  case error_kind::budget_exceeded:
    return exit_budget;
  case error_kind::construction_failed:
    return exit_failed;
  case error_kind::family_violation:
    return exit_mismatch;
  default:
    return exit_usage;
  }
}

} // namespace

int run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "Monotone circuits for s-t connectivity", "stconn" };
  app.set_version_flag( "--version", STCONN_VERSION );
  app.require_subcommand( 1 );

  build_args ba;
  auto* build = app.add_subcommand( "build", "build a circuit and its depth ledger" );
  build->add_option( "--mode", ba.mode, "squaring|exact|explicit|theorem" )->required();
  build->add_option( "--n", ba.n, "number of vertices" )->required();
  build->add_option( "--l", ba.l, "path length budget (default n-1)" );
  build->add_option( "--seed", ba.seed, "seed for family sampling" );
  build->add_option( "--attempts", ba.attempts, "family sampling attempts per level" );
  build->add_flag( "--allow-sampled", ba.allow_sampled, "accept Monte Carlo family validation" );
  build->add_option( "--exact-budget", ba.exact_budget, "largest exact family check" );
  build->add_option( "--max-gates", ba.max_gates, "refuse larger circuits (0 = no limit)" );
  build->add_option( "--out", ba.out, "MCIRC output file" )->required();
  build->add_option( "--ledger", ba.ledger, "ledger CSV (default <out>.ledger.csv)" );

  std::string eval_circuit, eval_graph;
  auto* eval = app.add_subcommand( "eval", "evaluate a circuit on one graph" );
  eval->add_option( "--circuit", eval_circuit )->required();
  eval->add_option( "--graph", eval_graph )->required();

  verify_args va;
  auto* verify = app.add_subcommand( "verify", "compare a circuit with breadth-first search" );
  verify->add_option( "--circuit", va.circuit )->required();
  verify->add_option( "--n", va.n )->required();
  verify->add_option( "--mode", va.mode, "exhaustive|random|planted" )->required();
  verify->add_option( "--samples", va.samples );
  verify->add_option( "--seed", va.seed );
  verify->add_option( "--l", va.l, "restrict to promise instances" );

  auto* family = app.add_subcommand( "family", "covering families" );
  family->require_subcommand( 1 );
  std::size_t plane_n = 0;
  std::string plane_out;
  auto* plane = family->add_subcommand( "plane", "line family of the affine plane" );
  plane->add_option( "--n", plane_n )->required();
  plane->add_option( "--out", plane_out )->required();

  family_params sp;
  std::uint64_t sample_seed_arg = 1;
  std::size_t sample_attempts = 10;
  bool sample_allow_sampled = false;
  std::uint64_t sample_budget = default_exact_budget;
  std::string sample_out;
  auto* sample = family->add_subcommand( "sample", "sample and validate a random family" );
  sample->add_option( "--n", sp.n )->required();
  sample->add_option( "--m", sp.m )->required();
  sample->add_option( "--s", sp.s )->required();
  sample->add_option( "--l", sp.l )->required();
  sample->add_option( "--d", sp.d )->required();
  sample->add_option( "--seed", sample_seed_arg );
  sample->add_option( "--attempts", sample_attempts );
  sample->add_flag( "--allow-sampled", sample_allow_sampled );
  sample->add_option( "--exact-budget", sample_budget );
  sample->add_option( "--out", sample_out )->required();

  std::string check_file, check_mode;
  std::uint64_t check_trials = 100'000, check_seed = 1, check_budget = default_exact_budget;
  auto* check = family->add_subcommand( "check", "check the covering condition" );
  check->add_option( "--file", check_file )->required();
  check->add_option( "--mode", check_mode, "exact|sampled" )->required();
  check->add_option( "--trials", check_trials );
  check->add_option( "--seed", check_seed );
  check->add_option( "--budget", check_budget );

  std::string pred_mode, pred_n, pred_l;
  auto* predict = app.add_subcommand( "predict", "depth ledger without building" );
  predict->add_option( "--mode", pred_mode )->required();
  predict->add_option( "--n", pred_n, "decimal or 2^E, E <= 1024" )->required();
  predict->add_option( "--l", pred_l );

  std::string stats_circuit;
  auto* stats = app.add_subcommand( "stats", "depth, gate count and validation" );
  stats->add_option( "--circuit", stats_circuit )->required();

  auto const cmdline = command_line( args );
  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( CLI::CallForHelp const& )
  {
    out << app.help();
    return exit_ok;
  }
  catch ( CLI::CallForAllHelp const& )
  {
    out << app.help( "", CLI::AppFormatMode::All );
    return exit_ok;
  }
  catch ( CLI::CallForVersion const& )
  {
    out << STCONN_VERSION << "\n";
    return exit_ok;
  }
  catch ( CLI::ParseError const& e )
  {
    err << "error: " << e.what() << "\n\n" << app.help( "", CLI::AppFormatMode::All );
    return exit_usage;
  }

  try
  {
    if ( build->parsed() )
      return do_build( ba, cmdline, out );
    if ( eval->parsed() )
      return do_eval( eval_circuit, eval_graph, out );
    if ( verify->parsed() )
      return do_verify( va, out );
    if ( plane->parsed() )
    {
      auto const f = plane_family( plane_n );
      save_family( plane_out, f );
      auto const& p = f.params();
      out << "family " << p.n << " " << p.m << " " << p.s << " " << p.l << " " << p.d << "\n";
      return exit_ok;
    }
    if ( sample->parsed() )
    {
      family_search_options opt;
      opt.attempts = sample_attempts;
      opt.allow_sampled = sample_allow_sampled;
      opt.exact_budget = sample_budget;
      auto const r = find_family( sp, sample_seed_arg, opt );
      save_family( sample_out, r.family );
      out << "seed " << r.seed << "\n";
      out << "attempts " << r.attempts_used << "\n";
      out << "validated " << ( r.validated_by == validation_mode::exact ? "exact" : "sampled" ) << "\n";
      return exit_ok;
    }
    if ( check->parsed() )
    {
      auto const f = load_family( check_file );
      if ( check_mode == "exact" )
        return print_check( check_family_exact( f, check_budget ), out );
      if ( check_mode == "sampled" )
        return print_check( check_family_sampled( f, check_trials, check_seed ), out );
      throw usage_error( "--mode must be exact or sampled" );
    }
    if ( predict->parsed() )
      return do_predict( pred_mode, pred_n, pred_l, cmdline, out );
    if ( stats->parsed() )
      return do_stats( stats_circuit, out );
  }
  catch ( usage_error const& e )
  {
    err << "error: " << e.what() << "\n\n" << app.help( "", CLI::AppFormatMode::All );
    return exit_usage;
  }
  catch ( error const& e )
  {
    err << "error: " << e.what() << "\n";
    auto const code = exit_code_for( e.kind() );
    if ( code == exit_usage )
      err << "\n" << app.help( "", CLI::AppFormatMode::All );
    return code;
  }
  catch ( std::bad_alloc const& )
  {
    err << "error: out of memory\n";
    return exit_budget;
  }
  return exit_usage;
}

} // namespace stconn::cli
