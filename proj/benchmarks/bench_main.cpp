#include <stconn/affine_plane.hpp>
#include <stconn/constructions.hpp>
#include <stconn/evaluator.hpp>
#include <stconn/family.hpp>
#include <stconn/oracles.hpp>
#include <stconn/predict.hpp>

#include <benchmark/benchmark.h>

#include <vector>

using namespace stconn;

static void BM_build_reach_leq( benchmark::State& state )
{
  auto const n = static_cast<std::size_t>( state.range( 0 ) );
  for ( auto _ : state )
    benchmark::DoNotOptimize( build_reach_leq( n, n - 1 ) );
}
BENCHMARK( BM_build_reach_leq )->Arg( 16 )->Arg( 32 )->Arg( 64 )->Unit( benchmark::kMillisecond );

static void BM_build_explicit( benchmark::State& state )
{
  auto const n = static_cast<std::size_t>( state.range( 0 ) );
  std::size_t gates = 0;
  for ( auto _ : state )
  {
    auto b = build_explicit( n );
    gates = b.circuit.num_gates();
    benchmark::DoNotOptimize( b );
  }
  state.counters["gates"] = static_cast<double>( gates );
}
BENCHMARK( BM_build_explicit )->Arg( 16 )->Arg( 25 )->Arg( 64 )->Unit( benchmark::kMillisecond );

// graphs per second through the bit-parallel evaluator
static void BM_evaluate_explicit( benchmark::State& state )
{
  auto const n = static_cast<std::size_t>( state.range( 0 ) );
  auto const built = build_explicit( n );
  batch_evaluator const eval( built.circuit );
  std::vector<adjacency_matrix> graphs;
  for ( std::uint64_t i = 0; i < 64; ++i )
    graphs.push_back( random_graph( n, 0.1, i ).matrix );
  for ( auto _ : state )
    benchmark::DoNotOptimize( eval.run( graphs ) );
  state.SetItemsProcessed( state.iterations() * 64 );
}
BENCHMARK( BM_evaluate_explicit )->Arg( 16 )->Arg( 64 );

static void BM_bfs( benchmark::State& state )
{
  auto const n = static_cast<std::size_t>( state.range( 0 ) );
  auto const g = random_graph( n, 0.1, 1 ).matrix;
  for ( auto _ : state )
    benchmark::DoNotOptimize( bfs_reachable( g, 1, n ) );
}
BENCHMARK( BM_bfs )->Arg( 16 )->Arg( 64 );

static void BM_check_family_exact( benchmark::State& state )
{
  auto const f = find_family( { 20, 20, 20, 12, 6 }, 0 ).family;
  for ( auto _ : state )
    benchmark::DoNotOptimize( check_family_exact( f ) );
  state.SetItemsProcessed( state.iterations() * exact_check_cost( f.params() ) );
}
BENCHMARK( BM_check_family_exact )->Unit( benchmark::kMillisecond );

static void BM_check_family_sampled( benchmark::State& state )
{
  auto const f = plane_family( 49 );
  for ( auto _ : state )
    benchmark::DoNotOptimize( check_family_sampled( f, 10'000, 1 ) );
  state.SetItemsProcessed( state.iterations() * 10'000 );
}
BENCHMARK( BM_check_family_sampled )->Unit( benchmark::kMillisecond );

static void BM_predict_theorem( benchmark::State& state )
{
  auto const n = pow2( static_cast<std::uint64_t>( state.range( 0 ) ) );
  for ( auto _ : state )
    benchmark::DoNotOptimize( predict_depth( build_mode::theorem, n, n - 1 ) );
}
BENCHMARK( BM_predict_theorem )->Arg( 64 )->Arg( 1024 );

BENCHMARK_MAIN();
