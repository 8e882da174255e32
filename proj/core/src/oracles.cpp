#include <stconn/oracles.hpp>

#include <stconn/error.hpp>
#include <stconn/rng.hpp>

#include <deque>

namespace stconn
{

namespace
{

void check_vertex( adjacency_matrix const& graph, std::size_t v )
{
  require( v >= 1 && v <= graph.size(), "vertex out of range" );
}

/* BFS parents from src; parent[src] = src, 0 = unvisited */
std::vector<std::size_t> bfs_parents( adjacency_matrix const& graph, std::size_t src )
{
  auto const n = graph.size();
  std::vector<std::size_t> parent( n + 1, 0 );
  std::deque<std::size_t> queue{ src };
  parent[src] = src;
  while ( !queue.empty() )
  {
    auto const u = queue.front();
    queue.pop_front();
    for ( std::size_t v = 1; v <= n; ++v )
    {
      if ( graph( u, v ) && parent[v] == 0 )
      {
        parent[v] = u;
        queue.push_back( v );
      }
    }
  }
  return parent;
}

} // namespace

bool bfs_reachable( adjacency_matrix const& graph, std::size_t src, std::size_t dst )
{
  check_vertex( graph, src );
  check_vertex( graph, dst );
  return bfs_parents( graph, src )[dst] != 0;
}

std::optional<std::vector<std::size_t>> shortest_path( adjacency_matrix const& graph, std::size_t src,
                                                       std::size_t dst )
{
  check_vertex( graph, src );
  check_vertex( graph, dst );
  auto const parent = bfs_parents( graph, src );
  if ( parent[dst] == 0 )
  {
    return std::nullopt;
  }
  std::vector<std::size_t> path{ dst };
  while ( path.back() != src )
  {
    path.push_back( parent[path.back()] );
  }
  return std::vector<std::size_t>( path.rbegin(), path.rend() );
}

std::optional<std::size_t> shortest_path_length( adjacency_matrix const& graph, std::size_t src, std::size_t dst )
{
  auto const path = shortest_path( graph, src, dst );
  if ( !path )
  {
    return std::nullopt;
  }
  return path->size() - 1;
}

bool exact_length_walk_exists( adjacency_matrix const& graph, std::size_t src, std::size_t dst, std::size_t length )
{
  check_vertex( graph, src );
  check_vertex( graph, dst );
  auto const n = graph.size();
  /* frontier[v]: some walk of the current length ends at v */
  std::vector<std::uint8_t> frontier( n + 1, 0 );
  frontier[src] = 1;
  for ( std::size_t step = 0; step < length; ++step )
  {
    std::vector<std::uint8_t> next( n + 1, 0 );
    for ( std::size_t u = 1; u <= n; ++u )
    {
      if ( !frontier[u] )
      {
        continue;
      }
      for ( std::size_t v = 1; v <= n; ++v )
      {
        next[v] |= graph( u, v ) ? 1 : 0;
      }
    }
    frontier = std::move( next );
  }
  return frontier[dst] != 0;
}

std::uint64_t graph_count( std::size_t n )
{
  if ( n < 1 || n > 4 )
  {
    throw error( error_kind::budget_exceeded, "exhaustive graph enumeration is limited to n <= 4" );
  }
  return std::uint64_t{ 1 } << ( n * n );
}

adjacency_matrix graph_from_code( std::size_t n, std::uint64_t code )
{
  require( code < graph_count( n ), "graph code out of range" );
  adjacency_matrix m( n );
  auto const bits = n * n;
  for ( std::size_t k = 0; k < bits; ++k )
  {
    if ( ( code >> ( bits - 1 - k ) ) & 1u )
    {
      m.set( k / n + 1, k % n + 1 );
    }
  }
  return m;
}

graph_sample random_graph( std::size_t n, double edge_prob, std::uint64_t seed )
{
  require( n >= 1, "graph needs at least one vertex" );
  require( edge_prob >= 0.0 && edge_prob <= 1.0, "edge probability outside [0,1]" );
  rng gen( seed );
  graph_sample s{ adjacency_matrix( n ), seed, sample_kind::uniform, edge_prob, 0 };
  for ( std::size_t i = 1; i <= n; ++i )
  {
    for ( std::size_t j = 1; j <= n; ++j )
    {
      if ( gen.bernoulli( edge_prob ) )
      {
        s.matrix.set( i, j );
      }
    }
  }
  return s;
}

graph_sample planted_path_graph( std::size_t n, std::size_t path_len, double noise_prob, std::uint64_t seed )
{
  require( n >= 2, "planted path needs at least two vertices" );
  require( path_len >= 1 && path_len <= n - 1, "path length must lie in 1..n-1" );
  require( noise_prob >= 0.0 && noise_prob <= 1.0, "noise probability outside [0,1]" );
  rng gen( seed );
  graph_sample s{ adjacency_matrix( n ), seed, sample_kind::planted_path, noise_prob, path_len };

  /* distinct intermediates from 2..n-1 */
  std::vector<std::size_t> path{ 1 };
  if ( path_len > 1 )
  {
    for ( auto v : gen.sample_distinct( static_cast<std::uint32_t>( n - 2 ), static_cast<std::uint32_t>( path_len - 1 ) ) )
    {
      path.push_back( v + 1 );
    }
  }
  path.push_back( n );
  for ( std::size_t k = 0; k + 1 < path.size(); ++k )
  {
    s.matrix.set( path[k], path[k + 1] );
  }
  for ( std::size_t i = 1; i <= n; ++i )
  {
    for ( std::size_t j = 1; j <= n; ++j )
    {
      if ( gen.bernoulli( noise_prob ) )
      {
        s.matrix.set( i, j );
      }
    }
  }
  return s;
}

graph_sample no_path_graph( std::size_t n, double edge_prob, std::uint64_t seed )
{
  require( n >= 2, "no-path graph needs at least two vertices" );
  require( edge_prob >= 0.0 && edge_prob <= 1.0, "edge probability outside [0,1]" );
  rng gen( seed );
  graph_sample s{ adjacency_matrix( n ), seed, sample_kind::no_path, edge_prob, 0 };

  std::vector<std::uint8_t> source_side( n + 1, 0 );
  source_side[1] = 1;
  for ( std::size_t v = 2; v < n; ++v )
  {
    source_side[v] = gen.bernoulli( 0.5 ) ? 1 : 0;
  }
  for ( std::size_t i = 1; i <= n; ++i )
  {
    for ( std::size_t j = 1; j <= n; ++j )
    {
      auto const crosses = source_side[i] && !source_side[j];
      if ( gen.bernoulli( edge_prob ) && !crosses )
      {
        s.matrix.set( i, j );
      }
    }
  }
  return s;
}

} // namespace stconn
