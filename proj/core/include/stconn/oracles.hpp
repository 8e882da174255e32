#pragma once

#include <stconn/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stconn
{

/* breadth-first reachability; src == dst is reachable by the empty path */
bool bfs_reachable( adjacency_matrix const& graph, std::size_t src, std::size_t dst );

/* BFS distance in edges, nullopt when dst is unreachable */
std::optional<std::size_t> shortest_path_length( adjacency_matrix const& graph, std::size_t src, std::size_t dst );

/* vertices of one shortest path src..dst (inclusive), nullopt when unreachable */
std::optional<std::vector<std::size_t>> shortest_path( adjacency_matrix const& graph, std::size_t src,
                                                       std::size_t dst );

/* is there a walk of exactly `length` edges from src to dst (matrix-power semantics) */
bool exact_length_walk_exists( adjacency_matrix const& graph, std::size_t src, std::size_t dst, std::size_t length );

/* all 2^(n^2) graphs, indexed so that g_11 is the most significant bit; n <= 4 */
std::uint64_t graph_count( std::size_t n );
adjacency_matrix graph_from_code( std::size_t n, std::uint64_t code );

enum class sample_kind
{
  exhaustive,
  uniform,
  planted_path,
  no_path
};

struct graph_sample
{
  adjacency_matrix matrix;
  std::uint64_t seed = 0;
  sample_kind kind = sample_kind::uniform;
  double edge_prob = 0.0;
  std::size_t path_length = 0;
};

/* every ordered pair (including loops) is an edge with probability edge_prob */
graph_sample random_graph( std::size_t n, double edge_prob, std::uint64_t seed );

/*! \brief Simple path 1 -> ... -> n of `path_len` edges plus noise.
 *
 * Intermediates are distinct random vertices from 2..n-1. Noise edges are
 * added independently afterwards, so the shortest path may get shorter
 * but never longer.
 */
graph_sample planted_path_graph( std::size_t n, std::size_t path_len, double noise_prob, std::uint64_t seed );

/*! \brief Random graph with no path from 1 to n.
 *
 * Vertices are split at random into a part containing 1 and a part
 * containing n; every pair except those leading from the first part into
 * the second is an edge with probability edge_prob.
 */
graph_sample no_path_graph( std::size_t n, double edge_prob, std::uint64_t seed );

} // namespace stconn
