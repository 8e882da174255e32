#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace stconn
{

/*! \brief Square boolean adjacency matrix over vertices 1..n.
 *
 * Entry (i,j) set means the directed edge i -> j. Indices are 1-based to
 * match the vertex labels used everywhere else in the library.
 */
class adjacency_matrix
{
public:
  adjacency_matrix() = default;
  explicit adjacency_matrix( std::size_t n );

  std::size_t size() const noexcept { return n_; }

  bool operator()( std::size_t i, std::size_t j ) const { return bits_[index( i, j )] != 0; }
  void set( std::size_t i, std::size_t j, bool value = true ) { bits_[index( i, j )] = value ? 1 : 0; }

  std::size_t edge_count() const noexcept;

  /* entrywise OR; dimensions must agree */
  adjacency_matrix& operator|=( adjacency_matrix const& other );

  bool operator==( adjacency_matrix const& ) const = default;

private:
  std::size_t index( std::size_t i, std::size_t j ) const;

  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

} // namespace stconn
