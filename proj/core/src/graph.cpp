#include <stconn/graph.hpp>

#include <stconn/error.hpp>

#include <algorithm>
#include <numeric>

namespace stconn
{

adjacency_matrix::adjacency_matrix( std::size_t n )
    : n_( n ), bits_( n * n, 0 )
{
}

std::size_t adjacency_matrix::index( std::size_t i, std::size_t j ) const
{
  if ( i < 1 || j < 1 || i > n_ || j > n_ )
  {
    throw error( error_kind::invalid_parameter, "vertex index out of range" );
  }
  return ( i - 1 ) * n_ + ( j - 1 );
}

std::size_t adjacency_matrix::edge_count() const noexcept
{
  return static_cast<std::size_t>( std::count( bits_.begin(), bits_.end(), std::uint8_t{ 1 } ) );
}

adjacency_matrix& adjacency_matrix::operator|=( adjacency_matrix const& other )
{
  require( other.n_ == n_, "adjacency matrix dimension mismatch" );
  for ( std::size_t k = 0; k < bits_.size(); ++k )
  {
    bits_[k] |= other.bits_[k];
  }
  return *this;
}

} // namespace stconn
