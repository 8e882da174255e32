#include <stconn/affine_plane.hpp>

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <bit>
#include <random>

namespace stconn
{

bool is_prime( std::uint64_t x )
{
  if ( x < 2 )
  {
    return false;
  }
  for ( std::uint64_t p = 2; p * p <= x; ++p )
  {
    if ( x % p == 0 )
    {
      return false;
    }
  }
  return true;
}

std::uint64_t minimal_prime_q( std::uint64_t n )
{
  require( n >= 1, "minimal_prime_q needs n >= 1" );
  std::uint64_t q = 2;
  while ( q * q < n || !is_prime( q ) )
  {
    ++q;
  }
  return q;
}

big_int minimal_prime_q( big_int const& n )
{
  require( n >= 1, "minimal_prime_q needs n >= 1" );
  big_int q = isqrt( n );
  if ( q * q < n )
  {
    ++q;
  }
  if ( q < 2 )
  {
    q = 2;
  }
  /* fixed-seed witnesses keep the search reproducible */
  std::mt19937_64 gen( 0x7a3c9e1bu );
  auto probably_prime = [&]( big_int const& x ) {
    static constexpr unsigned small[] = { 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47 };
    for ( auto p : small )
    {
      if ( x == p )
      {
        return true;
      }
      if ( x % p == 0 )
      {
        return false;
      }
    }
    return boost::multiprecision::miller_rabin_test( x, 32, gen );
  };
  while ( !probably_prime( q ) )
  {
    ++q;
  }
  return q;
}

std::uint64_t minimal_d( std::uint64_t q )
{
  require( q >= 2, "minimal_d needs q >= 2" );
  return static_cast<std::uint64_t>( minimal_d( big_int( q ) ) );
}

big_int minimal_d( big_int const& q )
{
  require( q >= 2, "minimal_d needs q >= 2" );
  auto f = [&]( big_int const& d ) -> big_int { return d * d + 2 * q * d - q * q * q; };
  /* the positive root is sqrt(q^2 + q^3) - q */
  big_int d = isqrt( q * q + q * q * q ) - q;
  if ( d < 1 )
  {
    d = 1;
  }
  while ( d > 1 && f( d - 1 ) > 0 )
  {
    --d;
  }
  while ( f( d ) <= 0 )
  {
    ++d;
  }
  return d;
}

affine_plane_family affine_lines( std::uint32_t q )
{
  require( is_prime( q ), "affine plane needs a prime order" );
  affine_plane_family plane;
  plane.q = q;
  plane.d = static_cast<std::uint32_t>( minimal_d( std::uint64_t{ q } ) );
  plane.point_subset.resize( std::size_t{ q } * q );
  for ( std::uint32_t p = 0; p < q * q; ++p )
  {
    plane.point_subset[p] = p;
  }

  auto point = [q]( std::uint32_t x, std::uint32_t y ) { return x * q + y; };
  /* a x + y + c = 0 */
  for ( std::uint32_t a = 0; a < q; ++a )
  {
    for ( std::uint32_t c = 0; c < q; ++c )
    {
      std::vector<std::uint32_t> line;
      for ( std::uint32_t x = 0; x < q; ++x )
      {
        auto const y = ( 2 * q * q - a * x - c ) % q;
        line.push_back( point( x, y ) );
      }
      std::sort( line.begin(), line.end() );
      plane.lines.push_back( std::move( line ) );
    }
  }
  /* x + c = 0 */
  for ( std::uint32_t c = 0; c < q; ++c )
  {
    auto const x = ( q - c ) % q;
    std::vector<std::uint32_t> line;
    for ( std::uint32_t y = 0; y < q; ++y )
    {
      line.push_back( point( x, y ) );
    }
    plane.lines.push_back( std::move( line ) );
  }
  return plane;
}

boost::rational<std::int64_t> line_cover_bound( std::int64_t q, std::int64_t u )
{
  require( q >= 2, "line_cover_bound needs q >= 2" );
  require( u >= 0 && u <= q * q, "uncovered count must lie in 0..q^2" );
  return { ( q + 1 ) * ( q * q - u ), u + q };
}

covering_family plane_family( std::size_t n )
{
  require( n >= 1, "plane_family needs n >= 1" );
  auto const q = static_cast<std::uint32_t>( minimal_prime_q( std::uint64_t{ n } ) );
  auto const plane = affine_lines( q );
  std::vector<vertex_set> sets;
  sets.reserve( plane.lines.size() );
  for ( auto const& line : plane.lines )
  {
    vertex_set set;
    for ( auto p : line )
    {
      if ( p < n )
      {
        set.push_back( p + 1 );
      }
    }
    sets.push_back( std::move( set ) );
  }
  family_params const params{ n, plane.lines.size(), q, n, plane.d };
  return covering_family( params, std::move( sets ) );
}

cover_bound_result verify_cover_bound_exhaustive( std::uint32_t q )
{
  auto const plane = affine_lines( q );
  auto const lines = plane.lines.size();
  require( lines <= 24, "exhaustive line-subset enumeration is limited to q(q+1) <= 24" );
  auto const points = std::size_t{ q } * q;

  std::vector<std::uint64_t> line_mask( lines, 0 );
  for ( std::size_t i = 0; i < lines; ++i )
  {
    for ( auto p : plane.lines[i] )
    {
      line_mask[i] |= std::uint64_t{ 1 } << p;
    }
  }

  cover_bound_result result;
  for ( std::uint64_t subset = 0; subset < ( std::uint64_t{ 1 } << lines ); ++subset )
  {
    ++result.subsets_checked;
    std::uint64_t covered = 0;
    for ( std::size_t i = 0; i < lines; ++i )
    {
      if ( ( subset >> i ) & 1u )
      {
        covered |= line_mask[i];
      }
    }
    auto const count = static_cast<std::int64_t>( std::popcount( subset ) );
    auto const u = static_cast<std::int64_t>( points ) - std::popcount( covered );
    if ( boost::rational<std::int64_t>( count ) > line_cover_bound( q, u ) )
    {
      result.passed = false;
      result.uncovered = u;
      for ( std::size_t i = 0; i < lines; ++i )
      {
        if ( ( subset >> i ) & 1u )
        {
          result.counterexample_lines.push_back( i );
        }
      }
      return result;
    }
  }
  return result;
}

} // namespace stconn
