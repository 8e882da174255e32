#include <stconn/numeric.hpp>

#include <stconn/error.hpp>

namespace stconn
{

std::uint64_t ceil_log2( big_int const& x )
{
  require( x >= 1, "ceil_log2 of zero" );
  if ( x == 1 )
  {
    return 0;
  }
  big_int const y = x - 1;
  return static_cast<std::uint64_t>( boost::multiprecision::msb( y ) ) + 1;
}

big_int isqrt( big_int const& x )
{
  require( x >= 0, "isqrt of a negative number" );
  return boost::multiprecision::sqrt( x );
}

big_int pow2( std::uint64_t e )
{
  big_int r = 1;
  r <<= static_cast<unsigned>( e );
  return r;
}

} // namespace stconn
