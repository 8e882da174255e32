#include <stconn/predict.hpp>

#include <stconn/affine_plane.hpp>
#include <stconn/error.hpp>
#include <stconn/theorem.hpp>

#include <string>

namespace stconn
{

build_mode parse_build_mode( std::string_view name )
{
  if ( name == "squaring" )
    return build_mode::squaring;
  if ( name == "exact" )
    return build_mode::exact;
  if ( name == "explicit" )
    return build_mode::explicit_plane;
  if ( name == "theorem" )
    return build_mode::theorem;
  throw error( error_kind::invalid_parameter, "unknown mode '" + std::string( name ) + "'" );
}

std::string to_string( build_mode mode )
{
  switch ( mode )
  {
  case build_mode::squaring:
    return "squaring";
  case build_mode::exact:
    return "exact";
  case build_mode::explicit_plane:
    return "explicit";
  case build_mode::theorem:
    return "theorem";
  }
  return "unknown";
}

namespace
{

std::uint64_t popcount( big_int x )
{
  std::uint64_t count = 0;
  while ( x > 0 )
  {
    count += static_cast<std::uint64_t>( x & 1 );
    x >>= 1;
  }
  return count;
}

} // namespace

std::int64_t squaring_depth( big_int const& n, big_int const& l )
{
  return static_cast<std::int64_t>( ceil_log2( l ) * ( 1 + ceil_log2( n ) ) );
}

std::int64_t closure_depth( big_int const& n, big_int const& d )
{
  return static_cast<std::int64_t>( ceil_log2( big_int( 2 * d ) ) * ( 1 + ceil_log2( n ) ) );
}

std::int64_t exact_power_depth( big_int const& n, big_int const& l )
{
  require( l >= 1, "walk length must be positive" );
  auto const per_level = 1 + ceil_log2( n );
  auto const squarings = static_cast<std::uint64_t>( boost::multiprecision::msb( l ) );
  auto const factors = static_cast<std::uint64_t>( popcount( l ) );
  return static_cast<std::int64_t>( ( squarings + ceil_log2( big_int( factors ) ) ) * per_level );
}

depth_ledger predict_depth( build_mode mode, big_int const& n, big_int const& l )
{
  require( n >= 2, "prediction needs n >= 2" );
  depth_ledger ledger;
  switch ( mode )
  {
  case build_mode::squaring:
    require( l >= 1, "path budget must be positive" );
    ledger.add( "squaring", squaring_depth( n, l ), std::nullopt );
    break;
  case build_mode::exact:
    ledger.add( "powers and product tree", exact_power_depth( n, l ), std::nullopt );
    break;
  case build_mode::explicit_plane:
  {
    auto const q = minimal_prime_q( n );
    auto const d = minimal_d( q );
    require( d <= n, "plane deficiency exceeds n" );
    ledger.add( "inner squaring", squaring_depth( q + 2, n / d ), std::nullopt );
    ledger.add( "closure", closure_depth( n, d ), std::nullopt );
    ledger.add( "or_tree", static_cast<std::int64_t>( ceil_log2( big_int( q * ( q + 1 ) ) ) ), std::nullopt );
    break;
  }
  case build_mode::theorem:
  {
    auto const s = make_theorem_schedule( n, l );
    auto const& last = s.levels.back();
    ledger.add( "level " + std::to_string( s.k ) + " squaring", squaring_depth( last.n, last.l ), std::nullopt );
    for ( auto i = s.k; i-- > 0; )
    {
      auto const prefix = "level " + std::to_string( i ) + " ";
      ledger.add( prefix + "closure", closure_depth( s.levels[i].n, s.d_param ), std::nullopt );
      ledger.add( prefix + "or_tree", static_cast<std::int64_t>( ceil_log2( s.levels[i].n ) ), std::nullopt );
    }
    break;
  }
  }
  return ledger;
}

double depth_ratio( depth_ledger const& ledger, big_int const& n )
{
  auto const lg = boost::multiprecision::log2( big_float( n ) );
  return static_cast<double>( big_float( ledger.total_predicted ) / ( lg * lg ) );
}

} // namespace stconn
