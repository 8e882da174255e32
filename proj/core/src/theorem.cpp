#include <stconn/theorem.hpp>

#include <stconn/error.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <limits>
#include <string>

namespace stconn
{

namespace
{

bool is_power_of_two( big_int const& x )
{
  return x > 0 && ( x & ( x - 1 ) ) == 0;
}

/* log2 n, exact when n is a power of two */
big_float log2_of( big_int const& n )
{
  if ( is_power_of_two( n ) )
  {
    return big_float( boost::multiprecision::msb( n ) );
  }
  return boost::multiprecision::log2( big_float( n ) );
}

/* [2^sqrt(log2 n)], exact when log2 n is a perfect square */
big_int theorem_d( big_int const& n )
{
  if ( is_power_of_two( n ) )
  {
    big_int const e = boost::multiprecision::msb( n );
    auto const r = isqrt( e );
    if ( r * r == e )
    {
      return pow2( static_cast<std::uint64_t>( r ) );
    }
  }
  auto const value = boost::multiprecision::exp2( boost::multiprecision::sqrt( log2_of( n ) ) );
  return static_cast<big_int>( boost::multiprecision::floor( value ) );
}

std::size_t to_size( big_int const& x )
{
  require( x >= 0 && x <= big_int( std::numeric_limits<std::uint32_t>::max() ), "schedule value too large to build" );
  return static_cast<std::size_t>( x );
}

} // namespace

theorem_schedule make_theorem_schedule( big_int const& n, big_int const& l )
{
  require( l >= 2, "theorem schedule needs l >= 2" );
  require( l < n, "theorem schedule needs l < n" );

  theorem_schedule s;
  s.n = n;
  s.l = l;
  s.d_param = theorem_d( n );
  require( s.d_param >= 2, "theorem schedule needs d >= 2" );

  big_int power = s.d_param;
  while ( power <= l )
  {
    ++s.k;
    power *= s.d_param;
  }

  s.growth_q = 2 * log2_of( n ) * boost::multiprecision::log( big_float( 2 ) ) + 3;

  big_int d_power = 1;
  big_float ratio = 1;
  for ( std::uint64_t i = 0; i <= s.k; ++i )
  {
    theorem_level level;
    level.l = l / d_power;
    level.n = i == 0 ? n : static_cast<big_int>( boost::multiprecision::floor( big_float( n ) * ratio ) );
    s.levels.push_back( level );
    d_power *= s.d_param;
    ratio = ratio * s.growth_q / big_float( s.d_param );
  }
  return s;
}

family_params theorem_schedule::level_params( std::size_t i ) const
{
  require( i < k, "level index out of range" );
  auto const ni = to_size( levels[i].n );
  auto const next = to_size( levels[i + 1].n );
  require( next >= 3, "next level too small for a family" );
  return { ni, ni, next - 2, to_size( levels[i].l ), to_size( d_param ) };
}

bool theorem_schedule::growth_inequality_holds( std::size_t i ) const
{
  require( i < k, "level index out of range" );
  auto const ln_n = log2_of( n ) * boost::multiprecision::log( big_float( 2 ) );
  auto const lhs = big_float( levels[i + 1].n - 2 );
  auto const rhs = 2 * ln_n / big_float( d_param ) * big_float( levels[i].n );
  return lhs > rhs;
}

std::uint64_t theorem_level_seed( std::uint64_t seed, std::size_t level )
{
  return seed + 0x9e3779b97f4a7c15ull * ( level + 1 );
}

theorem_build build_theorem( std::size_t n, std::size_t l, std::uint64_t seed, theorem_options const& options )
{
  auto schedule = make_theorem_schedule( n, l );
  auto const k = schedule.k;

  auto built = build_reach_leq( to_size( schedule.levels[k].n ), to_size( schedule.levels[k].l ) );
  built.ledger.stages.front().label = "level " + std::to_string( k ) + " squaring";

  std::vector<theorem_level_record> records;
  for ( auto i = k; i-- > 0; )
  {
    auto const params = schedule.level_params( i );
    family_search_options search;
    search.attempts = options.attempts;
    search.allow_sampled = options.allow_sampled;
    search.exact_budget = options.exact_budget;
    search.sampled_trials = options.sampled_trials;
    auto found = find_family( params, theorem_level_seed( seed, i ), search );
    records.push_back( { i, params, found.seed, found.validated_by, found.attempts_used } );
    built = compose_family( found.family, built, "level " + std::to_string( i ) + " " );
  }
  return { std::move( built ), std::move( schedule ), std::move( records ) };
}

std::optional<std::pair<std::size_t, std::size_t>> find_theorem_case( std::size_t max_n, std::size_t min_inner_budget )
{
  for ( std::size_t n = 3; n <= max_n; ++n )
  {
    for ( std::size_t l = 2; l < n; ++l )
    {
      auto const s = make_theorem_schedule( n, l );
      if ( s.k >= 1 && s.levels.back().l >= min_inner_budget )
      {
        return std::pair{ n, l };
      }
    }
  }
  return std::nullopt;
}

} // namespace stconn
