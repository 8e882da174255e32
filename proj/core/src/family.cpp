#include <stconn/family.hpp>

#include <stconn/rng.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace stconn
{

__extension__ using u128 = unsigned __int128;

void family_params::check() const
{
  require( n >= 1 && m >= 1 && s >= 1 && l >= 1 && d >= 1, "family parameters must be positive" );
  require( d <= n, "family parameter d must not exceed n" );
}

covering_family::covering_family( family_params params, std::vector<vertex_set> sets )
    : params_( params ), sets_( std::move( sets ) )
{
  params_.check();
  require( sets_.size() == params_.m, "family must contain exactly m sets" );
  for ( auto& set : sets_ )
  {
    std::sort( set.begin(), set.end() );
    set.erase( std::unique( set.begin(), set.end() ), set.end() );
    require( set.size() <= params_.s, "family set exceeds declared size s" );
    require( set.empty() || ( set.front() >= 1 && set.back() <= params_.n ), "family set leaves {1..n}" );
  }
}

std::uint64_t binomial_saturating( std::uint64_t n, std::uint64_t k )
{
  if ( k > n )
  {
    return 0;
  }
  k = std::min( k, n - k );
  u128 result = 1;
  for ( std::uint64_t i = 1; i <= k; ++i )
  {
    /* exact: result * (n-k+i) is divisible by i */
    result = result * ( n - k + i ) / i;
    if ( result > std::numeric_limits<std::uint64_t>::max() )
    {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>( result );
}

std::uint64_t exact_check_cost( family_params const& params )
{
  return binomial_saturating( params.n, params.d );
}

namespace
{

/* sets as packed bitsets over {1..n}, bit v-1 for vertex v */
class packed_family
{
public:
  explicit packed_family( covering_family const& family )
      : words_( ( family.params().n + 63 ) / 64 ), bits_( family.size() * words_, 0 )
  {
    for ( std::size_t i = 0; i < family.size(); ++i )
    {
      for ( auto v : family[i] )
      {
        bits_[i * words_ + ( v - 1 ) / 64] |= std::uint64_t{ 1 } << ( ( v - 1 ) % 64 );
      }
    }
  }

  std::size_t words() const noexcept { return words_; }

  bool disjoint( std::size_t set, std::span<std::uint64_t const> mask ) const
  {
    auto const* row = bits_.data() + set * words_;
    for ( std::size_t w = 0; w < words_; ++w )
    {
      if ( row[w] & mask[w] )
      {
        return false;
      }
    }
    return true;
  }

private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/* count * l >= m * d means at least md/l sets avoid D */
bool violates( std::uint64_t count, family_params const& p )
{
  return static_cast<u128>( count ) * p.l >= static_cast<u128>( p.m ) * p.d;
}

std::vector<std::uint64_t> mask_of( std::span<std::uint32_t const> subset, std::size_t words )
{
  std::vector<std::uint64_t> mask( words, 0 );
  for ( auto v : subset )
  {
    mask[( v - 1 ) / 64] |= std::uint64_t{ 1 } << ( ( v - 1 ) % 64 );
  }
  return mask;
}

std::vector<std::size_t> sets_avoiding( packed_family const& packed, std::size_t m, std::span<std::uint64_t const> mask )
{
  std::vector<std::size_t> avoiding;
  for ( std::size_t i = 0; i < m; ++i )
  {
    if ( packed.disjoint( i, mask ) )
    {
      avoiding.push_back( i );
    }
  }
  return avoiding;
}

} // namespace

family_check_result check_family_exact( covering_family const& family, std::uint64_t budget )
{
  auto const& p = family.params();
  auto const cost = exact_check_cost( p );
  if ( cost > budget )
  {
    std::ostringstream msg;
    msg << "exact check needs C(" << p.n << "," << p.d << ") = " << cost << " subset evaluations, budget is "
        << budget;
    throw error( error_kind::budget_exceeded, msg.str() );
  }

  packed_family const packed( family );
  family_check_result result;

  /* lexicographic d-subsets of {1..n} */
  std::vector<std::uint32_t> subset( p.d );
  std::iota( subset.begin(), subset.end(), 1u );
  for ( ;; )
  {
    ++result.subsets_checked;
    auto const mask = mask_of( subset, packed.words() );
    std::uint64_t count = 0;
    for ( std::size_t i = 0; i < family.size(); ++i )
    {
      count += packed.disjoint( i, mask ) ? 1 : 0;
    }
    if ( violates( count, p ) )
    {
      result.passed = false;
      result.witness = subset;
      result.offending_sets = sets_avoiding( packed, family.size(), mask );
      return result;
    }

    /* advance to the next combination */
    std::size_t pos = p.d;
    while ( pos > 0 && subset[pos - 1] == p.n - p.d + pos )
    {
      --pos;
    }
    if ( pos == 0 )
    {
      break;
    }
    ++subset[pos - 1];
    for ( auto k = pos; k < p.d; ++k )
    {
      subset[k] = subset[k - 1] + 1;
    }
  }
  return result;
}

family_check_result check_family_sampled( covering_family const& family, std::uint64_t trials, std::uint64_t seed )
{
  require( trials >= 1, "sampled check needs at least one trial" );
  auto const& p = family.params();
  packed_family const packed( family );
  rng gen( seed );
  family_check_result result;
  for ( std::uint64_t t = 0; t < trials; ++t )
  {
    ++result.subsets_checked;
    auto subset = gen.sample_distinct( static_cast<std::uint32_t>( p.n ), static_cast<std::uint32_t>( p.d ) );
    std::sort( subset.begin(), subset.end() );
    auto const mask = mask_of( subset, packed.words() );
    auto avoiding = sets_avoiding( packed, family.size(), mask );
    if ( violates( avoiding.size(), p ) )
    {
      result.passed = false;
      result.witness = std::move( subset );
      result.offending_sets = std::move( avoiding );
      return result;
    }
  }
  return result;
}

double failure_exponent( family_params const& p )
{
  auto const n = static_cast<double>( p.n );
  auto const m = static_cast<double>( p.m );
  auto const s = static_cast<double>( p.s );
  auto const l = static_cast<double>( p.l );
  auto const d = static_cast<double>( p.d );
  return d * m * std::log( m ) / l + d * std::log( n ) - s * m * d * d / ( n * l );
}

double failure_probability_bound( family_params const& params )
{
  return std::exp( failure_exponent( params ) );
}

bool sampler_regime( family_params const& p )
{
  if ( p.n == 0 || p.d == 0 )
  {
    return false;
  }
  auto const threshold = 2.0 * static_cast<double>( p.n ) * std::log( static_cast<double>( p.n ) ) /
                         static_cast<double>( p.d );
  return p.m == p.n && p.l < p.n && static_cast<double>( p.s ) > threshold && p.d <= p.n;
}

covering_family sample_family( family_params const& params, std::uint64_t seed )
{
  params.check();
  rng gen( seed );
  std::vector<vertex_set> sets( params.m );
  for ( auto& set : sets )
  {
    set.reserve( params.s );
    for ( std::size_t j = 0; j < params.s; ++j )
    {
      set.push_back( static_cast<std::uint32_t>( gen.uniform( 1, params.n ) ) );
    }
  }
  return covering_family( params, std::move( sets ) );
}

family_search_result find_family( family_params const& params, std::uint64_t seed,
                                  family_search_options const& options )
{
  params.check();
  require( options.attempts >= 1, "family search needs at least one attempt" );
  auto const exact = exact_check_cost( params ) <= options.exact_budget;
  if ( !exact && !options.allow_sampled )
  {
    std::ostringstream msg;
    msg << "exact check of (" << params.n << "," << params.m << "," << params.s << "," << params.l << ","
        << params.d << ") costs " << exact_check_cost( params ) << " > budget " << options.exact_budget
        << "; sampled-only validation was not allowed";
    throw error( error_kind::budget_exceeded, msg.str() );
  }

  family_check_result last;
  for ( std::size_t attempt = 0; attempt < options.attempts; ++attempt )
  {
    auto const attempt_seed = seed + attempt;
    auto family = sample_family( params, attempt_seed );
    last = exact ? check_family_exact( family, options.exact_budget )
                 : check_family_sampled( family, options.sampled_trials, attempt_seed ^ 0x5bd1e9955bd1e995ull );
    if ( last.passed )
    {
      return { std::move( family ), attempt_seed, exact ? validation_mode::exact : validation_mode::sampled,
               attempt + 1 };
    }
  }
  std::ostringstream msg;
  msg << "no valid family within " << options.attempts << " attempts; last counterexample D = {";
  for ( std::size_t k = 0; k < last.witness.size(); ++k )
  {
    msg << ( k ? "," : "" ) << last.witness[k];
  }
  msg << "} avoided by " << last.offending_sets.size() << " sets";
  throw error( error_kind::construction_failed, msg.str() );
}

covering_family augment_with_terminals( covering_family const& family )
{
  auto params = family.params();
  auto sets = family.sets();
  for ( auto& set : sets )
  {
    set.push_back( 1 );
    set.push_back( static_cast<std::uint32_t>( params.n ) );
  }
  params.s += 2;
  return covering_family( params, std::move( sets ) );
}

hitting_witness hitting_decomposition( covering_family const& family, std::span<std::size_t const> sequence )
{
  auto const& p = family.params();
  require( sequence.size() >= 2, "sequence needs at least two vertices" );
  auto const length = sequence.size() - 1;
  require( length <= p.l, "sequence longer than the family's path budget" );
  {
    std::vector<std::size_t> sorted( sequence.begin(), sequence.end() );
    std::sort( sorted.begin(), sorted.end() );
    require( std::adjacent_find( sorted.begin(), sorted.end() ) == sorted.end(), "sequence vertices must be distinct" );
    require( sorted.front() >= 1 && sorted.back() <= p.n, "sequence vertex outside {1..n}" );
  }

  if ( length <= 2 * p.d )
  {
    return { 0, { 0, length } };
  }

  auto const d = p.d;
  auto const k = length / d;
  auto contains = []( vertex_set const& set, std::size_t v ) {
    return std::binary_search( set.begin(), set.end(), static_cast<std::uint32_t>( v ) );
  };

  for ( std::size_t si = 0; si < family.size(); ++si )
  {
    auto const& set = family[si];
    hitting_witness w{ si, { 0 } };
    bool all_hit = true;
    for ( std::size_t block = 1; block < k && all_hit; ++block )
    {
      all_hit = false;
      for ( auto idx = block * d; idx < block * d + d; ++idx )
      {
        if ( contains( set, sequence[idx] ) )
        {
          w.indices.push_back( idx );
          all_hit = true;
          break;
        }
      }
    }
    if ( all_hit )
    {
      w.indices.push_back( length );
      return w;
    }
  }

  /* some block is avoided by at least md/l sets; report the worst one */
  std::size_t worst_block = 1;
  std::vector<std::size_t> worst_sets;
  for ( std::size_t block = 1; block < k; ++block )
  {
    std::vector<std::size_t> avoiding;
    for ( std::size_t si = 0; si < family.size(); ++si )
    {
      bool hit = false;
      for ( auto idx = block * d; idx < block * d + d && !hit; ++idx )
      {
        hit = contains( family[si], sequence[idx] );
      }
      if ( !hit )
      {
        avoiding.push_back( si );
      }
    }
    if ( avoiding.size() > worst_sets.size() )
    {
      worst_block = block;
      worst_sets = std::move( avoiding );
    }
  }
  vertex_set witness;
  for ( auto idx = worst_block * d; idx < worst_block * d + d; ++idx )
  {
    witness.push_back( static_cast<std::uint32_t>( sequence[idx] ) );
  }
  std::sort( witness.begin(), witness.end() );
  std::ostringstream msg;
  msg << "no set meets every block; block " << worst_block << " is avoided by " << worst_sets.size()
      << " sets, violating the covering condition";
  throw family_violation_error( msg.str(), std::move( witness ), std::move( worst_sets ) );
}

bool witness_is_valid( covering_family const& family, std::span<std::size_t const> sequence,
                       hitting_witness const& witness )
{
  auto const& p = family.params();
  auto const& idx = witness.indices;
  if ( sequence.size() < 2 || idx.size() < 2 || witness.set_index >= family.size() )
  {
    return false;
  }
  auto const k = idx.size() - 1;
  if ( idx.front() != 0 || idx.back() != sequence.size() - 1 )
  {
    return false;
  }
  /* k <= l/d as k*d <= l */
  if ( k * p.d > p.l )
  {
    return false;
  }
  auto const& set = family[witness.set_index];
  for ( std::size_t j = 0; j < k; ++j )
  {
    if ( idx[j + 1] <= idx[j] || idx[j + 1] - idx[j] > 2 * p.d )
    {
      return false;
    }
  }
  for ( std::size_t j = 1; j < k; ++j )
  {
    if ( !std::binary_search( set.begin(), set.end(), static_cast<std::uint32_t>( sequence[idx[j]] ) ) )
    {
      return false;
    }
  }
  return true;
}

} // namespace stconn
