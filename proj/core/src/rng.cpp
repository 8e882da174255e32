#include <stconn/rng.hpp>

#include <stconn/error.hpp>

#include <bit>
#include <numeric>

namespace stconn
{

namespace
{

std::mt19937_64 make_engine( std::uint64_t seed, std::initializer_list<std::uint32_t> stream )
{
  std::vector<std::uint32_t> words{ static_cast<std::uint32_t>( seed & 0xffffffffu ),
                                    static_cast<std::uint32_t>( seed >> 32 ) };
  words.insert( words.end(), stream.begin(), stream.end() );
  std::seed_seq seq( words.begin(), words.end() );
  return std::mt19937_64( seq );
}

} // namespace

rng::rng( std::uint64_t seed, std::initializer_list<std::uint32_t> stream )
    : engine_( make_engine( seed, stream ) )
{
}

std::uint64_t rng::uniform( std::uint64_t lo, std::uint64_t hi )
{
  require( lo <= hi, "empty range" );
  auto const span = hi - lo;
  if ( span == ~std::uint64_t{ 0 } )
  {
    return engine_();
  }
  auto const mask = span == 0 ? 0 : ( ~std::uint64_t{ 0 } >> std::countl_zero( span ) );
  for ( ;; )
  {
    auto const x = engine_() & mask;
    if ( x <= span )
    {
      return lo + x;
    }
  }
}

double rng::unit()
{
  return static_cast<double>( engine_() >> 11 ) * 0x1.0p-53;
}

std::vector<std::uint32_t> rng::sample_distinct( std::uint32_t n, std::uint32_t k )
{
  require( k <= n, "cannot draw more distinct values than exist" );
  std::vector<std::uint32_t> pool( n );
  std::iota( pool.begin(), pool.end(), 1u );
  for ( std::uint32_t i = 0; i < k; ++i )
  {
    auto const j = static_cast<std::uint32_t>( uniform( i, n - 1 ) );
    std::swap( pool[i], pool[j] );
  }
  pool.resize( k );
  return pool;
}

} // namespace stconn
