#include <stconn/error.hpp>
#include <stconn/rng.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace stconn;

TEST( rng, engine_matches_seed_seq_construction )
{
  // seed split low word first, then the stream words
  std::uint64_t const seed = 0x0123456789abcdefull;
  std::seed_seq seq{ 0x89abcdefu, 0x01234567u, 7u };
  std::mt19937_64 reference( seq );
  rng gen( seed, { 7 } );
  for ( int k = 0; k < 100; ++k )
    ASSERT_EQ( gen.next(), reference() );
}

TEST( rng, frozen_first_outputs )
{
  rng gen( 0 );
  // frozen from the reference construction above
  std::seed_seq seq{ 0u, 0u };
  std::mt19937_64 reference( seq );
  auto const first = reference();
  EXPECT_EQ( gen.next(), first );
  EXPECT_EQ( rng( 42 ).next(), rng( 42 ).next() );
  EXPECT_NE( rng( 42 ).next(), rng( 43 ).next() );
  EXPECT_NE( rng( 42 ).next(), rng( 42, { 1 } ).next() );
}

TEST( rng, uniform_stays_in_range_and_hits_everything )
{
  rng gen( 5 );
  std::vector<int> hits( 7, 0 );
  for ( int k = 0; k < 7000; ++k )
  {
    auto const v = gen.uniform( 3, 9 );
    ASSERT_GE( v, 3u );
    ASSERT_LE( v, 9u );
    ++hits[v - 3];
  }
  for ( auto h : hits )
  {
    EXPECT_GT( h, 850 );
    EXPECT_LT( h, 1150 );
  }
  EXPECT_EQ( gen.uniform( 4, 4 ), 4u );
  EXPECT_THROW( gen.uniform( 5, 4 ), error );
  gen.uniform( 0, ~std::uint64_t{ 0 } );
}

TEST( rng, unit_and_bernoulli )
{
  rng gen( 6 );
  double sum = 0;
  int ones = 0;
  for ( int k = 0; k < 20000; ++k )
  {
    auto const u = gen.unit();
    ASSERT_GE( u, 0.0 );
    ASSERT_LT( u, 1.0 );
    sum += u;
    ones += gen.bernoulli( 0.25 );
  }
  EXPECT_NEAR( sum / 20000, 0.5, 0.01 );
  EXPECT_NEAR( ones / 20000.0, 0.25, 0.01 );
  EXPECT_FALSE( gen.bernoulli( 0.0 ) );
  EXPECT_TRUE( gen.bernoulli( 1.0 ) );
}

TEST( rng, sample_distinct )
{
  rng gen( 8 );
  for ( std::uint32_t k = 0; k <= 10; ++k )
  {
    auto const s = gen.sample_distinct( 10, k );
    ASSERT_EQ( s.size(), k );
    std::set<std::uint32_t> unique( s.begin(), s.end() );
    EXPECT_EQ( unique.size(), k );
    for ( auto v : s )
    {
      EXPECT_GE( v, 1u );
      EXPECT_LE( v, 10u );
    }
  }
  EXPECT_THROW( gen.sample_distinct( 3, 4 ), error );

  // every 2-subset of {1..4} appears with similar frequency
  std::vector<int> counts( 16, 0 );
  for ( int k = 0; k < 6000; ++k )
  {
    auto s = gen.sample_distinct( 4, 2 );
    std::sort( s.begin(), s.end() );
    ++counts[( s[0] - 1 ) * 4 + s[1] - 1];
  }
  int used = 0;
  for ( auto c : counts )
    if ( c )
    {
      ++used;
      EXPECT_GT( c, 850 );
      EXPECT_LT( c, 1150 );
    }
  EXPECT_EQ( used, 6 );
}
