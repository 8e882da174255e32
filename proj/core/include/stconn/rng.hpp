#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace stconn
{

/*! \brief Seeded generator with a portable output sequence.
 *
 * The engine is std::mt19937_64, seeded through std::seed_seq from the
 * 64-bit seed split into two 32-bit words followed by any stream words.
 * Both are fully specified by the C++ standard. The standard distributions
 * are not, so bounded integers and Bernoulli draws are derived from raw
 * engine output here (bitmask rejection and a 53-bit uniform).
 */
class rng
{
public:
  explicit rng( std::uint64_t seed, std::initializer_list<std::uint32_t> stream = {} );

  std::uint64_t next() { return engine_(); }

  /* uniform integer in [lo, hi] */
  std::uint64_t uniform( std::uint64_t lo, std::uint64_t hi );

  /* uniform double in [0, 1) with 53 random bits */
  double unit();

  bool bernoulli( double p ) { return unit() < p; }

  /* k distinct values of {1..n} in draw order */
  std::vector<std::uint32_t> sample_distinct( std::uint32_t n, std::uint32_t k );

private:
  std::mt19937_64 engine_;
};

} // namespace stconn
