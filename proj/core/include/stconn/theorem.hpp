#pragma once

#include <stconn/constructions.hpp>
#include <stconn/family.hpp>
#include <stconn/numeric.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace stconn
{

struct theorem_level
{
  big_int n;
  big_int l;
};

/*! \brief Parameter schedule of the recursive family construction.
 *
 * d_param = [2^sqrt(log2 n)], k = [log_d l], growth_q = 2 ln n + 3 and
 * level i has n_i = [n growth_q^i / d^i] vertices and budget l_i = [l / d^i],
 * i = 0..k. growth_q is a real number and is unrelated to the prime field
 * order of the plane construction.
 */
struct theorem_schedule
{
  big_int n;
  big_int l;
  big_int d_param;
  std::uint64_t k = 0;
  big_float growth_q;
  std::vector<theorem_level> levels;

  /* (n_i, n_i, n_{i+1} - 2, l_i, d) for i < k; desk-scale sizes only */
  family_params level_params( std::size_t i ) const;

  /* n_{i+1} - 2 > (2 ln n / d) n_i, evaluated in 100-digit arithmetic */
  bool growth_inequality_holds( std::size_t i ) const;
};

/* requires 2 <= l < n */
theorem_schedule make_theorem_schedule( big_int const& n, big_int const& l );

struct theorem_options
{
  std::size_t attempts = 10;
  bool allow_sampled = false;
  std::uint64_t exact_budget = default_exact_budget;
  std::uint64_t sampled_trials = 100'000;
};

struct theorem_level_record
{
  std::size_t level;
  family_params params;
  std::uint64_t seed;
  validation_mode validated_by;
  std::size_t attempts_used;
};

struct theorem_build
{
  built_circuit built;
  theorem_schedule schedule;
  std::vector<theorem_level_record> levels;
};

/*! \brief Recursive construction realizing the promise problem for (n, l).
 *
 * The innermost level is plain squaring over n_k vertices with budget l_k;
 * each outer level i samples an (n_i, n_i, n_{i+1} - 2, l_i, d) family with
 * seeds derived from `seed` and composes. Throws construction_failed when a
 * level finds no valid family within the attempt budget.
 */
theorem_build build_theorem( std::size_t n, std::size_t l, std::uint64_t seed, theorem_options const& options = {} );

/* seed used for the family at `level` */
std::uint64_t theorem_level_seed( std::uint64_t seed, std::size_t level );

/*! \brief Smallest (n, l) in lexicographic order with k >= 1 and l_k >= min_inner_budget.
 *
 * Searches n = 3..max_n, l = 2..n-1.
 */
std::optional<std::pair<std::size_t, std::size_t>> find_theorem_case( std::size_t max_n,
                                                                      std::size_t min_inner_budget = 1 );

} // namespace stconn
