#pragma once

#include <stconn/error.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace stconn
{

/*! \brief Declared parameters (n, m, s, l, d) of a covering family.
 *
 * n is the universe size, m the number of sets, s the maximum set size,
 * l the path-length budget and d the deficiency. All positive, d <= n.
 */
struct family_params
{
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t s = 0;
  std::size_t l = 0;
  std::size_t d = 0;

  void check() const;
  bool operator==( family_params const& ) const = default;
};

using vertex_set = std::vector<std::uint32_t>;

/*! \brief Ordered family of subsets of {1..n} with declared parameters.
 *
 * The constructor sorts and deduplicates every set and enforces the cheap
 * conditions: m sets, each a subset of {1..n} with at most s elements. The
 * covering condition (any md/l sets cover at least n-d+1 elements) is
 * established separately by check_family_exact or check_family_sampled.
 */
class covering_family
{
public:
  covering_family( family_params params, std::vector<vertex_set> sets );

  family_params const& params() const noexcept { return params_; }
  std::vector<vertex_set> const& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  vertex_set const& operator[]( std::size_t i ) const { return sets_[i]; }

  bool operator==( covering_family const& ) const = default;

private:
  family_params params_;
  std::vector<vertex_set> sets_;
};

/*! \brief Outcome of a covering-condition check.
 *
 * On failure `witness` is a d-set D such that the sets listed in
 * `offending_sets` (at least md/l of them) all avoid D.
 */
struct family_check_result
{
  bool passed = true;
  vertex_set witness;
  std::vector<std::size_t> offending_sets;
  std::uint64_t subsets_checked = 0;
};

/* thrown when a family is shown not to satisfy the covering condition */
class family_violation_error : public error
{
public:
  family_violation_error( std::string const& what, vertex_set witness, std::vector<std::size_t> offending )
      : error( error_kind::family_violation, what ), witness( std::move( witness ) ),
        offending_sets( std::move( offending ) )
  {
  }

  vertex_set witness;
  std::vector<std::size_t> offending_sets;
};

inline constexpr std::uint64_t default_exact_budget = 10'000'000;

/* binomial coefficient, saturating at UINT64_MAX */
std::uint64_t binomial_saturating( std::uint64_t n, std::uint64_t k );

/* number of d-subsets the exact checker enumerates */
std::uint64_t exact_check_cost( family_params const& params );

/*! \brief Decides the covering condition by enumerating every d-subset D.
 *
 * The family passes iff, for every D with |D| = d, fewer than md/l sets
 * are disjoint from D (exact integer comparison). Subsets are visited in
 * lexicographic order and the first counterexample is reported. Throws
 * error_kind::budget_exceeded, naming the cost, when C(n,d) > budget.
 */
family_check_result check_family_exact( covering_family const& family,
                                        std::uint64_t budget = default_exact_budget );

/* Monte Carlo falsification over `trials` uniform d-subsets; passing proves nothing */
family_check_result check_family_sampled( covering_family const& family, std::uint64_t trials,
                                          std::uint64_t seed );

/* exponent dm ln m / l + d ln n - s m d^2 / (n l) of the failure bound */
double failure_exponent( family_params const& params );

/* exp(failure_exponent): upper bound on the probability that a sample fails */
double failure_probability_bound( family_params const& params );

/* m = n, l < n, s > 2 n ln n / d and d <= n */
bool sampler_regime( family_params const& params );

/* m rows of s uniform draws from {1..n}; repeated draws collapse */
covering_family sample_family( family_params const& params, std::uint64_t seed );

enum class validation_mode
{
  exact,
  sampled
};

struct family_search_result
{
  covering_family family;
  std::uint64_t seed;
  validation_mode validated_by;
  std::size_t attempts_used;
};

struct family_search_options
{
  std::size_t attempts = 10;
  bool allow_sampled = false;
  std::uint64_t exact_budget = default_exact_budget;
  std::uint64_t sampled_trials = 100'000;
};

/*! \brief Samples families with seeds seed, seed+1, ... until one validates.
 *
 * Validation is exact when the cost is within budget. Otherwise sampled
 * validation is used only if the options allow it, else budget_exceeded is
 * thrown. Throws construction_failed with the last counterexample when no
 * attempt succeeds.
 */
family_search_result find_family( family_params const& params, std::uint64_t seed,
                                  family_search_options const& options = {} );

/* adds 1 and n to every set and re-declares s as s + 2 */
covering_family augment_with_terminals( covering_family const& family );

/*! \brief Splitting of a path by one set of the family.
 *
 * indices run 0 = i_0 < i_1 < ... < i_k = l' with consecutive gaps at most
 * 2d and k <= l/d; the interior points A_{i_1} .. A_{i_{k-1}} lie in the set
 * `set_index`.
 */
struct hitting_witness
{
  std::size_t set_index = 0;
  std::vector<std::size_t> indices;
};

/*! \brief Finds a set meeting every length-d block of the sequence.
 *
 * `sequence` holds distinct vertices A_0..A_l' with l' <= l. For l' <= 2d
 * the trivial witness (set 0, indices {0, l'}) is returned. Otherwise the
 * blocks B_i = {A_id .. A_id+d-1}, 1 <= i < [l'/d], are formed and the first
 * set meeting all of them is chosen, taking the earliest hit in each block.
 * If no set meets all blocks the family violates the covering condition and
 * family_violation_error is thrown with the block avoided by the most sets.
 */
hitting_witness hitting_decomposition( covering_family const& family, std::span<std::size_t const> sequence );

/* checks every invariant of a witness against its family and sequence */
bool witness_is_valid( covering_family const& family, std::span<std::size_t const> sequence,
                       hitting_witness const& witness );

} // namespace stconn
