#pragma once

#include <stconn/family.hpp>
#include <stconn/numeric.hpp>

#include <boost/rational.hpp>

#include <cstdint>
#include <vector>

namespace stconn
{

/*! \brief Lines of the affine plane over GF(q), q prime.
 *
 * Point (x, y) has index x*q + y. Lines are listed as y = -(a x + c) for
 * a, c in 0..q-1 (a outer), then the vertical lines x = -c for c in 0..q-1;
 * each line holds its q point indices in ascending order.
 */
struct affine_plane_family
{
  std::uint32_t q = 0;
  std::vector<std::vector<std::uint32_t>> lines;
  std::vector<std::uint32_t> point_subset;
  std::uint32_t d = 0;
};

/* deterministic trial division */
bool is_prime( std::uint64_t x );

/* smallest prime q with q^2 >= n */
std::uint64_t minimal_prime_q( std::uint64_t n );
big_int minimal_prime_q( big_int const& n );

/* smallest d with d/q > (q^2 - d)/(d + q), i.e. d^2 + 2qd - q^3 > 0 */
std::uint64_t minimal_d( std::uint64_t q );
big_int minimal_d( big_int const& q );

/* full plane, point_subset = all q^2 points; throws on composite q */
affine_plane_family affine_lines( std::uint32_t q );

/* (q+1)(q^2-u)/(u+q), the most lines whose union misses exactly u points */
boost::rational<std::int64_t> line_cover_bound( std::int64_t q, std::int64_t u );

/*! \brief Covering family of the lines restricted to n points.
 *
 * q = minimal_prime_q(n) and d = minimal_d(q). The first n points in index
 * order become vertices 1..n, and the family is every line intersected with
 * them, declared as (n, q(q+1), q, n, d).
 */
covering_family plane_family( std::size_t n );

struct cover_bound_result
{
  bool passed = true;
  std::uint64_t subsets_checked = 0;
  std::vector<std::size_t> counterexample_lines;
  std::int64_t uncovered = 0;
};

/* checks the line-cover bound for every subset of lines; q(q+1) <= 24 */
cover_bound_result verify_cover_bound_exhaustive( std::uint32_t q );

} // namespace stconn
