#pragma once

#include <stconn/ledger.hpp>
#include <stconn/numeric.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace stconn
{

enum class build_mode
{
  squaring,
  exact,
  explicit_plane,
  theorem
};

build_mode parse_build_mode( std::string_view name );
std::string to_string( build_mode mode );

/* ceil(log2 l) * (1 + ceil(log2 n)) */
std::int64_t squaring_depth( big_int const& n, big_int const& l );

/* ceil(log2 2d) * (1 + ceil(log2 n)) */
std::int64_t closure_depth( big_int const& n, big_int const& d );

/* floor(log2 l) squarings plus ceil(log2 popcount l) product levels, each 1 + ceil(log2 n) */
std::int64_t exact_power_depth( big_int const& n, big_int const& l );

/*! \brief Stage-by-stage depth predictions without building gates.
 *
 * Uses the same stage formulas as the builders, so for buildable sizes
 * the result matches the predicted column of the builder's ledger. n may
 * be as large as 2^1024. For squaring mode l defaults to n - 1.
 */
depth_ledger predict_depth( build_mode mode, big_int const& n, big_int const& l );

/* total_predicted / (log2 n)^2 */
double depth_ratio( depth_ledger const& ledger, big_int const& n );

} // namespace stconn
