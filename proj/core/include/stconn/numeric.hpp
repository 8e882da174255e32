#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace stconn
{

using big_int = boost::multiprecision::cpp_int;
using big_float = boost::multiprecision::cpp_bin_float_100;

/* ceil(log2 x) for x >= 1 */
std::uint64_t ceil_log2( big_int const& x );

/* floor(sqrt(x)) for x >= 0 */
big_int isqrt( big_int const& x );

/* 2^e */
big_int pow2( std::uint64_t e );

} // namespace stconn
