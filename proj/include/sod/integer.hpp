#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sod {

// Exact arithmetic everywhere: Weyl dimensions and binomials outgrow
// 64-bit integers as soon as ranks do.
using Integer = boost::multiprecision::cpp_int;

// C(n, k); zero outside 0 <= k <= n.
Integer binomial(long long n, long long k);

}  // namespace sod
