#pragma once

#include <cstdint>

namespace gpe {

/// F(0) = 0, F(1) = 1. Throws gpe::overflow_error once the value leaves
/// the 64-bit range (first at n = 94) and precondition_error for n < 0.
std::uint64_t fibonacci(int n);

/// L(0) = 2, L(1) = 1. Same error behavior as fibonacci().
std::uint64_t lucas(int n);

/// Whether F(n) >= F(i) * F(n-i+1). Requires n >= 1 and 0 <= i <= n/2.
bool product_inequality_holds(int n, int i);

} // namespace gpe
