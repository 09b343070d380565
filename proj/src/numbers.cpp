#include "gpe/numbers.hpp"

#include "gpe/errors.hpp"

namespace gpe {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* who) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error(std::string(who) + ": value exceeds 64-bit range");
    return r;
}

std::uint64_t linear_recurrence(int n, std::uint64_t a0, std::uint64_t a1, const char* who) {
    if (n < 0)
        throw precondition_error(std::string(who) + ": index must be non-negative");
    if (n == 0) return a0;
    std::uint64_t prev = a0, cur = a1;
    for (int k = 2; k <= n; ++k) {
        std::uint64_t next = checked_add(prev, cur, who);
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace

std::uint64_t fibonacci(int n) { return linear_recurrence(n, 0, 1, "fibonacci"); }

std::uint64_t lucas(int n) { return linear_recurrence(n, 2, 1, "lucas"); }

bool product_inequality_holds(int n, int i) {
    if (n < 1)
        throw precondition_error("product_inequality_holds: n must be >= 1");
    if (i < 0 || i > n / 2)
        throw precondition_error("product_inequality_holds: need 0 <= i <= n/2");
    std::uint64_t fi = fibonacci(i);
    std::uint64_t fj = fibonacci(n - i + 1);
    std::uint64_t prod = 0;
    if (fi != 0 && __builtin_mul_overflow(fi, fj, &prod))
        throw overflow_error("product_inequality_holds: product exceeds 64-bit range");
    return fibonacci(n) >= prod;
}

} // namespace gpe
