#pragma once

// Arbitrary-precision reference model of the pool, written from the
// constant-product definitions rather than from the implementation.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>

namespace carbon::oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline cpp_int floor_of(const cpp_rational& r) {
    cpp_int n = boost::multiprecision::numerator(r);
    cpp_int d = boost::multiprecision::denominator(r);
    return n / d;  // operands are non-negative here
}

/// Swap output as an exact rational, floored:
/// out = r_out * (in * f) / (r_in + in * f), f = 997/1000.
inline cpp_int swap_out(std::uint64_t r_in, std::uint64_t r_out, std::uint64_t in) {
    cpp_rational fee(997, 1000);
    cpp_rational eff = cpp_rational(in) * fee;
    return floor_of(cpp_rational(r_out) * eff / (cpp_rational(r_in) + eff));
}

/// Largest `out` the fee-adjusted invariant (r_in + f*in)(r_out - out) >=
/// r_in * r_out permits, found by bisection. Independent of the closed form.
inline cpp_int swap_out_search(std::uint64_t r_in, std::uint64_t r_out, std::uint64_t in) {
    cpp_rational eff = cpp_rational(in) * cpp_rational(997, 1000);
    cpp_rational k = cpp_rational(r_in) * cpp_rational(r_out);
    cpp_int lo = 0, hi = r_out;
    while (lo < hi) {
        cpp_int mid = (lo + hi + 1) / 2;
        if ((cpp_rational(r_in) + eff) * cpp_rational(cpp_int(r_out) - mid) >= k)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

/// Shares for a deposit: the largest k whose pro-rata claim k/S does not
/// exceed either deposit ratio.
inline cpp_int add_shares(std::uint64_t rc, std::uint64_t rs, std::uint64_t total, std::uint64_t c, std::uint64_t s) {
    cpp_rational a = cpp_rational(c) * total / rc;
    cpp_rational b = cpp_rational(s) * total / rs;
    return floor_of(a < b ? a : b);
}

inline cpp_int isqrt(const cpp_int& n) { return boost::multiprecision::sqrt(n); }

/// Pool model kept in arbitrary precision.
struct Pool {
    cpp_int carbon, stable, total;
};

}  // namespace carbon::oracle
