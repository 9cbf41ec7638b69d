#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace prc {

// log2 of C(n, k) via lgamma; exact big-integer cross-check lives in the tests.
inline double log2_binom(double n, double k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    if (k == 0 || k == n) return 0.0;
    constexpr double LOG2E = 1.4426950408889634;
    return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) * LOG2E;
}

inline double binom(double n, double k) { return std::exp2(log2_binom(n, k)); }

// log2(x) guarding zero.
inline double log2_safe(double x) {
    if (x <= 0) throw std::domain_error("log2 of non-positive value");
    return std::log2(x);
}

}  // namespace prc
