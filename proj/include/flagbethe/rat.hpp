#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace fb {

// Exact rational scalar. cpp_rational keeps gcd-reduced form with a
// positive denominator, which is exactly the canonical form we need.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline std::string to_string(const Rat& r) { return r.str(); }

// |r| as a double, for convergence-rate diagnostics only.
inline double rat_abs_double(const Rat& r) {
    double d = r.convert_to<double>();
    return d < 0 ? -d : d;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int b = 1;
    for (unsigned i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

inline Rat factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return Rat(f);
}

}  // namespace fb
