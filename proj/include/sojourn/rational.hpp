#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sojourn {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// C(n, k) as an exact big integer; 0 outside 0 <= k <= n.
/// Multiplicative form with exact division at every step, so intermediates
/// never exceed the result by more than a factor of n.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int result(1);
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i) here
    }
    return result;
}

/// base^exp for exp >= 0.
inline Rat rat_pow(const Rat& base, long exp) {
    if (exp < 0) throw std::domain_error("rat_pow: negative exponent");
    Rat acc(1);
    Rat b = base;
    unsigned long e = static_cast<unsigned long>(exp);
    while (e != 0) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// Parses an exact rational literal "num/den" (both decimal digit strings,
/// den > 0). Anything else is rejected, decimals in particular.
inline Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
        throw std::invalid_argument("expected rational literal \"num/den\": " + text);
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    auto all_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("expected rational literal \"num/den\": " + text);
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rat(Int(num), d);
}

inline std::string to_string(const Rat& r) {
    return r.str();
}

}  // namespace sojourn
