#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace boxpoly {

// All arithmetic in this library is exact: arbitrary-precision integers for
// counts and coefficients, rationals (reduced integer pairs) for
// probabilities and barycentric coordinates.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Bad input (out-of-range parameter, malformed spec string, HNF violation).
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A proven identity failed to hold; indicates a bug, not bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An enumeration would exceed the configured point budget.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Floor/ceiling division with positive divisor (cpp_int's operator/ truncates
// toward zero, which differs from floor for negative numerators).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) == (b < 0))) ++q;
    return q;
}

/// Representative of a mod b in [0, b), b > 0.
inline Int mod_floor(const Int& a, const Int& b) {
    Int r = a % b;
    if (r < 0) r += b;
    return r;
}

inline Int rat_floor(const Rat& x) {
    return floor_div(boost::multiprecision::numerator(x),
                     boost::multiprecision::denominator(x));
}

inline Int rat_ceil(const Rat& x) {
    return ceil_div(boost::multiprecision::numerator(x),
                    boost::multiprecision::denominator(x));
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int kk = k;
    if (n - k < kk) kk = n - k;
    Int result = 1;
    for (Int j = 1; j <= kk; ++j) {
        result *= n - kk + j;
        result /= j;
    }
    return result;
}

inline std::size_t to_size(const Int& v, const char* what = "value") {
    if (v < 0 || v > Int(std::size_t(-1) / 2))
        throw validation_error(std::string(what) + " out of addressable range: " + v.str());
    return static_cast<std::size_t>(v);
}

}  // namespace boxpoly
