#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "boxpoly/numeric.hpp"

namespace boxpoly {

/// Dense univariate polynomial with exact integer coefficients, indexed by
/// degree. Stored trimmed (no trailing zeros); the zero polynomial is the
/// empty coefficient sequence. Serialization with an explicit length pads
/// with zeros, which is how vectors such as local h*-vectors of a
/// d-dimensional simplex are emitted (length d+1).
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    IntPolynomial(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

    static IntPolynomial monomial(Int coefficient, std::size_t degree) {
        std::vector<Int> c(degree + 1);
        c[degree] = std::move(coefficient);
        return IntPolynomial(std::move(c));
    }

    static IntPolynomial one() { return IntPolynomial({Int(1)}); }

    const std::vector<Int>& coeffs() const { return c_; }

    /// Coefficient of z^i; reads outside the stored range are zero.
    const Int& coeff(std::size_t i) const {
        static const Int zero_coeff{0};
        return i < c_.size() ? c_[i] : zero_coeff;
    }

    bool is_zero() const { return c_.empty(); }

    /// Degree of the last stored (nonzero) coefficient; 0 for the zero polynomial.
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }

    std::size_t length() const { return c_.size(); }

    Int value_at_one() const {
        Int s = 0;
        for (const Int& c : c_) s += c;
        return s;
    }

    Int evaluate(const Int& x) const {
        Int acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    bool nonnegative() const {
        return std::all_of(c_.begin(), c_.end(), [](const Int& c) { return c >= 0; });
    }

    std::vector<Int> padded(std::size_t len) const {
        std::vector<Int> out(c_.begin(), c_.begin() + std::min(len, c_.size()));
        out.resize(len);
        return out;
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator*(const Int& s, const IntPolynomial& p) {
        if (s == 0) return {};
        std::vector<Int> out(p.c_);
        for (Int& c : out) c *= s;
        return IntPolynomial(std::move(out));
    }

    /// Multiply by z^k.
    IntPolynomial shifted_up(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<Int> out(c_.size() + k);
        std::copy(c_.begin(), c_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
        return IntPolynomial(std::move(out));
    }

    /// Divide by z^k; the k low coefficients must vanish.
    IntPolynomial shifted_down(std::size_t k) const {
        for (std::size_t i = 0; i < k && i < c_.size(); ++i)
            if (c_[i] != 0)
                throw internal_error("shifted_down: coefficient of z^" + std::to_string(i) +
                                     " is nonzero");
        if (c_.size() <= k) return {};
        return IntPolynomial(std::vector<Int>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

    /// Coefficient reversal over the window [0, hi]: result[i] = coeff(hi - i).
    IntPolynomial reversed(std::size_t hi) const {
        std::vector<Int> out(hi + 1);
        for (std::size_t i = 0; i <= hi; ++i) out[i] = coeff(hi - i);
        return IntPolynomial(std::move(out));
    }

    /// Exact quotient by (1 - z); requires p(1) = 0. The quotient coefficients
    /// are the prefix sums of the dividend.
    IntPolynomial div_exact_one_minus_z() const {
        if (is_zero()) return {};
        if (value_at_one() != 0)
            throw internal_error("division by (1-z) is not exact: p(1) != 0");
        std::vector<Int> out(c_.size() - 1);
        Int run = 0;
        for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
            run += c_[i];
            out[i] = run;
        }
        return IntPolynomial(std::move(out));
    }

    /// 1 + z + ... + z^{len-1}.
    static IntPolynomial all_ones(std::size_t len) {
        return IntPolynomial(std::vector<Int>(len, Int(1)));
    }

    bool operator==(const IntPolynomial&) const = default;

    std::string pretty(char var = 'z') const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << (c_[i] > 0 ? " + " : " - ");
            else if (c_[i] < 0) os << "-";
            Int mag = boost::multiprecision::abs(c_[i]);
            if (mag != 1 || i == 0) os << mag.str();
            if (i > 0) {
                if (mag != 1) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

inline bool coefficientwise_leq(const IntPolynomial& p, const IntPolynomial& q) {
    const std::size_t n = std::max(p.length(), q.length());
    for (std::size_t i = 0; i < n; ++i)
        if (p.coeff(i) > q.coeff(i)) return false;
    return true;
}

/// Weak unimodality of a coefficient vector: nondecreasing up to some index,
/// nonincreasing after. Evaluated over the full vector; leading/trailing
/// zeros never break it because the comparisons are non-strict. An all-zero
/// vector is unimodal.
inline bool is_unimodal(const std::vector<Int>& v) {
    bool descending = false;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < v[i - 1]) {
            descending = true;
        } else if (v[i] > v[i - 1] && descending) {
            return false;
        }
    }
    return true;
}

inline bool is_unimodal(const IntPolynomial& p) { return is_unimodal(p.coeffs()); }

/// Strict unimodality: over the window from the first to the last nonzero
/// coefficient, the sequence climbs strictly, tops out in a plateau of length
/// at most two, then falls strictly. Palindromic vectors with even nonzero
/// support force two equal middle entries, hence the plateau allowance. The
/// zero polynomial counts as strictly unimodal.
inline bool is_strictly_unimodal(const std::vector<Int>& v) {
    std::size_t lo = 0, hi = v.size();
    while (lo < hi && v[lo] == 0) ++lo;
    while (hi > lo && v[hi - 1] == 0) --hi;
    if (lo == hi) return true;
    // Comparison pattern must be <...< [=] >...>, at most one equality.
    enum { rising, at_peak, falling } phase = rising;
    for (std::size_t i = lo + 1; i < hi; ++i) {
        if (v[i] > v[i - 1]) {
            if (phase != rising) return false;
        } else if (v[i] == v[i - 1]) {
            if (phase != rising) return false;
            phase = at_peak;
        } else {
            phase = falling;
        }
    }
    return true;
}

inline bool is_strictly_unimodal(const IntPolynomial& p) {
    return is_strictly_unimodal(p.coeffs());
}

/// Symmetry of the coefficient window [lo, hi]: coeff(lo+j) == coeff(hi-j).
/// Coefficients outside the stored range read as zero.
inline bool is_palindromic(const IntPolynomial& p, std::size_t lo, std::size_t hi) {
    if (lo > hi) throw validation_error("is_palindromic: lo > hi");
    for (std::size_t i = lo, k = hi; i < k; ++i, --k)
        if (p.coeff(i) != p.coeff(k)) return false;
    return true;
}

inline bool all_equal(const std::vector<Int>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

}  // namespace boxpoly
