#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "boxpoly/invariants.hpp"
#include "boxpoly/numeric.hpp"
#include "boxpoly/polynomial.hpp"
#include "boxpoly/simplex.hpp"

namespace boxpoly {

// Closed forms and classification rules for two structured rows: the
// all-ones row (1,...,1,N) and the geometric row (q^{k-1},...,q,1,q^k).

/// The vector alpha(a, N): entry i counts k in [1, N-1] with
/// ceil(a*k/N) = i and N not dividing a*k. For the all-ones simplex of
/// dimension d = a+2, the local h*-coefficients are the shift
/// b_{i+1} = alpha_i.
struct AlphaVector {
    Int a;
    Int N;
    std::vector<Int> entries;  // entries[i-1] = alpha_i, i = 1..a
};

inline AlphaVector alpha_vector(const Int& a, const Int& N) {
    if (a < 1) throw validation_error("alpha_vector: a must be >= 1");
    if (N < 2) throw validation_error("alpha_vector: N must be >= 2");
    AlphaVector out{a, N, std::vector<Int>(to_size(a, "a"), Int(0))};
    for (Int k = 1; k < N; ++k) {
        const Int prod = a * k;
        if (prod % N == 0) continue;
        out.entries[to_size(ceil_div(prod, N) - 1, "alpha index")] += 1;
    }
    return out;
}

/// Residue rule for alpha entries in the coprime case: with N = a*q + r,
/// alpha_{i+1} = q+1 exactly when 1 <= a - (i*r mod a) <= r-1, else q.
/// Requires gcd(a, N) = 1 and a >= 2 (for a = 1 there is no proper remainder
/// and the q/(q+1) dichotomy does not apply; alpha is the single entry N-1).
inline Int allones_residue_rule(const Int& a, const Int& N, const Int& i) {
    if (a < 2) throw validation_error("allones_residue_rule: requires a >= 2");
    if (boost::multiprecision::gcd(a, N) != 1)
        throw validation_error("allones_residue_rule: requires gcd(a, N) = 1");
    if (i < 0 || i >= a) throw validation_error("allones_residue_rule: i outside [0, a-1]");
    const Int q = floor_div(N, a);
    const Int r = N - a * q;
    const Int gap = a - mod_floor(i * r, a);  // in [1, a]
    return (1 <= gap && gap <= r - 1) ? q + 1 : q;
}

enum class AllOnesClass { Constant, UnimodalNonConstant, NonUnimodal };

inline const char* to_string(AllOnesClass c) {
    switch (c) {
        case AllOnesClass::Constant: return "constant";
        case AllOnesClass::UnimodalNonConstant: return "unimodal-nonconstant";
        case AllOnesClass::NonUnimodal: return "non-unimodal";
    }
    return "?";
}

inline OneRowSimplex allones_simplex(int d, const Int& N) {
    if (d < 2) throw validation_error("allones_simplex: d must be >= 2");
    return OneRowSimplex(std::vector<Int>(static_cast<std::size_t>(d) - 1, Int(1)), N);
}

/// Rule-based classification of the all-ones local h*-vector, with a = d-2,
/// b = gcd(a, N), r = N mod a:
///   gcd = 1: constant iff r in {0, 1}; unimodal iff additionally r in
///            {2, a-1}; everything else is non-unimodal.
///   gcd = b > 1: alpha is the b-fold concatenation of the coprime vector
///            alpha', so it is unimodal iff alpha' is constant, which happens
///            iff r in {0, b}.
/// With self_check the rule answer is compared against brute-force
/// unimodality/constancy of the enumerated vector; a mismatch throws.
inline AllOnesClass allones_classify(int d, const Int& N, bool self_check = false) {
    if (d < 3) throw validation_error("allones_classify: d must be >= 3");
    if (N < 2) throw validation_error("allones_classify: N must be >= 2");
    const Int a = d - 2;
    const Int q = floor_div(N, a);
    const Int r = N - a * q;
    const Int b = boost::multiprecision::gcd(a, N);

    AllOnesClass result;
    if (a == 1) {
        result = AllOnesClass::Constant;  // single entry N-1
    } else if (b == 1) {
        if (r == 0 || r == 1)
            result = AllOnesClass::Constant;
        else if (r == 2 || r == a - 1)
            result = AllOnesClass::UnimodalNonConstant;
        else
            result = AllOnesClass::NonUnimodal;
    } else {
        if (r == 0 || r == b) {
            // alpha' corresponds to (a/b, N/b); r = 0 or r = b force it
            // constant, hence alpha itself is constant. N/b = 1 makes every
            // multiple divisible and alpha identically zero.
            if (N / b == 1) {
                result = AllOnesClass::Constant;
            } else {
                const AlphaVector inner = alpha_vector(a / b, N / b);
                result = all_equal(inner.entries) ? AllOnesClass::Constant
                                                  : AllOnesClass::UnimodalNonConstant;
            }
        } else {
            result = AllOnesClass::NonUnimodal;
        }
    }

    if (self_check) {
        const AlphaVector alpha = alpha_vector(a, N);
        const bool unimodal = is_unimodal(alpha.entries);
        const bool constant = all_equal(alpha.entries);
        const bool rule_unimodal = result != AllOnesClass::NonUnimodal;
        const bool rule_constant = result == AllOnesClass::Constant;
        if (unimodal != rule_unimodal || constant != rule_constant)
            throw internal_error("allones_classify: rule disagrees with enumeration at d=" +
                                 std::to_string(d) + ", N=" + N.str());
    }
    return result;
}

/// f = (t + ... + t^{q-1}) * (1 + t + ... + t^{q-1})^{k-2}. Counts digit
/// tuples (c_0,...,c_{k-2}) with c_0 >= 1 by digit sum; palindromic and
/// unimodal as a product of palindromic unimodal factors.
inline IntPolynomial digit_poly_f(int q, int k) {
    if (q < 2 || k < 2) throw validation_error("digit_poly_f: requires q >= 2, k >= 2");
    std::vector<Int> lead(static_cast<std::size_t>(q), Int(1));
    lead[0] = 0;
    IntPolynomial f{IntPolynomial(std::move(lead))};
    const IntPolynomial block = IntPolynomial::all_ones(static_cast<std::size_t>(q));
    for (int j = 0; j < k - 2; ++j) f = f * block;
    return f;
}

/// Partial sums delta_i = sum of digit_poly_f coefficients over
/// ((i-1)(q-1), i(q-1)], for i = 1..k-1; palindromic and unimodal.
inline std::vector<Int> geometric_delta(int q, int k) {
    const IntPolynomial f = digit_poly_f(q, k);
    std::vector<Int> delta(static_cast<std::size_t>(k - 1));
    for (int i = 1; i <= k - 1; ++i) {
        Int sum = 0;
        for (int j = (i - 1) * (q - 1) + 1; j <= i * (q - 1); ++j)
            sum += f.coeff(static_cast<std::size_t>(j));
        delta[static_cast<std::size_t>(i - 1)] = sum;
    }
    return delta;
}

inline OneRowSimplex geometric_simplex(int q, int k) {
    if (q < 2 || k < 2) throw validation_error("geometric_simplex: requires q >= 2, k >= 2");
    std::vector<Int> row(static_cast<std::size_t>(k));
    Int p = 1;
    for (int j = 0; j < k; ++j) {
        row[static_cast<std::size_t>(k - 1 - j)] = p;
        p *= q;
    }
    return OneRowSimplex(std::move(row), p);  // p = q^k
}

/// Closed form for the geometric row: B = sum_i q*delta_i z^{i+1},
/// B(1) = (q-1) q^{k-1}. The index shift is pinned by enumeration tests.
inline IntPolynomial geometric_local_hstar_fast(int q, int k) {
    const std::vector<Int> delta = geometric_delta(q, k);
    std::vector<Int> coeffs(static_cast<std::size_t>(k) + 1, Int(0));
    for (std::size_t i = 0; i < delta.size(); ++i) coeffs[i + 2] = q * delta[i];
    return IntPolynomial(std::move(coeffs));
}

/// Age of ell in the geometric parallelepiped from its base-q digits:
/// ceil(digit_sum / (q-1)), digits taken of ell mod q^{k-1} in the k-1 low
/// positions. Equals ceil(sum_{i=1}^{k-1} frac(ell / q^i)).
inline Int geometric_age_base_q(int q, int k, const Int& ell) {
    Int modulus = 1;
    for (int j = 0; j < k - 1; ++j) modulus *= q;
    if (ell < 1 || ell > modulus)
        throw validation_error("geometric_age_base_q: ell outside [1, q^{k-1}]");
    Int rest = mod_floor(ell, modulus);
    Int digit_sum = 0;
    while (rest > 0) {
        digit_sum += rest % q;
        rest /= q;
    }
    return ceil_div(digit_sum, Int(q - 1));
}

/// The specific non-IDP certificate for the geometric simplex: the point
/// b = (q^{k-1}, ..., q, 1, q^k - 1) lies in 2S but is not a sum of two
/// height-one lattice points; membership is verified through barycentric
/// coordinates and indecomposability by exhaustive pair search.
inline IdpWitness geometric_non_idp_witness(int q, int k,
                                            std::uint64_t cap = kDefaultPointCap) {
    const OneRowSimplex s = geometric_simplex(q, k);
    std::vector<Int> b(s.row().begin(), s.row().end());
    b.push_back(s.volume() - 1);

    if (!dilate_contains(s, Int(2), b, /*strict=*/false))
        throw internal_error("geometric_non_idp_witness: constructed point not in 2S");

    const std::vector<std::vector<Int>> h1 = height_points(s, 1, cap);
    const std::set<std::vector<Int>> base(h1.begin(), h1.end());
    for (const std::vector<Int>& p : h1)
        if (base.count(detail::minus(b, p)))
            throw internal_error("geometric_non_idp_witness: point decomposed unexpectedly");
    return IdpWitness{std::move(b), Int(2), false};
}

}  // namespace boxpoly
