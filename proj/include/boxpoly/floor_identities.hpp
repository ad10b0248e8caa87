#pragma once

#include "boxpoly/numeric.hpp"

namespace boxpoly {

// Number-theoretic floor/ceiling identities for ratios of the shape
// (k*i + delta + 1) / (k*m + r/n). Denominators are cleared before comparing,
// so floor(x / (km + r/n)) is evaluated as floor(n*x / (kmn + r)) in integers;
// no rational normalization happens in the loops that sweep these.

/// Parameter bundle; each predicate reads the members it needs.
struct FloorIdentityParams {
    Int k, m, n, r, i, delta;
};

namespace detail {

inline void require(bool ok, const char* msg) {
    if (!ok) throw validation_error(msg);
}

}  // namespace detail

/// floor((ki+1)/(km+1/n)) == floor((ki+delta+1)/(km+1/n)), and the ceiling
/// analogue. Requires k,m,n >= 1, 0 <= i <= mn-1, 0 <= delta <= k-1.
inline bool floor_identity_prop41(const Int& k, const Int& m, const Int& n, const Int& i,
                                  const Int& delta) {
    detail::require(k >= 1 && m >= 1 && n >= 1, "floor_identity_prop41: k,m,n must be >= 1");
    detail::require(i >= 0 && i <= m * n - 1, "floor_identity_prop41: i out of range [0, mn-1]");
    detail::require(delta >= 0 && delta <= k - 1,
                    "floor_identity_prop41: delta out of range [0, k-1]");
    const Int den = k * m * n + 1;
    const Int base = n * (k * i + 1);
    const Int shifted = n * (k * i + delta + 1);
    return floor_div(base, den) == floor_div(shifted, den) &&
           ceil_div(base, den) == ceil_div(shifted, den);
}

/// floor((kq+1)/(km+1/n)) == floor((q+1)/(m+1/n)), and the ceiling analogue.
/// Requires k,m,n >= 1, 0 <= q <= mn-1.
inline bool floor_identity_cor44(const Int& k, const Int& m, const Int& n, const Int& q) {
    detail::require(k >= 1 && m >= 1 && n >= 1, "floor_identity_cor44: k,m,n must be >= 1");
    detail::require(q >= 0 && q <= m * n - 1, "floor_identity_cor44: q out of range [0, mn-1]");
    const Int den_k = k * m * n + 1;
    const Int den_1 = m * n + 1;
    const Int num_k = n * (k * q + 1);
    const Int num_1 = n * (q + 1);
    return floor_div(num_k, den_k) == floor_div(num_1, den_1) &&
           ceil_div(num_k, den_k) == ceil_div(num_1, den_1);
}

/// Strict inequality floor(x/(km+1/n)) * (1 + 1/k) < x/(km+1/n) for
/// x = ki+delta+1, under delta >= (n-1)m+1 and k >= n.
inline bool floor_identity_lem45(const Int& k, const Int& m, const Int& n, const Int& i,
                                 const Int& delta) {
    detail::require(k >= 1 && m >= 1 && n >= 1, "floor_identity_lem45: k,m,n must be >= 1");
    detail::require(i >= 0 && i <= m * n - 1, "floor_identity_lem45: i out of range [0, mn-1]");
    detail::require(delta >= 0 && delta <= k - 1,
                    "floor_identity_lem45: delta out of range [0, k-1]");
    detail::require(delta >= (n - 1) * m + 1, "floor_identity_lem45: requires delta >= (n-1)m+1");
    detail::require(k >= n, "floor_identity_lem45: requires k >= n");
    const Int den = k * m * n + 1;
    const Int x = k * i + delta + 1;
    const Int lhs_floor = floor_div(n * x, den);
    // L*(1+1/k) < n*x/den  <=>  L*(k+1)*den < k*n*x
    return lhs_floor * (k + 1) * den < k * n * x;
}

/// floor((ki+delta+1)/(km+r/n)) == floor((ki+delta+1)/(km+1/n)), and the
/// ceiling analogue, for 1 <= r <= mn, k >= mn, mn <= delta <= k-1.
inline bool floor_identity_thm46(const Int& k, const Int& m, const Int& n, const Int& r,
                                 const Int& i, const Int& delta) {
    detail::require(k >= 1 && m >= 1 && n >= 1, "floor_identity_thm46: k,m,n must be >= 1");
    detail::require(r >= 1 && r <= m * n, "floor_identity_thm46: r out of range [1, mn]");
    detail::require(k >= m * n, "floor_identity_thm46: requires k >= mn");
    detail::require(delta >= m * n && delta <= k - 1,
                    "floor_identity_thm46: delta out of range [mn, k-1]");
    detail::require(i >= 0 && i <= m * n - 1, "floor_identity_thm46: i out of range [0, mn-1]");
    const Int num = n * (k * i + delta + 1);
    const Int den_r = k * m * n + r;
    const Int den_1 = k * m * n + 1;
    return floor_div(num, den_r) == floor_div(num, den_1) &&
           ceil_div(num, den_r) == ceil_div(num, den_1);
}

inline bool floor_identity_prop41(const FloorIdentityParams& p) {
    return floor_identity_prop41(p.k, p.m, p.n, p.i, p.delta);
}
inline bool floor_identity_cor44(const FloorIdentityParams& p) {
    return floor_identity_cor44(p.k, p.m, p.n, p.i);
}
inline bool floor_identity_lem45(const FloorIdentityParams& p) {
    return floor_identity_lem45(p.k, p.m, p.n, p.i, p.delta);
}
inline bool floor_identity_thm46(const FloorIdentityParams& p) {
    return floor_identity_thm46(p.k, p.m, p.n, p.r, p.i, p.delta);
}

}  // namespace boxpoly
