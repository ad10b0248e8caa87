#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "boxpoly/distribution.hpp"
#include "boxpoly/invariants.hpp"
#include "boxpoly/numeric.hpp"
#include "boxpoly/polynomial.hpp"
#include "boxpoly/simplex.hpp"

namespace boxpoly {

// Scaling and limit behavior of B(S_N;z)/B(S_N;1) for a fixed row a and
// growing volume N. The controlling modulus is M = lcm(a_1,...,a_{d-1},
// sum(a)-1): B(S_{kM+1};z) = k*B(S_{M+1};z) exactly, and for N = kM+r the
// coefficient distribution converges to the one at N = M+1.

inline Int modulus_M(const std::vector<Int>& row) { return row_modulus(row); }

struct AsymptoticProfile {
    std::vector<Int> row;
    Int M;
    IntPolynomial limit_box;            // B(S_{M+1};z)
    CoefficientDistribution limit_dist; // its coefficient distribution
};

inline AsymptoticProfile limit_profile(const std::vector<Int>& row) {
    AsymptoticProfile profile;
    profile.row = row;
    profile.M = modulus_M(row);
    const OneRowSimplex base(row, profile.M + 1);
    profile.limit_box = local_hstar(base);
    profile.limit_dist = to_distribution(profile.limit_box);
    return profile;
}

/// Exact identity B(S_{kM+1};z) == k * B(S_{M+1};z), both sides enumerated.
inline bool scaling_identity_check(const std::vector<Int>& row, const Int& k, int jobs = 1) {
    if (k < 1) throw validation_error("scaling_identity_check: k must be >= 1");
    const Int m = modulus_M(row);
    const IntPolynomial base = local_hstar(OneRowSimplex(row, m + 1), jobs);
    const IntPolynomial scaled = local_hstar(OneRowSimplex(row, k * m + 1), jobs);
    return scaled == k * base;
}

struct ConvergenceRow {
    Int k;
    Int N;
    bool degenerate;  // no valid simplex at this N, or B identically zero
    Rat tv;           // distance to the limit distribution
    Rat envelope;     // (M^2 + r + sum(a)) / (kM + r - 1)
    bool within_envelope;
    bool strictly_unimodal;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    bool limit_strictly_unimodal;
    /// Smallest k such that every non-degenerate row from k through k_max is
    /// strictly unimodal; an observed threshold, not a proven one.
    std::optional<Int> strict_threshold;
};

/// Tabulate tv_distance(dist(B(S_{kM+r})), limit) for k = 1..k_max together
/// with the counting envelope from the convergence argument. Rows whose
/// volume admits no valid simplex (N <= max a_i) or whose box polynomial
/// vanishes are recorded as degenerate rather than failing the sweep.
inline ConvergenceReport convergence_report(const std::vector<Int>& row, const Int& r,
                                            int k_max, int jobs = 1) {
    const Int m = modulus_M(row);
    if (r < 0 || r >= m)
        throw validation_error("convergence_report: r must lie in [0, M-1]");
    if (k_max < 1) throw validation_error("convergence_report: k_max must be >= 1");

    const AsymptoticProfile profile = limit_profile(row);
    Int row_sum = 0;
    for (const Int& a : row) row_sum += a;

    ConvergenceReport report;
    report.limit_strictly_unimodal = is_strictly_unimodal(profile.limit_box);

    for (int k = 1; k <= k_max; ++k) {
        ConvergenceRow out;
        out.k = k;
        out.N = k * m + r;
        out.envelope = Rat(m * m + r + row_sum, out.N - 1);
        out.degenerate = false;
        out.within_envelope = true;
        out.strictly_unimodal = false;
        IntPolynomial box;
        bool have_box = false;
        if (out.N >= 2) {
            try {
                box = local_hstar(OneRowSimplex(row, out.N), jobs);
                have_box = true;
            } catch (const validation_error&) {
                have_box = false;  // some a_i >= N at this volume
            }
        }
        if (!have_box || box.is_zero()) {
            out.degenerate = true;
        } else {
            out.tv = tv_distance(to_distribution(box), profile.limit_dist);
            out.within_envelope = out.tv <= out.envelope;
            out.strictly_unimodal = is_strictly_unimodal(box);
        }
        report.rows.push_back(std::move(out));
    }

    if (report.limit_strictly_unimodal) {
        std::optional<Int> threshold;
        for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
            if (it->degenerate) continue;
            if (!it->strictly_unimodal) break;
            threshold = it->k;
        }
        report.strict_threshold = threshold;
    }
    return report;
}

struct HstarLimitResult {
    bool identity_holds;  // h*(S_{kM+r}) == 1 + B(S_{kM+r})
    Rat tv_to_limit;      // distance of the h* distribution to the limit
};

/// For gcd(M, r) = 1 the volume kM+r is coprime to M, so the h*-polynomial
/// collapses to 1 + B; verifies that by enumeration and reports how far the
/// h* distribution sits from the limiting box distribution.
inline HstarLimitResult hstar_limit_check(const std::vector<Int>& row, const Int& r,
                                          const Int& k, int jobs = 1) {
    const Int m = modulus_M(row);
    if (r < 0 || r >= m) throw validation_error("hstar_limit_check: r must lie in [0, M-1]");
    if (boost::multiprecision::gcd(m, r) != 1)
        throw validation_error("hstar_limit_check: requires gcd(M, r) = 1");
    if (k < 1) throw validation_error("hstar_limit_check: k must be >= 1");

    const OneRowSimplex s(row, k * m + r);
    const detail::HstarData data = detail::hstar_data(s, jobs);
    HstarLimitResult result;
    result.identity_holds = data.hstar == IntPolynomial::one() + data.box;
    result.tv_to_limit =
        tv_distance(to_distribution(data.hstar), limit_profile(row).limit_dist);
    return result;
}

}  // namespace boxpoly
