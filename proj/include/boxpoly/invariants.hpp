#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "boxpoly/distribution.hpp"
#include "boxpoly/numeric.hpp"
#include "boxpoly/polynomial.hpp"
#include "boxpoly/simplex.hpp"

namespace boxpoly {

inline constexpr std::uint64_t kDefaultPointCap = 5'000'000;

namespace detail {

struct HstarData {
    IntPolynomial hstar;
    IntPolynomial box;
    Int ell_min;
};

inline HstarData hstar_data(const OneRowSimplex& s, int jobs = 1) {
    GroupScanStats stats = scan_group_stats(s, jobs);
    return HstarData{IntPolynomial(std::move(stats.ages_all)),
                     IntPolynomial(std::move(stats.ages_open)),
                     std::move(stats.min_age_plus_zeros)};
}

}  // namespace detail

/// Local h*-polynomial (box polynomial) B(S;z): coefficient i counts the
/// group elements with all residues nonzero and age i. Degree at most d,
/// constant term always zero.
inline IntPolynomial local_hstar(const OneRowSimplex& s, int jobs = 1) {
    return detail::hstar_data(s, jobs).box;
}

/// h*-polynomial: coefficient i counts all group elements of age i.
/// Evaluates to N at z = 1.
inline IntPolynomial hstar(const OneRowSimplex& s, int jobs = 1) {
    return detail::hstar_data(s, jobs).hstar;
}

/// gcd(M, N) = 1 for M = lcm(a_1, ..., a_{d-1}, sum(a)-1). When true,
/// h*(S;z) = 1 + B(S;z); the two conditions are equivalent. Requires every
/// a_i >= 1 and sum(a) >= 2, otherwise M is undefined.
inline bool gcd_criterion(const OneRowSimplex& s) {
    Int m;
    try {
        m = row_modulus(s.row());
    } catch (const validation_error&) {
        throw validation_error("gcd_criterion: M undefined; B is identically 0 "
                               "coordinate-degenerate");
    }
    return boost::multiprecision::gcd(m, s.volume()) == 1;
}

/// Smallest dilate ell such that ell*S contains an interior lattice point:
/// the minimum over group elements of age + (number of zero residues). Each
/// zero coordinate costs one extra generator row to push the point off the
/// boundary of the half-open parallelepiped.
inline Int smallest_interior_dilate(const OneRowSimplex& s) {
    return scan_group_stats(s).min_age_plus_zeros;
}

/// h*-polynomial of the open simplex, via reciprocity: the closed-simplex
/// coefficients reversed over the window [0, d+1].
inline IntPolynomial interior_hstar(const OneRowSimplex& s) {
    return hstar(s).reversed(static_cast<std::size_t>(s.dimension()) + 1);
}

/// h*-polynomial of the boundary: (h* - interior h*) / (1 - z), exact.
inline IntPolynomial boundary_hstar(const OneRowSimplex& s) {
    const IntPolynomial h = hstar(s);
    const IntPolynomial inner = h.reversed(static_cast<std::size_t>(s.dimension()) + 1);
    return (h - inner).div_exact_one_minus_z();
}

/// Decomposition (1 + z + ... + z^{ell-1}) h* = a(z) + z^ell b(z) with ell the
/// smallest interior dilate, a palindromic on [0, d], b palindromic on
/// [0, d-ell], both nonnegative; a is the boundary h*-polynomial.
struct StapledonDecomposition {
    Int ell_min;
    IntPolynomial a_poly;
    IntPolynomial b_poly;
};

inline StapledonDecomposition stapledon_decompose(const OneRowSimplex& s) {
    const std::size_t d = static_cast<std::size_t>(s.dimension());
    const detail::HstarData data = detail::hstar_data(s);
    const std::size_t ell = to_size(data.ell_min, "ell_min");

    const IntPolynomial inner = data.hstar.reversed(d + 1);
    const IntPolynomial a_poly = (data.hstar - inner).div_exact_one_minus_z();
    const IntPolynomial spread = IntPolynomial::all_ones(ell) * data.hstar;
    const IntPolynomial b_poly = (spread - a_poly).shifted_down(ell);

    if (!a_poly.nonnegative() || !b_poly.nonnegative())
        throw internal_error("stapledon_decompose: negative coefficient in a or b");
    if (!is_palindromic(a_poly, 0, d))
        throw internal_error("stapledon_decompose: a-polynomial not palindromic on [0, d]");
    if (ell > d) {
        // ell = d+1 only for the unimodular simplex, where b vanishes.
        if (!b_poly.is_zero())
            throw internal_error("stapledon_decompose: nonzero b with ell = d+1");
    } else if (!is_palindromic(b_poly, 0, d - ell)) {
        throw internal_error("stapledon_decompose: b-polynomial not palindromic on [0, d-ell]");
    }
    if (spread != a_poly + b_poly.shifted_up(ell))
        throw internal_error("stapledon_decompose: reconstruction identity failed");
    return StapledonDecomposition{data.ell_min, a_poly, b_poly};
}

/// z*b(z) <= B(S;z) coefficient-wise; only stated for simplices containing an
/// interior lattice point (ell = 1).
inline bool check_zb_bounded_by_B(const OneRowSimplex& s) {
    const StapledonDecomposition dec = stapledon_decompose(s);
    if (dec.ell_min != 1)
        throw validation_error("check_zb_bounded_by_B: proposition hypothesis unmet "
                               "(simplex has no interior lattice point, ell = " +
                               dec.ell_min.str() + ")");
    return coefficientwise_leq(dec.b_poly.shifted_up(1), local_hstar(s));
}

/// Shifted symmetry of an h*-vector: h*_i = h*_{d+1-i} for i = 1..d.
inline bool is_shifted_symmetric(const IntPolynomial& p, std::size_t d) {
    for (std::size_t i = 1; i <= d; ++i)
        if (p.coeff(i) != p.coeff(d + 1 - i)) return false;
    return true;
}

/// All lattice points of the cone over {1} x S at height h, as points of Z^d
/// (the height coordinate is implied). Every such point decomposes uniquely
/// as the parallelepiped point of a group element with age <= h plus a
/// nonnegative combination of the lifted vertex rows summing to h - age.
/// Throws budget_error when the predicted count exceeds point_cap.
inline std::vector<std::vector<Int>> height_points(const OneRowSimplex& s, const Int& h,
                                                   std::uint64_t point_cap = kDefaultPointCap) {
    if (h < 1) throw validation_error("height_points: h must be >= 1");
    const std::size_t d = static_cast<std::size_t>(s.dimension());

    Int predicted = 0;
    for_each_group_element(s, [&](const GroupElementView& g) {
        if (g.age <= h) predicted += binomial(h - g.age + Int(d), Int(d));
    });
    if (predicted > point_cap)
        throw budget_error("height_points: estimated " + predicted.str() +
                           " points exceeds cap " + std::to_string(point_cap));

    const std::vector<std::vector<Int>> rows = lifted_vertex_rows(s);
    std::vector<std::vector<Int>> out;
    out.reserve(predicted.convert_to<std::size_t>());

    std::vector<Int> point(d);
    // Distribute `remaining` copies of vertex rows starting at `slot`; row 0
    // lifts the origin and contributes only height, so it absorbs whatever is
    // left when slot enumeration ends.
    auto distribute = [&](auto&& self, std::size_t slot, const Int& remaining) -> void {
        if (slot == rows.size() - 1) {
            for (std::size_t j = 0; j < d; ++j) point[j] += remaining * rows.back()[j + 1];
            out.push_back(point);
            for (std::size_t j = 0; j < d; ++j) point[j] -= remaining * rows.back()[j + 1];
            return;
        }
        for (Int take = 0; take <= remaining; ++take) {
            if (take > 0)
                for (std::size_t j = 0; j < d; ++j) point[j] += rows[slot][j + 1];
            self(self, slot + 1, remaining - take);
            // Entries for this slot are removed after the loop in one step.
            if (take == remaining)
                for (std::size_t j = 0; j < d; ++j) point[j] -= take * rows[slot][j + 1];
        }
    };

    for_each_group_element(s, [&](const GroupElementView& g) {
        if (g.age > h) return;
        point = cone_point(s, g);
        distribute(distribute, 0, h - g.age);
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Certificate that a height-h lattice point admits no decomposition into h
/// height-one points; decomposable=false records that the exhaustive search
/// over height-one summands found none.
struct IdpWitness {
    std::vector<Int> point;
    Int height;
    bool decomposable;
};

namespace detail {

inline std::vector<Int> minus(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

}  // namespace detail

/// Search height-h lattice points for one that is not a sum of h height-one
/// points: pair search for h = 2, level-by-level search for h > 2. Points are
/// scanned in lexicographic order; returns the first witness or nullopt when
/// every point decomposes.
inline std::optional<IdpWitness> find_non_idp_witness(const OneRowSimplex& s, const Int& h = 2,
                                                      std::uint64_t cap = kDefaultPointCap) {
    if (h < 2) throw validation_error("find_non_idp_witness: h must be >= 2");
    const std::vector<std::vector<Int>> h1 = height_points(s, 1, cap);
    const std::set<std::vector<Int>> base(h1.begin(), h1.end());

    std::set<std::vector<Int>> reachable = base;  // decomposable points at current level
    for (Int level = 2; level <= h; ++level) {
        std::set<std::vector<Int>> next;
        std::optional<IdpWitness> witness;
        for (const std::vector<Int>& x : height_points(s, level, cap)) {
            bool ok = false;
            for (const std::vector<Int>& p : h1) {
                if (reachable.count(detail::minus(x, p))) {
                    ok = true;
                    break;
                }
            }
            if (ok) {
                next.insert(x);
            } else if (level == h && !witness) {
                witness = IdpWitness{x, h, false};
            }
        }
        if (level == h) return witness;
        reachable = std::move(next);
    }
    return std::nullopt;
}

/// Full certification sweep: searches heights 2 .. max(2, d-1), which decide
/// the integer decomposition property for a d-dimensional lattice simplex.
/// Returns the first witness found, or nullopt when the simplex is IDP.
inline std::optional<IdpWitness> find_non_idp_witness_exhaustive(
    const OneRowSimplex& s, std::uint64_t cap = kDefaultPointCap) {
    const int top = std::max(2, s.dimension() - 1);
    for (int h = 2; h <= top; ++h)
        if (auto w = find_non_idp_witness(s, Int(h), cap)) return w;
    return std::nullopt;
}

}  // namespace boxpoly
