#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "boxpoly/numeric.hpp"

namespace boxpoly {

/// Lattice simplex in one-row Hermite normal form: the convex hull of
/// 0, e_1, ..., e_{d-1} and (a_1, ..., a_{d-1}, N). The pair (a, N) with
/// 0 <= a_i < N determines the simplex up to unimodular equivalence; N is its
/// normalized volume. Values are immutable after validation and safe to share
/// across threads.
class OneRowSimplex {
public:
    OneRowSimplex(std::vector<Int> row, Int volume)
        : row_(std::move(row)), volume_(std::move(volume)) {
        if (volume_ < 1) throw validation_error("volume N must be >= 1, got " + volume_.str());
        if (row_.empty())
            throw validation_error("row must have at least one entry (dimension d >= 2)");
        for (std::size_t i = 0; i < row_.size(); ++i) {
            if (row_[i] < 0 || row_[i] >= volume_)
                throw validation_error("row entry a_" + std::to_string(i + 1) + " = " +
                                       row_[i].str() + " violates 0 <= a_i < N = " +
                                       volume_.str());
        }
        a0_ = -1;
        for (const Int& a : row_) a0_ += a;
    }

    /// Parse the text form "a1,a2,...,ak;N". A token "v x c" (or "v×c")
    /// repeats the value v for c consecutive entries, e.g. "1x16;331".
    static OneRowSimplex parse(std::string_view text);

    int dimension() const { return static_cast<int>(row_.size()) + 1; }
    const std::vector<Int>& row() const { return row_; }
    const Int& volume() const { return volume_; }
    /// a_0 := sum(a_i) - 1, the numerator of the generator's first coordinate.
    const Int& row_sum_minus_one() const { return a0_; }

    std::string spec_string() const {
        std::string out;
        for (std::size_t i = 0; i < row_.size(); ++i) {
            if (i) out += ',';
            out += row_[i].str();
        }
        out += ';';
        out += volume_.str();
        return out;
    }

    bool operator==(const OneRowSimplex& o) const {
        return row_ == o.row_ && volume_ == o.volume_;
    }

private:
    std::vector<Int> row_;
    Int volume_;
    Int a0_;
};

/// One element of the parallelepiped group Gamma, the cyclic group of order N
/// generated by v0 = ((sum(a)-1)/N, -a_1/N, ..., -a_{d-1}/N, 1/N). Residues
/// are the numerators of the fractional coordinates of ell*v0 over the common
/// denominator N; their sum is divisible by N and the quotient is the age.
struct GroupElementView {
    Int ell;
    std::vector<Int> residues;  // size d+1, entries in [0, N)
    Int age;
};

inline bool in_open_box(const GroupElementView& g) {
    return std::all_of(g.residues.begin(), g.residues.end(),
                       [](const Int& r) { return r != 0; });
}

inline int zero_residue_count(const GroupElementView& g) {
    return static_cast<int>(std::count(g.residues.begin(), g.residues.end(), Int(0)));
}

namespace detail {

/// Per-coordinate residue steps: residue_j(ell) = (ell * step[j]) mod N.
inline std::vector<Int> residue_steps(const OneRowSimplex& s) {
    const Int& N = s.volume();
    std::vector<Int> step;
    step.reserve(s.row().size() + 2);
    step.push_back(mod_floor(s.row_sum_minus_one(), N));
    for (const Int& a : s.row()) step.push_back(mod_floor(-a, N));
    step.push_back(mod_floor(Int(1), N));
    return step;
}

}  // namespace detail

inline GroupElementView group_element(const OneRowSimplex& s, const Int& ell) {
    const Int& N = s.volume();
    if (ell < 0 || ell >= N)
        throw validation_error("group_element: ell = " + ell.str() + " outside [0, N)");
    GroupElementView g;
    g.ell = ell;
    const std::vector<Int> step = detail::residue_steps(s);
    g.residues.reserve(step.size());
    Int sum = 0;
    for (const Int& st : step) {
        Int r = ell * st % N;
        g.residues.push_back(r);
        sum += r;
    }
    if (sum % N != 0) throw internal_error("group_element: residue sum not divisible by N");
    g.age = sum / N;
    return g;
}

/// Age via the floor/ceiling closed form, valid for every ell in [1, N-1]:
/// age(ell) = sum_i ceil(ell*a_i / N) - floor(ell*a_0 / N), with
/// a_0 = sum(a_i) - 1. (Equals the residue-sum age of group_element; the
/// mirrored form 1 + ceil(ell*a_0/N) - sum_i floor(ell*a_i/N) computes the
/// age of the negated generator convention, i.e. of element N - ell.)
inline Int closed_form_age(const OneRowSimplex& s, const Int& ell) {
    const Int& N = s.volume();
    if (ell < 0 || ell >= N)
        throw validation_error("closed_form_age: ell = " + ell.str() + " outside [0, N)");
    if (ell == 0) return 0;
    Int acc = -floor_div(ell * s.row_sum_minus_one(), N);
    for (const Int& a : s.row()) acc += ceil_div(ell * a, N);
    return acc;
}

/// Visit group elements for ell in [lo, hi), in order. Residues advance
/// incrementally, so sub-ranges can be scanned independently by parallel
/// consumers.
template <class Fn>
void for_each_group_element(const OneRowSimplex& s, const Int& lo, const Int& hi, Fn&& fn) {
    const Int& N = s.volume();
    if (lo < 0 || hi > N || lo > hi)
        throw validation_error("for_each_group_element: bad range");
    const std::vector<Int> step = detail::residue_steps(s);
    const std::size_t w = step.size();
    GroupElementView g;
    g.residues.resize(w);
    for (std::size_t j = 0; j < w; ++j) g.residues[j] = lo * step[j] % N;
    for (Int ell = lo; ell < hi; ++ell) {
        Int sum = 0;
        for (const Int& r : g.residues) sum += r;
        g.ell = ell;
        g.age = sum / N;
        fn(static_cast<const GroupElementView&>(g));
        for (std::size_t j = 0; j < w; ++j) {
            g.residues[j] += step[j];
            if (g.residues[j] >= N) g.residues[j] -= N;
        }
    }
}

template <class Fn>
void for_each_group_element(const OneRowSimplex& s, Fn&& fn) {
    for_each_group_element(s, Int(0), s.volume(), std::forward<Fn>(fn));
}

/// Age histograms over the whole group plus the open-box subset, and the
/// minimum of age + (number of zero residues), which is the smallest dilate
/// containing an interior lattice point.
struct GroupScanStats {
    std::vector<Int> ages_all;   // size d+1, index = age
    std::vector<Int> ages_open;  // open-box elements only
    Int min_age_plus_zeros;
};

namespace detail {

struct RawStats {
    std::vector<std::uint64_t> all, open;
    std::uint64_t min_c;
};

// Machine-word scan. Requires N and (d+1)*(N-1) to fit comfortably in 64
// bits; products ell*step go through 128-bit intermediates.
inline void scan_chunk_u64(const std::vector<std::uint64_t>& step, std::uint64_t N,
                           std::uint64_t lo, std::uint64_t hi, RawStats& out) {
    const std::size_t w = step.size();
    std::vector<std::uint64_t> res(w);
    for (std::size_t j = 0; j < w; ++j)
        res[j] = static_cast<std::uint64_t>(static_cast<unsigned __int128>(lo) * step[j] % N);
    for (std::uint64_t ell = lo; ell < hi; ++ell) {
        std::uint64_t sum = 0;
        unsigned zeros = 0;
        for (std::size_t j = 0; j < w; ++j) {
            sum += res[j];
            zeros += res[j] == 0;
        }
        const std::uint64_t age = sum / N;
        out.all[age] += 1;
        if (zeros == 0) out.open[age] += 1;
        const std::uint64_t c = age + zeros;
        if (c < out.min_c) out.min_c = c;
        for (std::size_t j = 0; j < w; ++j) {
            res[j] += step[j];
            if (res[j] >= N) res[j] -= N;
        }
    }
}

}  // namespace detail

inline GroupScanStats scan_group_stats(const OneRowSimplex& s, int jobs = 1) {
    const Int& N = s.volume();
    const std::size_t d = static_cast<std::size_t>(s.dimension());
    GroupScanStats stats;
    stats.ages_all.assign(d + 1, Int(0));
    stats.ages_open.assign(d + 1, Int(0));
    stats.min_age_plus_zeros = Int(d + 1);

    // (d+1)*(N-1) must not overflow the running 64-bit sum.
    const bool fits_u64 = N < (Int(1) << 57) && d + 1 < (std::size_t(1) << 6);
    if (fits_u64) {
        const std::uint64_t n64 = N.convert_to<std::uint64_t>();
        std::vector<std::uint64_t> step;
        for (const Int& st : detail::residue_steps(s)) step.push_back(st.convert_to<std::uint64_t>());

        int workers = jobs > 1 ? jobs : 1;
        if (static_cast<std::uint64_t>(workers) * 4 > n64) workers = 1;
        std::vector<detail::RawStats> parts(
            static_cast<std::size_t>(workers),
            detail::RawStats{std::vector<std::uint64_t>(d + 1, 0),
                             std::vector<std::uint64_t>(d + 1, 0),
                             std::uint64_t(d) + 1});
        if (workers == 1) {
            detail::scan_chunk_u64(step, n64, 0, n64, parts[0]);
        } else {
            const std::uint64_t chunk = (n64 + workers - 1) / workers;
            std::vector<std::thread> threads;
            for (int t = 0; t < workers; ++t) {
                const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
                const std::uint64_t hi = std::min(n64, lo + chunk);
                if (lo >= hi) break;
                threads.emplace_back([&step, n64, lo, hi, &part = parts[static_cast<std::size_t>(t)]] {
                    detail::scan_chunk_u64(step, n64, lo, hi, part);
                });
            }
            for (auto& th : threads) th.join();
        }
        std::uint64_t min_c = std::uint64_t(d) + 1;
        for (const auto& part : parts) {
            for (std::size_t i = 0; i <= d; ++i) {
                stats.ages_all[i] += part.all[i];
                stats.ages_open[i] += part.open[i];
            }
            min_c = std::min(min_c, part.min_c);
        }
        stats.min_age_plus_zeros = min_c;
        return stats;
    }

    // Arbitrary-precision fallback for volumes past the machine-word envelope.
    for_each_group_element(s, [&](const GroupElementView& g) {
        const std::size_t age = to_size(g.age, "age");
        const int zeros = zero_residue_count(g);
        stats.ages_all[age] += 1;
        if (zeros == 0) stats.ages_open[age] += 1;
        Int c = g.age + zeros;
        if (c < stats.min_age_plus_zeros) stats.min_age_plus_zeros = c;
    });
    return stats;
}

inline Int normalized_volume(const OneRowSimplex& s) { return s.volume(); }

/// lcm(a_1, ..., a_{d-1}, sum(a)-1). Requires every a_i >= 1 and sum(a) >= 2;
/// otherwise the modulus is undefined (some group coordinate is identically
/// integral and the open box is never hit).
inline Int row_modulus(const std::vector<Int>& row) {
    if (row.empty()) throw validation_error("row_modulus: empty row");
    Int sum = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] < 1)
            throw validation_error("row_modulus: entry a_" + std::to_string(i + 1) +
                                   " must be >= 1");
        sum += row[i];
    }
    if (sum < 2)
        throw validation_error("row_modulus: sum(a) - 1 = 0, modulus undefined");
    Int m = sum - 1;
    for (const Int& a : row) m = boost::multiprecision::lcm(m, a);
    return m;
}

/// General Hermite normal form simplex: rows of an integer (d+1) x d matrix
/// are the vertices; first row zero, lower-triangular with positive diagonal
/// and reduced sub-diagonal entries.
class GeneralHnfSimplex {
public:
    explicit GeneralHnfSimplex(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {
        if (rows_.size() < 2) throw validation_error("HNF matrix needs at least 2 rows");
        const std::size_t d = rows_.size() - 1;
        for (const auto& r : rows_)
            if (r.size() != d) throw validation_error("HNF matrix must be (d+1) x d");
        for (std::size_t j = 0; j < d; ++j)
            if (rows_[0][j] != 0) throw validation_error("HNF row 0 must be zero");
        for (std::size_t i = 1; i <= d; ++i) {
            if (rows_[i][i - 1] < 1)
                throw validation_error("HNF diagonal entry a_{" + std::to_string(i) + "," +
                                       std::to_string(i) + "} must be >= 1");
            for (std::size_t j = 0; j + 1 < i; ++j)
                if (rows_[i][j] < 0 || rows_[i][j] >= rows_[i][i - 1])
                    throw validation_error("HNF sub-diagonal entry out of range at row " +
                                           std::to_string(i));
            for (std::size_t j = i; j < d; ++j)
                if (rows_[i][j] != 0)
                    throw validation_error("HNF entry above diagonal must be zero at row " +
                                           std::to_string(i));
        }
    }

    int dimension() const { return static_cast<int>(rows_.size()) - 1; }
    const std::vector<std::vector<Int>>& vertices() const { return rows_; }

    /// Vertices lifted to height one: a column of ones prepended.
    std::vector<std::vector<Int>> extended_matrix() const {
        std::vector<std::vector<Int>> out;
        out.reserve(rows_.size());
        for (const auto& r : rows_) {
            std::vector<Int> row;
            row.reserve(r.size() + 1);
            row.push_back(1);
            row.insert(row.end(), r.begin(), r.end());
            out.push_back(std::move(row));
        }
        return out;
    }

private:
    std::vector<std::vector<Int>> rows_;
};

inline Int normalized_volume(const GeneralHnfSimplex& s) {
    Int v = 1;
    const auto& rows = s.vertices();
    for (std::size_t i = 1; i < rows.size(); ++i) v *= rows[i][i - 1];
    return v;
}

/// Rows of the extended matrix A for a one-row simplex (the height-one lifts
/// of the vertices), each of length d+1.
inline std::vector<std::vector<Int>> lifted_vertex_rows(const OneRowSimplex& s) {
    const std::size_t d = static_cast<std::size_t>(s.dimension());
    std::vector<std::vector<Int>> rows(d + 1, std::vector<Int>(d + 1, Int(0)));
    for (std::size_t i = 0; i <= d; ++i) rows[i][0] = 1;
    for (std::size_t i = 1; i < d; ++i) rows[i][i] = 1;
    for (std::size_t j = 0; j + 1 < d; ++j) rows[d][j + 1] = s.row()[j];
    rows[d][d] = s.volume();
    return rows;
}

/// Image of a group element under multiplication by A: the lattice point of
/// the fundamental parallelepiped it corresponds to. The height coordinate
/// equals the age and is dropped; the returned vector lives in Z^d.
inline std::vector<Int> cone_point(const OneRowSimplex& s, const GroupElementView& g) {
    const std::size_t d = static_cast<std::size_t>(s.dimension());
    const Int& N = s.volume();
    std::vector<Int> x(d);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        Int num = g.residues[i + 1] + g.residues[d] * s.row()[i];
        if (num % N != 0) throw internal_error("cone_point: non-integral coordinate");
        x[i] = num / N;
    }
    x[d - 1] = g.residues[d];
    return x;
}

/// Barycentric coordinates of x in height*S, from the closed-form inverse of
/// the extended matrix. Their sum is always height; x lies in height*S iff
/// all are >= 0, and in the interior iff all are > 0.
inline std::vector<Rat> barycentric_coordinates(const OneRowSimplex& s, const Int& height,
                                                const std::vector<Int>& x) {
    const std::size_t d = static_cast<std::size_t>(s.dimension());
    if (x.size() != d) throw validation_error("barycentric_coordinates: point must be in Z^d");
    const Int& N = s.volume();
    std::vector<Rat> lambda(d + 1);
    Int head = height;
    for (std::size_t i = 0; i + 1 < d; ++i) head -= x[i];
    lambda[0] = Rat(head) + Rat(x[d - 1] * s.row_sum_minus_one(), N);
    for (std::size_t i = 0; i + 1 < d; ++i)
        lambda[i + 1] = Rat(x[i]) - Rat(x[d - 1] * s.row()[i], N);
    lambda[d] = Rat(x[d - 1], N);
    return lambda;
}

inline bool dilate_contains(const OneRowSimplex& s, const Int& height,
                            const std::vector<Int>& x, bool strict) {
    for (const Rat& l : barycentric_coordinates(s, height, x))
        if (strict ? l <= 0 : l < 0) return false;
    return true;
}

inline OneRowSimplex OneRowSimplex::parse(std::string_view text) {
    std::vector<Int> row;
    Int volume;
    std::size_t pos = 0;
    const auto fail = [&](const std::string& why) {
        throw validation_error("parse error at position " + std::to_string(pos) + ": " + why);
    };
    const auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    const auto read_int = [&]() -> Int {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a nonnegative integer");
        return Int(std::string(text.substr(start, pos - start)));
    };
    bool in_row = true;
    while (in_row) {
        Int value = read_int();
        skip_ws();
        // Repetition shorthand: "v x count" expands to count copies of v.
        if (pos < text.size() &&
            (text[pos] == 'x' || text.compare(pos, 2, "\xc3\x97") == 0)) {
            pos += text[pos] == 'x' ? 1 : 2;
            Int count = read_int();
            if (count < 1 || count > 1'000'000) fail("repetition count out of range");
            for (Int c = 0; c < count; ++c) row.push_back(value);
            skip_ws();
        } else {
            row.push_back(std::move(value));
        }
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
        } else if (pos < text.size() && text[pos] == ';') {
            ++pos;
            in_row = false;
        } else {
            fail("expected ',' or ';'");
        }
    }
    volume = read_int();
    skip_ws();
    if (pos != text.size()) fail("trailing characters after volume");
    return OneRowSimplex(std::move(row), std::move(volume));
}

}  // namespace boxpoly
