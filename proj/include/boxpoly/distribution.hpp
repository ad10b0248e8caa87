#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "boxpoly/numeric.hpp"
#include "boxpoly/polynomial.hpp"

namespace boxpoly {

/// Exact probability vector obtained by normalizing a nonnegative coefficient
/// sequence: entry i is coeff(i) / p(1). Same indexing as the source
/// polynomial; entries sum to exactly 1.
class CoefficientDistribution {
public:
    CoefficientDistribution() = default;

    explicit CoefficientDistribution(std::vector<Rat> probs) : p_(std::move(probs)) {
        Rat total = 0;
        for (const Rat& x : p_) {
            if (x < 0 || x > 1) throw validation_error("distribution entry outside [0,1]");
            total += x;
        }
        if (total != 1) throw validation_error("distribution entries do not sum to 1");
    }

    const std::vector<Rat>& probs() const { return p_; }

    Rat prob(std::size_t i) const { return i < p_.size() ? p_[i] : Rat(0); }

    std::size_t size() const { return p_.size(); }

    bool operator==(const CoefficientDistribution& o) const {
        const std::size_t n = std::max(p_.size(), o.p_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (prob(i) != o.prob(i)) return false;
        return true;
    }

private:
    std::vector<Rat> p_;
};

inline CoefficientDistribution to_distribution(const IntPolynomial& p) {
    if (p.is_zero()) throw validation_error("empty distribution");
    if (!p.nonnegative()) throw validation_error("to_distribution: negative coefficient");
    const Int total = p.value_at_one();
    std::vector<Rat> probs;
    probs.reserve(p.length());
    for (const Int& c : p.coeffs()) probs.emplace_back(c, total);
    return CoefficientDistribution(std::move(probs));
}

/// Total variation distance: half the L1 distance, distributions padded with
/// zeros to a common length.
inline Rat tv_distance(const CoefficientDistribution& a, const CoefficientDistribution& b) {
    const std::size_t n = std::max(a.size(), b.size());
    Rat acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += rat_abs(a.prob(i) - b.prob(i));
    return acc / 2;
}

}  // namespace boxpoly
