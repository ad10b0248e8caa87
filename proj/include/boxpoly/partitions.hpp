#pragma once

#include <cstdint>
#include <vector>

namespace boxpoly {

/// Visit every partition of n as a vector of nonincreasing positive parts,
/// in descending lexicographic order: (n), (n-1,1), ..., (1,...,1).
template <class Fn>
void for_each_partition(unsigned n, Fn&& fn) {
    std::vector<unsigned> parts;
    auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
        if (remaining == 0) {
            fn(static_cast<const std::vector<unsigned>&>(parts));
            return;
        }
        for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
}

inline bool all_parts_distinct(const std::vector<unsigned>& parts) {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] == parts[i - 1]) return false;
    return true;
}

/// p(n) by the standard Euler DP; used for sweep accounting.
inline std::uint64_t partition_count(unsigned n) {
    std::vector<std::uint64_t> p(n + 1, 0);
    p[0] = 1;
    for (unsigned part = 1; part <= n; ++part)
        for (unsigned total = part; total <= n; ++total) p[total] += p[total - part];
    return p[n];
}

}  // namespace boxpoly
