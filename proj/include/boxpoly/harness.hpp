#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boxpoly/asymptotics.hpp"
#include "boxpoly/distribution.hpp"
#include "boxpoly/invariants.hpp"
#include "boxpoly/numeric.hpp"
#include "boxpoly/parallel.hpp"
#include "boxpoly/partitions.hpp"
#include "boxpoly/record.hpp"
#include "boxpoly/rng.hpp"
#include "boxpoly/simplex.hpp"

namespace boxpoly {

enum class IdpSearchMode { skip, height2, exhaustive };

struct ComputeOptions {
    IdpSearchMode idp = IdpSearchMode::skip;
    std::uint64_t point_cap = kDefaultPointCap;
    int jobs = 1;
};

inline ExperimentRecord make_record(const OneRowSimplex& s, const ComputeOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentRecord r;
    r.row = s.row();
    r.N = s.volume();
    r.d = s.dimension();
    detail::HstarData data = detail::hstar_data(s, opts.jobs);
    r.box = std::move(data.box);
    r.hstar = std::move(data.hstar);
    if (!r.box.is_zero()) r.box_dist = to_distribution(r.box);
    r.unimodal = is_unimodal(r.box);
    r.strictly_unimodal = is_strictly_unimodal(r.box);
    r.gcd_criterion = r.hstar == IntPolynomial::one() + r.box;
    switch (opts.idp) {
        case IdpSearchMode::skip:
            r.idp_witness = IdpStatus::skipped;
            break;
        case IdpSearchMode::height2:
            r.idp_witness = find_non_idp_witness(s, 2, opts.point_cap) ? IdpStatus::yes
                                                                       : IdpStatus::no;
            break;
        case IdpSearchMode::exhaustive:
            r.idp_witness = find_non_idp_witness_exhaustive(s, opts.point_cap)
                                ? IdpStatus::yes
                                : IdpStatus::no;
            break;
    }
    r.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return r;
}

/// Parse "a1,...,ak;N" and compute the full record. Parse and validation
/// failures carry position information in the message.
inline ExperimentRecord run_compute(std::string_view spec, const ComputeOptions& opts = {}) {
    return make_record(OneRowSimplex::parse(spec), opts);
}

struct PartitionSweepResult {
    std::vector<ExperimentRecord> records;       // computed rows, input order
    std::vector<std::vector<Int>> degenerate;    // rows with undefined modulus
    std::uint64_t partitions_total = 0;          // partitions of n (after filter)
    bool truncated = false;                      // budget cut the computation short
    Rat unimodal_fraction;                       // over computed records
};

/// Enumerate the partitions of n, read each as a row vector with volume
/// N = M+1, and compute records. The step budget bounds the total group-scan
/// work (sum of N*(d+1)); when it would be exceeded the sweep stops early and
/// marks the result truncated instead of failing.
inline PartitionSweepResult sweep_partitions(unsigned n, bool distinct_only = false,
                                             int jobs = 1,
                                             std::uint64_t step_budget = 200'000'000ULL) {
    if (n < 1) throw validation_error("sweep_partitions: n must be >= 1");
    PartitionSweepResult result;

    struct Job {
        std::vector<Int> row;
        Int volume;
    };
    std::vector<Job> jobs_list;
    Int budget_left = Int(step_budget);
    for_each_partition(n, [&](const std::vector<unsigned>& parts) {
        if (distinct_only && !all_parts_distinct(parts)) return;
        ++result.partitions_total;
        if (result.truncated) return;
        std::vector<Int> row(parts.begin(), parts.end());
        Int m;
        try {
            m = row_modulus(row);
        } catch (const validation_error&) {
            result.degenerate.push_back(std::move(row));
            return;
        }
        const Int volume = m + 1;
        const Int cost = volume * Int(row.size() + 2);
        if (cost > budget_left) {
            result.truncated = true;
            return;
        }
        budget_left -= cost;
        jobs_list.push_back(Job{std::move(row), volume});
    });

    result.records = parallel_map_ordered<ExperimentRecord>(
        jobs_list.size(), jobs, [&](std::size_t i) {
            return make_record(OneRowSimplex(jobs_list[i].row, jobs_list[i].volume));
        });

    std::uint64_t unimodal = 0;
    for (const ExperimentRecord& r : result.records) unimodal += r.unimodal;
    result.unimodal_fraction =
        result.records.empty() ? Rat(1) : Rat(unimodal, result.records.size());
    return result;
}

struct RandomSampleResult {
    std::vector<ExperimentRecord> records;
    Rat unimodal_fraction;
    Rat witness_fraction;  // records where a height-2 non-IDP witness exists
};

/// Draw `count` rows uniformly from [0, N-1]^{d-1} (rejecting rows with
/// sum <= 1), compute records including the height-2 witness search. The seed
/// fully determines the sampled rows; records are merged in draw order, so
/// output bytes do not depend on the worker count.
inline RandomSampleResult sample_random(int d, const Int& N, unsigned count,
                                        std::uint64_t seed, int jobs = 1,
                                        std::uint64_t point_cap = kDefaultPointCap) {
    if (d < 2) throw validation_error("sample_random: d must be >= 2");
    if (N < 2) throw validation_error("sample_random: N must be >= 2");
    if (N > Int(UINT64_MAX))
        throw validation_error("sample_random: N too large for the sampler");
    const std::uint64_t bound = N.convert_to<std::uint64_t>();

    SplitMix64 rng(seed);
    std::vector<std::vector<Int>> rows;
    rows.reserve(count);
    while (rows.size() < count) {
        std::vector<Int> row(static_cast<std::size_t>(d) - 1);
        Int sum = 0;
        for (Int& a : row) {
            a = rng.next_below(bound);
            sum += a;
        }
        if (sum <= 1) continue;  // degenerate: box trivially empty of content
        rows.push_back(std::move(row));
    }

    RandomSampleResult result;
    ComputeOptions opts;
    opts.idp = IdpSearchMode::height2;
    opts.point_cap = point_cap;
    result.records = parallel_map_ordered<ExperimentRecord>(
        rows.size(), jobs, [&](std::size_t i) { return make_record(OneRowSimplex(rows[i], N), opts); });

    std::uint64_t unimodal = 0, witnesses = 0;
    for (const ExperimentRecord& r : result.records) {
        unimodal += r.unimodal;
        witnesses += r.idp_witness == IdpStatus::yes;
    }
    result.unimodal_fraction = count ? Rat(unimodal, count) : Rat(0);
    result.witness_fraction = count ? Rat(witnesses, count) : Rat(0);
    return result;
}

/// Constant row a_i = k_const plus ten seeded perturbations, each entry
/// shifted by an independent uniform draw from {0,1,2,3,4}; every row is
/// paired with volume M+1. The first record is always the constant row.
inline std::vector<ExperimentRecord> perturbation_experiment(int d, unsigned k_const,
                                                             std::uint64_t seed,
                                                             unsigned perturbations = 10,
                                                             int jobs = 1) {
    if (d < 2) throw validation_error("perturbation_experiment: d must be >= 2");
    if (k_const < 1) throw validation_error("perturbation_experiment: k_const must be >= 1");

    SplitMix64 rng(seed);
    std::vector<std::vector<Int>> rows;
    rows.emplace_back(static_cast<std::size_t>(d) - 1, Int(k_const));
    for (unsigned p = 0; p < perturbations; ++p) {
        std::vector<Int> row(static_cast<std::size_t>(d) - 1);
        for (Int& a : row) a = Int(k_const) + Int(rng.next_below(5));
        rows.push_back(std::move(row));
    }
    return parallel_map_ordered<ExperimentRecord>(rows.size(), jobs, [&](std::size_t i) {
        return make_record(OneRowSimplex(rows[i], row_modulus(rows[i]) + 1));
    });
}

}  // namespace boxpoly
