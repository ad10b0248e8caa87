#pragma once

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "boxpoly/distribution.hpp"
#include "boxpoly/numeric.hpp"
#include "boxpoly/polynomial.hpp"
#include "boxpoly/simplex.hpp"

namespace boxpoly {

enum class IdpStatus { yes, no, skipped };

inline const char* to_string(IdpStatus s) {
    switch (s) {
        case IdpStatus::yes: return "yes";
        case IdpStatus::no: return "no";
        case IdpStatus::skipped: return "skipped";
    }
    return "?";
}

inline constexpr int kRecordSchemaVersion = 1;

/// One row of harness output. Polynomial vectors are serialized padded to
/// length d+1; integers go out as decimal strings so arbitrary precision
/// survives the trip. `gcd_criterion` stores whether h* = 1 + B, which for
/// rows with a well-defined modulus is exactly the coprimality criterion.
struct ExperimentRecord {
    std::vector<Int> row;
    Int N;
    int d = 0;
    IntPolynomial box;
    IntPolynomial hstar;
    CoefficientDistribution box_dist;  // empty when box == 0
    bool unimodal = false;
    bool strictly_unimodal = false;
    bool gcd_criterion = false;
    IdpStatus idp_witness = IdpStatus::skipped;
    double wall_ms = 0.0;

    std::string key() const {
        std::string out;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i].str();
        }
        out += ';';
        out += N.str();
        return out;
    }
};

namespace detail {

inline void append_string_array(std::string& out, const std::vector<Int>& values) {
    out += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += '"';
        out += values[i].str();
        out += '"';
    }
    out += ']';
}

}  // namespace detail

/// Fixed field order and formatting; with `with_timing` false the ms field is
/// emitted as 0.0 so that reruns and different worker counts produce
/// byte-identical files.
inline std::string to_json_line(const ExperimentRecord& r, bool with_timing = false) {
    std::string out = "{\"schema\":";
    out += std::to_string(kRecordSchemaVersion);
    out += ",\"a\":";
    detail::append_string_array(out, r.row);
    out += ",\"N\":\"";
    out += r.N.str();
    out += "\",\"d\":";
    out += std::to_string(r.d);
    const std::size_t len = static_cast<std::size_t>(r.d) + 1;
    out += ",\"box\":";
    detail::append_string_array(out, r.box.padded(len));
    out += ",\"hstar\":";
    detail::append_string_array(out, r.hstar.padded(len));
    out += ",\"box_dist\":[";
    if (r.box_dist.size() > 0) {
        for (std::size_t i = 0; i < len; ++i) {
            if (i) out += ',';
            const Rat p = r.box_dist.prob(i);
            out += "[\"";
            out += boost::multiprecision::numerator(p).str();
            out += "\",\"";
            out += boost::multiprecision::denominator(p).str();
            out += "\"]";
        }
    }
    out += "],\"unimodal\":";
    out += r.unimodal ? "true" : "false";
    out += ",\"strictly_unimodal\":";
    out += r.strictly_unimodal ? "true" : "false";
    out += ",\"gcd_criterion\":";
    out += r.gcd_criterion ? "true" : "false";
    out += ",\"idp_witness\":\"";
    out += to_string(r.idp_witness);
    out += "\",\"ms\":";
    if (with_timing) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", r.wall_ms);
        out += buf;
    } else {
        out += "0.0";
    }
    out += '}';
    return out;
}

/// Cross-module consistency: box bounded by h*, box/z palindromic, the
/// distribution derived from box and summing to one, h*(1) = N, h*_0 = 1.
inline void check_record_consistency(const ExperimentRecord& r) {
    if (!coefficientwise_leq(r.box, r.hstar))
        throw internal_error("record: box exceeds hstar coefficient-wise");
    if (!is_palindromic(r.box, 1, static_cast<std::size_t>(r.d)))
        throw internal_error("record: box/z not palindromic");
    if (r.hstar.coeff(0) != 1) throw internal_error("record: hstar constant term != 1");
    if (r.hstar.value_at_one() != r.N) throw internal_error("record: hstar(1) != N");
    if (r.box.is_zero()) {
        if (r.box_dist.size() != 0) throw internal_error("record: distribution of zero box");
    } else {
        if (!(to_distribution(r.box) == r.box_dist))
            throw internal_error("record: distribution does not match box");
        Rat total = 0;
        for (const Rat& p : r.box_dist.probs()) total += p;
        if (total != 1) throw internal_error("record: distribution does not sum to 1");
    }
}

}  // namespace boxpoly
