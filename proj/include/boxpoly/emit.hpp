#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "boxpoly/record.hpp"

namespace boxpoly {

/// Optional first line of a json-lines file, documenting how the records were
/// produced (command, seed, generator identity). Reader code skips it.
struct FileHeader {
    std::string command;
    std::string rng;   // empty when the command is deterministic
    std::string seed;  // decimal string, empty when unseeded
};

inline std::string to_json_line(const FileHeader& h) {
    nlohmann::ordered_json j;
    j["schema"] = kRecordSchemaVersion;
    j["header"]["command"] = h.command;
    if (!h.rng.empty()) j["header"]["rng"] = h.rng;
    if (!h.seed.empty()) j["header"]["seed"] = h.seed;
    return j.dump();
}

inline void write_jsonl(std::ostream& os, const std::vector<ExperimentRecord>& records,
                        bool with_timing = false, const FileHeader* header = nullptr) {
    if (header) os << to_json_line(*header) << '\n';
    for (const ExperimentRecord& r : records) os << to_json_line(r, with_timing) << '\n';
}

inline ExperimentRecord record_from_json(const nlohmann::json& j) {
    ExperimentRecord r;
    for (const auto& v : j.at("a")) r.row.emplace_back(v.get<std::string>());
    r.N = Int(j.at("N").get<std::string>());
    r.d = j.at("d").get<int>();
    std::vector<Int> box, hs;
    for (const auto& v : j.at("box")) box.emplace_back(v.get<std::string>());
    for (const auto& v : j.at("hstar")) hs.emplace_back(v.get<std::string>());
    r.box = IntPolynomial(std::move(box));
    r.hstar = IntPolynomial(std::move(hs));
    if (!j.at("box_dist").empty()) {
        std::vector<Rat> probs;
        for (const auto& pair : j.at("box_dist"))
            probs.emplace_back(Int(pair.at(0).get<std::string>()),
                               Int(pair.at(1).get<std::string>()));
        r.box_dist = CoefficientDistribution(std::move(probs));
    }
    r.unimodal = j.at("unimodal").get<bool>();
    r.strictly_unimodal = j.at("strictly_unimodal").get<bool>();
    r.gcd_criterion = j.at("gcd_criterion").get<bool>();
    const std::string idp = j.at("idp_witness").get<std::string>();
    r.idp_witness = idp == "yes"   ? IdpStatus::yes
                    : idp == "no"  ? IdpStatus::no
                                   : IdpStatus::skipped;
    r.wall_ms = j.at("ms").get<double>();
    return r;
}

/// Read records, skipping header lines and blank lines.
inline std::vector<ExperimentRecord> read_jsonl(std::istream& is) {
    std::vector<ExperimentRecord> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const nlohmann::json j = nlohmann::json::parse(line);
        if (j.contains("header")) continue;
        out.push_back(record_from_json(j));
    }
    return out;
}

/// Keys (spec strings) already present in a json-lines stream; lets reruns
/// resume by skipping rows that were computed before.
inline std::set<std::string> existing_keys(std::istream& is) {
    std::set<std::string> keys;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const nlohmann::json j = nlohmann::json::parse(line);
        if (j.contains("header")) continue;
        ExperimentRecord r;
        for (const auto& v : j.at("a")) r.row.emplace_back(v.get<std::string>());
        r.N = Int(j.at("N").get<std::string>());
        keys.insert(r.key());
    }
    return keys;
}

inline void write_csv(std::ostream& os, const std::vector<ExperimentRecord>& records,
                      bool with_timing = false) {
    os << "spec,d,N,box_total,unimodal,strictly_unimodal,gcd_criterion,idp_witness,box,ms\n";
    for (const ExperimentRecord& r : records) {
        os << '"' << r.key() << "\"," << r.d << ',' << r.N.str() << ','
           << r.box.value_at_one().str() << ',' << (r.unimodal ? 1 : 0) << ','
           << (r.strictly_unimodal ? 1 : 0) << ',' << (r.gcd_criterion ? 1 : 0) << ','
           << to_string(r.idp_witness) << ",\"";
        const auto padded = r.box.padded(static_cast<std::size_t>(r.d) + 1);
        for (std::size_t i = 0; i < padded.size(); ++i) {
            if (i) os << ' ';
            os << padded[i].str();
        }
        os << "\",";
        if (with_timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", r.wall_ms);
            os << buf;
        } else {
            os << "0.0";
        }
        os << '\n';
    }
}

namespace detail {

inline std::string decimal(const Rat& x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10f", x.convert_to<double>());
    return buf;
}

}  // namespace detail

/// Distribution table for plotting: one line per coefficient index with the
/// exact probability and a decimal rendering.
inline void write_plot_tsv(std::ostream& os, const ExperimentRecord& r) {
    os << "# spec\t" << r.key() << '\n';
    os << "# columns\tindex\tprobability(exact)\tprobability(decimal)\n";
    if (r.box.is_zero()) {
        os << "# box polynomial is zero; empty distribution\n";
        return;
    }
    for (std::size_t i = 0; i <= static_cast<std::size_t>(r.d); ++i) {
        const Rat p = r.box_dist.prob(i);
        os << i << '\t' << boost::multiprecision::numerator(p).str() << '/'
           << boost::multiprecision::denominator(p).str() << '\t' << detail::decimal(p) << '\n';
    }
}

/// Standalone bar chart of one record's coefficient distribution.
inline void write_svg(std::ostream& os, const ExperimentRecord& r) {
    const int width = 720, height = 420, margin = 48;
    const std::size_t bins = static_cast<std::size_t>(r.d) + 1;
    Rat peak = 0;
    for (std::size_t i = 0; i < bins; ++i) peak = std::max(peak, r.box_dist.prob(i));
    if (peak == 0) peak = 1;
    const double plot_w = width - 2.0 * margin;
    const double plot_h = height - 2.0 * margin;
    const double bar_w = plot_w / static_cast<double>(bins);

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\">\n";
    os << "  <title>" << r.key() << "</title>\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "  <line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
       << width - margin << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    os << "  <line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
       << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    for (std::size_t i = 0; i < bins; ++i) {
        const double frac = (r.box_dist.prob(i) / peak).convert_to<double>();
        const double h = frac * plot_h;
        const double x = margin + bar_w * static_cast<double>(i) + bar_w * 0.1;
        const double y = height - margin - h;
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "  <rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
                      "fill=\"steelblue\"/>\n",
                      x, y, bar_w * 0.8, h);
        os << buf;
        if (bins <= 40) {
            std::snprintf(buf, sizeof buf,
                          "  <text x=\"%.2f\" y=\"%d\" font-size=\"10\" "
                          "text-anchor=\"middle\">%zu</text>\n",
                          x + bar_w * 0.4, height - margin + 14, i);
            os << buf;
        }
    }
    os << "  <text x=\"" << width / 2 << "\" y=\"" << margin / 2
       << "\" font-size=\"13\" text-anchor=\"middle\">coefficient distribution, " << r.key()
       << "</text>\n";
    os << "</svg>\n";
}

}  // namespace boxpoly
