// boxpoly: exact computations for one-row Hermite normal form lattice
// simplices: h*- and local h*-polynomials, unimodality classification,
// boundary/interior decompositions, integer-decomposition witnesses, scaling
// checks, and reproducible experiment sweeps.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boxpoly/asymptotics.hpp"
#include "boxpoly/emit.hpp"
#include "boxpoly/families.hpp"
#include "boxpoly/harness.hpp"
#include "boxpoly/invariants.hpp"
#include "boxpoly/simplex.hpp"

using namespace boxpoly;

namespace {

std::vector<Int> parse_row_only(const std::string& text) {
    std::vector<Int> row;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(pos, comma - pos);
        std::size_t x = tok.find_first_of("x");
        if (x == std::string::npos) x = tok.find("\xc3\x97");
        if (x != std::string::npos) {
            const std::string val = tok.substr(0, x);
            const std::string cnt = tok.substr(x + (tok[x] == 'x' ? 1 : 2));
            const long count = std::stol(cnt);
            for (long c = 0; c < count; ++c) row.emplace_back(val);
        } else if (!tok.empty()) {
            row.emplace_back(tok);
        } else {
            throw validation_error("empty row entry");
        }
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    if (row.empty()) throw validation_error("row must not be empty");
    return row;
}

struct OutputTarget {
    std::string path;  // empty = stdout

    template <class Fn>
    void write(Fn&& fn) const {
        if (path.empty()) {
            fn(std::cout);
        } else {
            std::ofstream os(path, std::ios::trunc);
            if (!os) throw std::runtime_error("cannot open output file: " + path);
            fn(os);
        }
    }
};

void emit_records(const std::vector<ExperimentRecord>& records, const std::string& format,
                  const OutputTarget& out, bool timings, const FileHeader* header = nullptr) {
    out.write([&](std::ostream& os) {
        if (format == "json") {
            write_jsonl(os, records, timings, header);
        } else if (format == "csv") {
            write_csv(os, records, timings);
        } else if (format == "tsv") {
            for (std::size_t i = 0; i < records.size(); ++i) {
                if (i) os << '\n';
                write_plot_tsv(os, records[i]);
            }
        } else if (format == "svg") {
            if (records.empty()) throw validation_error("svg output needs a record");
            write_svg(os, records.front());
        } else {
            throw validation_error("unknown format: " + format);
        }
    });
}

std::string fraction_text(const Rat& f) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(f).str() << '/'
       << boost::multiprecision::denominator(f).str() << " (" << f.convert_to<double>() << ')';
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact h*- and local h*-polynomial computations for one-row Hermite "
        "normal form lattice simplices"};
    app.require_subcommand(1);

    std::string spec, row_text, format = "json", out_path, in_path;
    std::uint64_t seed = 0, cap = kDefaultPointCap, budget = 200'000'000ULL;
    int jobs = 1, k_arg = 1, k_max = 20, a_arg = 0, d_arg = 0, q_arg = 0, count = 10;
    int kconst = 1, height = 2, index = 0;
    std::string n_text;
    unsigned n_arg = 0;
    long long r_arg = 0;
    bool exhaustive_idp = false, timings = false, distinct = false, resume = false,
         verify = false, witness = false;

    const auto add_common = [&](CLI::App* cmd, bool with_spec) {
        if (with_spec)
            cmd->add_option("--spec", spec, "simplex as \"a1,...,ak;N\" (vxc repeats v)")
                ->required();
        cmd->add_option("--jobs", jobs, "worker threads");
        cmd->add_option("--format", format, "output format: json, csv, tsv, svg");
        cmd->add_option("--out", out_path, "output file (default stdout)");
        cmd->add_option("--cap", cap, "lattice point budget for IDP searches");
        cmd->add_flag("--timings", timings, "emit measured wall times instead of 0.0");
    };

    auto* cmd_compute = app.add_subcommand("compute", "full record for one simplex");
    add_common(cmd_compute, true);
    cmd_compute->add_flag("--exhaustive-idp", exhaustive_idp,
                          "run the full IDP certification sweep");

    auto* cmd_hstar = app.add_subcommand("hstar", "h*- and local h*-polynomials");
    add_common(cmd_hstar, true);

    auto* cmd_stapledon =
        app.add_subcommand("stapledon", "boundary/interior decomposition of h*");
    add_common(cmd_stapledon, true);

    auto* cmd_idp = app.add_subcommand("idp-witness", "search for non-IDP witnesses");
    add_common(cmd_idp, true);
    cmd_idp->add_option("--height", height, "witness height (default 2)");
    cmd_idp->add_flag("--exhaustive-idp", exhaustive_idp,
                      "search all deciding heights 2..max(2,d-1)");

    auto* cmd_alpha = app.add_subcommand("alpha", "alpha-vector of the all-ones family");
    cmd_alpha->add_option("--a", a_arg, "parameter a (= d-2)")->required();
    cmd_alpha->add_option("--N", n_text, "volume N")->required();
    cmd_alpha->add_option("--out", out_path, "output file");

    auto* cmd_geometric =
        app.add_subcommand("geometric", "geometric-row family (q^{k-1},...,q,1;q^k)");
    cmd_geometric->add_option("--q", q_arg, "base q >= 2")->required();
    cmd_geometric->add_option("--k", k_arg, "length parameter k >= 2")->required();
    cmd_geometric->add_option("--jobs", jobs, "worker threads");
    cmd_geometric->add_option("--format", format,
                              "text (default), or tsv/svg/csv/json record output");
    cmd_geometric->add_option("--out", out_path, "output file");
    cmd_geometric->add_option("--cap", cap, "lattice point budget");
    cmd_geometric->add_flag("--verify", verify, "check the closed form against enumeration");
    cmd_geometric->add_flag("--witness", witness, "construct the non-IDP witness");

    auto* cmd_asym = app.add_subcommand("asymptotic-check",
                                        "exact scaling identity B(S_{kM+1}) = k B(S_{M+1})");
    cmd_asym->add_option("--row", row_text, "row entries \"a1,...,ak\"")->required();
    cmd_asym->add_option("--k", k_arg, "scale factor k >= 1")->required();
    cmd_asym->add_option("--jobs", jobs, "worker threads");

    auto* cmd_limit = app.add_subcommand("limit", "limit profile for a fixed row");
    cmd_limit->add_option("--row", row_text, "row entries \"a1,...,ak\"")->required();
    cmd_limit->add_option("--r", r_arg, "offset r in [0, M-1] for the convergence table");
    cmd_limit->add_option("--k-max", k_max, "table length (default 20)");
    cmd_limit->add_option("--jobs", jobs, "worker threads");
    cmd_limit->add_option("--out", out_path, "output file");

    auto* cmd_sweep = app.add_subcommand("sweep-partitions",
                                         "records for every partition of n, volume M+1");
    cmd_sweep->add_option("--n", n_arg, "partition target")->required();
    cmd_sweep->add_flag("--distinct", distinct, "distinct parts only");
    cmd_sweep->add_option("--jobs", jobs, "worker threads");
    cmd_sweep->add_option("--format", format, "output format");
    cmd_sweep->add_option("--out", out_path, "output file");
    cmd_sweep->add_option("--budget", budget, "total group-scan step budget");
    cmd_sweep->add_flag("--resume", resume, "skip specs already present in --out");
    cmd_sweep->add_flag("--timings", timings, "emit measured wall times");

    auto* cmd_sample = app.add_subcommand("sample-random",
                                          "seeded uniform sample of rows at fixed d and N");
    cmd_sample->add_option("--d", d_arg, "dimension")->required();
    cmd_sample->add_option("--N", n_text, "volume")->required();
    cmd_sample->add_option("--count", count, "number of samples")->required();
    cmd_sample->add_option("--seed", seed, "64-bit seed")->required();
    cmd_sample->add_option("--jobs", jobs, "worker threads");
    cmd_sample->add_option("--format", format, "output format");
    cmd_sample->add_option("--out", out_path, "output file");
    cmd_sample->add_option("--cap", cap, "lattice point budget");
    cmd_sample->add_flag("--timings", timings, "emit measured wall times");

    auto* cmd_perturb = app.add_subcommand("perturb",
                                           "constant row plus seeded {0..4} perturbations");
    cmd_perturb->add_option("--d", d_arg, "dimension")->required();
    cmd_perturb->add_option("--k-const", kconst, "constant row value")->required();
    cmd_perturb->add_option("--seed", seed, "64-bit seed")->required();
    cmd_perturb->add_option("--count", count, "number of perturbations (default 10)");
    cmd_perturb->add_option("--jobs", jobs, "worker threads");
    cmd_perturb->add_option("--format", format, "output format");
    cmd_perturb->add_option("--out", out_path, "output file");
    cmd_perturb->add_flag("--timings", timings, "emit measured wall times");

    auto* cmd_emit = app.add_subcommand("emit", "re-emit stored json-lines records");
    cmd_emit->add_option("--in", in_path, "json-lines input file")->required();
    cmd_emit->add_option("--format", format, "output format: json, csv, tsv, svg")
        ->required();
    cmd_emit->add_option("--out", out_path, "output file");
    cmd_emit->add_option("--index", index, "record index for svg output");
    cmd_emit->add_flag("--timings", timings, "preserve stored wall times");

    CLI11_PARSE(app, argc, argv);
    const OutputTarget out{out_path};

    try {
        if (cmd_compute->parsed()) {
            ComputeOptions opts;
            opts.idp = exhaustive_idp ? IdpSearchMode::exhaustive : IdpSearchMode::skip;
            opts.point_cap = cap;
            opts.jobs = jobs;
            emit_records({run_compute(spec, opts)}, format, out, timings);
        } else if (cmd_hstar->parsed()) {
            const OneRowSimplex s = OneRowSimplex::parse(spec);
            const detail::HstarData data = detail::hstar_data(s, jobs);
            out.write([&](std::ostream& os) {
                os << "spec      " << s.spec_string() << "\n";
                os << "h*        " << data.hstar.pretty() << "\n";
                os << "B         " << data.box.pretty() << "\n";
                os << "h*(1)     " << data.hstar.value_at_one().str() << "\n";
                os << "B(1)      " << data.box.value_at_one().str() << "\n";
                os << "unimodal  " << (is_unimodal(data.box) ? "yes" : "no") << "\n";
                os << "strictly  " << (is_strictly_unimodal(data.box) ? "yes" : "no")
                   << "\n";
            });
        } else if (cmd_stapledon->parsed()) {
            const OneRowSimplex s = OneRowSimplex::parse(spec);
            const StapledonDecomposition dec = stapledon_decompose(s);
            out.write([&](std::ostream& os) {
                os << "spec  " << s.spec_string() << "\n";
                os << "ell   " << dec.ell_min.str() << "\n";
                os << "a(z)  " << dec.a_poly.pretty() << "\n";
                os << "b(z)  " << dec.b_poly.pretty() << "\n";
                if (dec.ell_min == 1)
                    os << "zb<=B " << (check_zb_bounded_by_B(s) ? "yes" : "no") << "\n";
            });
        } else if (cmd_idp->parsed()) {
            const OneRowSimplex s = OneRowSimplex::parse(spec);
            const std::optional<IdpWitness> w =
                exhaustive_idp ? find_non_idp_witness_exhaustive(s, cap)
                               : find_non_idp_witness(s, height, cap);
            out.write([&](std::ostream& os) {
                if (!w) {
                    os << "no witness"
                       << (exhaustive_idp ? " at any deciding height (IDP certified)" : "")
                       << "\n";
                    return;
                }
                os << "witness at height " << w->height.str() << ": (";
                for (std::size_t i = 0; i < w->point.size(); ++i)
                    os << (i ? "," : "") << w->point[i].str();
                os << ")\n";
            });
        } else if (cmd_alpha->parsed()) {
            const Int a = a_arg;
            const Int N{n_text};
            const AlphaVector alpha = alpha_vector(a, N);
            out.write([&](std::ostream& os) {
                os << "alpha(" << a.str() << "," << N.str() << ") = (";
                for (std::size_t i = 0; i < alpha.entries.size(); ++i)
                    os << (i ? "," : "") << alpha.entries[i].str();
                os << ")\n";
                if (a >= 2 && boost::multiprecision::gcd(a, N) == 1) {
                    bool match = true;
                    for (Int i = 0; i < a; ++i)
                        match = match &&
                                allones_residue_rule(a, N, i) ==
                                    alpha.entries[i.convert_to<std::size_t>()];
                    os << "residue rule agrees: " << (match ? "yes" : "NO") << "\n";
                }
            });
        } else if (cmd_geometric->parsed()) {
            const IntPolynomial fast = geometric_local_hstar_fast(q_arg, k_arg);
            const OneRowSimplex s = geometric_simplex(q_arg, k_arg);
            out.write([&](std::ostream& os) {
                if (format == "tsv" || format == "svg" || format == "csv" ||
                    format == "json") {
                    ComputeOptions opts;
                    opts.point_cap = cap;
                    opts.jobs = jobs;
                    const ExperimentRecord rec = make_record(s, opts);
                    if (format == "tsv") write_plot_tsv(os, rec);
                    else if (format == "svg") write_svg(os, rec);
                    else if (format == "csv") write_csv(os, {rec}, timings);
                    else write_jsonl(os, {rec}, timings);
                    return;
                }
                os << "spec        " << s.spec_string() << "\n";
                os << "f(t)        " << digit_poly_f(q_arg, k_arg).pretty('t') << "\n";
                os << "delta       (";
                const std::vector<Int> delta = geometric_delta(q_arg, k_arg);
                for (std::size_t i = 0; i < delta.size(); ++i)
                    os << (i ? "," : "") << delta[i].str();
                os << ")\n";
                os << "B (closed)  " << fast.pretty() << "\n";
                os << "B(1)        " << fast.value_at_one().str() << "\n";
                if (verify) {
                    const IntPolynomial slow = local_hstar(s, jobs);
                    os << "enumeration " << (slow == fast ? "matches" : "MISMATCH") << "\n";
                }
                if (witness) {
                    const IdpWitness w = geometric_non_idp_witness(q_arg, k_arg, cap);
                    os << "non-IDP witness (";
                    for (std::size_t i = 0; i < w.point.size(); ++i)
                        os << (i ? "," : "") << w.point[i].str();
                    os << ") at height 2\n";
                }
            });
        } else if (cmd_asym->parsed()) {
            const std::vector<Int> row = parse_row_only(row_text);
            const bool ok = scaling_identity_check(row, k_arg, jobs);
            std::cout << (ok ? "true" : "false") << "\n";
            return ok ? 0 : 1;
        } else if (cmd_limit->parsed()) {
            const std::vector<Int> row = parse_row_only(row_text);
            const AsymptoticProfile p = limit_profile(row);
            out.write([&](std::ostream& os) {
                os << "M          " << p.M.str() << "\n";
                os << "B(S_{M+1}) " << p.limit_box.pretty() << "\n";
                os << "limit dist (";
                for (std::size_t i = 0; i < p.limit_dist.size(); ++i) {
                    const Rat pr = p.limit_dist.prob(i);
                    os << (i ? "," : "") << boost::multiprecision::numerator(pr).str() << '/'
                       << boost::multiprecision::denominator(pr).str();
                }
                os << ")\n";
                if (cmd_limit->count("--r")) {
                    const ConvergenceReport rep =
                        convergence_report(row, Int(r_arg), k_max, jobs);
                    os << "k\tN\ttv\tenvelope\tstrict\n";
                    for (const ConvergenceRow& cr : rep.rows) {
                        os << cr.k.str() << '\t' << cr.N.str() << '\t';
                        if (cr.degenerate) {
                            os << "degenerate\t-\t-\n";
                            continue;
                        }
                        os << cr.tv.convert_to<double>() << '\t'
                           << cr.envelope.convert_to<double>() << '\t'
                           << (cr.strictly_unimodal ? "yes" : "no") << '\n';
                    }
                    if (rep.strict_threshold)
                        os << "observed strict-unimodality threshold k* = "
                           << rep.strict_threshold->str() << " (empirical, up to k-max)\n";
                }
            });
        } else if (cmd_sweep->parsed()) {
            std::set<std::string> skip;
            if (resume && !out_path.empty()) {
                std::ifstream existing(out_path);
                if (existing) skip = existing_keys(existing);
            }
            const PartitionSweepResult res = sweep_partitions(n_arg, distinct, jobs, budget);
            std::vector<ExperimentRecord> fresh;
            for (const ExperimentRecord& r : res.records)
                if (!skip.count(r.key())) fresh.push_back(r);
            if (resume && !out_path.empty()) {
                std::ofstream os(out_path, std::ios::app);
                if (!os) throw std::runtime_error("cannot open output file: " + out_path);
                write_jsonl(os, fresh, timings);
            } else {
                emit_records(fresh, format, out, timings);
            }
            std::cerr << "partitions " << res.partitions_total << ", computed "
                      << res.records.size() << " (" << fresh.size() << " new), degenerate "
                      << res.degenerate.size() << ", unimodal fraction "
                      << fraction_text(res.unimodal_fraction)
                      << (res.truncated ? ", TRUNCATED by budget" : "") << "\n";
        } else if (cmd_sample->parsed()) {
            const RandomSampleResult res =
                sample_random(d_arg, Int(n_text), static_cast<unsigned>(count), seed, jobs,
                              cap);
            const FileHeader header{"sample-random", kRngName, std::to_string(seed)};
            emit_records(res.records, format, out, timings,
                         format == "json" ? &header : nullptr);
            std::cerr << "unimodal fraction " << fraction_text(res.unimodal_fraction)
                      << ", non-IDP witness fraction " << fraction_text(res.witness_fraction)
                      << "\n";
        } else if (cmd_perturb->parsed()) {
            const auto records = perturbation_experiment(
                d_arg, static_cast<unsigned>(kconst), seed, static_cast<unsigned>(count),
                jobs);
            const FileHeader header{"perturb", kRngName, std::to_string(seed)};
            emit_records(records, format, out, timings, format == "json" ? &header : nullptr);
            std::uint64_t unimodal = 0;
            for (const auto& r : records) unimodal += r.unimodal;
            std::cerr << "unimodal " << unimodal << "/" << records.size() << "\n";
        } else if (cmd_emit->parsed()) {
            std::ifstream in(in_path);
            if (!in) throw std::runtime_error("cannot open input file: " + in_path);
            std::vector<ExperimentRecord> records = read_jsonl(in);
            if (format == "svg") {
                if (index < 0 || static_cast<std::size_t>(index) >= records.size())
                    throw validation_error("--index out of range");
                records = {records[static_cast<std::size_t>(index)]};
            }
            emit_records(records, format, out, timings);
        }
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
