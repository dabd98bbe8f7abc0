// Command-line front end: continued fractions of s-th roots, their resulting
// ABC equations and metrics, explicit Roth/Ridout bound tables, and the
// inequality verification scans.

#include "abcroots/bounds.hpp"
#include "abcroots/errors.hpp"
#include "abcroots/metrics.hpp"
#include "abcroots/scan.hpp"
#include "abcroots/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

namespace {

using namespace abcroots;
using nlohmann::json;

// 0 ok, 2 usage, 3 precision, 4 I/O, 5 verification violations
enum ExitCode : int { kOk = 0, kUsage = 2, kPrecision = 3, kIo = 4, kViolations = 5 };

struct GlobalFlags {
    bool json_output = false;
    int jobs = 1;
};

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::vector<Int> parse_prime_list(const std::string& csv) {
    std::vector<Int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Int p(item, 10);
        if (!is_probable_prime(p)) throw std::invalid_argument(item + " is not prime");
        out.push_back(p);
    }
    if (out.empty()) throw std::invalid_argument("empty prime list");
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

json violations_json(const VerificationReport& report) {
    json arr = json::array();
    for (const auto& v : report.violations)
        arr.push_back({{"k", v.k.get_str()},
                       {"s", v.s},
                       {"n", v.n},
                       {"what", v.what},
                       {"lhs", v.lhs},
                       {"rhs", v.rhs},
                       {"slack", v.slack}});
    return arr;
}

json report_json(const VerificationReport& report) {
    return json{{"suite", report.suite},
                {"config", report.config},
                {"checked", report.instances_checked},
                {"skipped", report.skipped},
                {"violations", violations_json(report)},
                {"notes", report.notes},
                {"max_observed", report.max_observed},
                {"elapsed_seconds", report.elapsed_seconds}};
}

void print_report(const VerificationReport& report, bool as_json) {
    if (as_json) {
        std::cout << report_json(report).dump() << "\n";
        return;
    }
    std::cout << report.suite << " [" << report.config << "]\n";
    std::cout << "  checked " << report.instances_checked << ", skipped " << report.skipped
              << ", violations " << report.violations.size() << ", max observed "
              << fmt(report.max_observed) << "\n";
    for (const auto& v : report.violations)
        std::cout << "  VIOLATION k=" << v.k << " n=" << v.n << " " << v.what << " (lhs=" << v.lhs
                  << ", rhs=" << v.rhs << ")\n";
    for (const auto& note : report.notes) std::cout << "  note: " << note << "\n";
}

int cmd_expand(long k, unsigned s, int terms, const ExpandOptions& options,
               const GlobalFlags& flags) {
    RootSpec root(k, s);
    auto cf = expand(root, terms, options);
    auto convs = convergents(cf);
    if (flags.json_output) {
        json j{{"k", k}, {"s", s}, {"precision_bits", cf.precision_bits}};
        j["coefficients"] = json::array();
        for (const auto& b : cf.coefficients) j["coefficients"].push_back(b.get_str());
        j["convergents"] = json::array();
        for (const auto& c : convs)
            j["convergents"].push_back({{"n", c.n}, {"p", c.p.get_str()}, {"q", c.q.get_str()}});
        std::cout << j.dump() << "\n";
        return kOk;
    }
    std::cout << "[" << cf.coefficients[0].get_str();
    for (size_t i = 1; i < cf.coefficients.size(); ++i)
        std::cout << (i == 1 ? "; " : ", ") << cf.coefficients[i].get_str();
    std::cout << "]\n";
    for (const auto& c : convs)
        std::cout << "n=" << c.n << "  " << c.p.get_str() << "/" << c.q.get_str() << "\n";
    return kOk;
}

int cmd_equations(long k, unsigned s, int terms, const GlobalFlags& flags) {
    RootSpec root(k, s);
    auto eqs = resulting_equations(root, terms);
    json arr = json::array();
    for (const auto& eq : eqs) {
        auto triple = normalize_to_abc(eq);
        if (flags.json_output) {
            arr.push_back({{"n", eq.n},
                           {"p", eq.p.get_str()},
                           {"q", eq.q.get_str()},
                           {"d", eq.d.get_str()},
                           {"g", eq.g.get_str()},
                           {"a", triple.a.get_str()},
                           {"b", triple.b.get_str()},
                           {"c", triple.c.get_str()}});
        } else {
            std::cout << "n=" << eq.n << ": " << eq.max_side().get_str() << " = "
                      << eq.min_side().get_str() << " + " << Int(abs(eq.d)).get_str()
                      << "  (d = " << eq.d.get_str() << ", g = " << eq.g.get_str() << ")  abc = ("
                      << triple.a.get_str() << ", " << triple.b.get_str() << ", "
                      << triple.c.get_str() << ")\n";
        }
    }
    if (flags.json_output) std::cout << arr.dump() << "\n";
    return kOk;
}

int cmd_metrics(long k, unsigned s, int terms, const std::string& eps_csv,
                const GlobalFlags& flags) {
    RootSpec root(k, s);
    std::vector<Rat> eps_list;
    if (!eps_csv.empty()) eps_list = parse_rat_list(eps_csv);
    auto eqs = resulting_equations(root, terms);
    json arr = json::array();
    for (const auto& eq : eqs) {
        MetricsRecord rec;
        bool skipped = false;
        try {
            rec = equation_metrics(eq, eps_list);
        } catch (const FactorizationBudgetExceeded&) {
            skipped = true;
        }
        if (flags.json_output) {
            json j{{"n", eq.n}};
            if (skipped) {
                j["flags"] = {"factorization-skipped"};
            } else {
                j["quality"] = rec.quality;
                j["is_hit"] = rec.is_hit;
                j["rad_abc"] = rec.rad_abc.get_str();
                j["approx_gain"] = *rec.approximation_gain;
                j["power_gain"] = *rec.power_gain;
                json keps = json::object();
                for (const auto& [eps, value] : rec.k_epsilon) keps[rat_to_string(eps)] = value;
                j["k_epsilon"] = keps;
            }
            arr.push_back(j);
        } else if (skipped) {
            std::cout << "n=" << eq.n << "  factorization-skipped\n";
        } else {
            std::cout << "n=" << eq.n << "  quality=" << fmt(rec.quality)
                      << "  hit=" << (rec.is_hit ? "yes" : "no")
                      << "  approx_gain=" << fmt(*rec.approximation_gain)
                      << "  power_gain=" << fmt(*rec.power_gain);
            for (const auto& [eps, value] : rec.k_epsilon)
                std::cout << "  K_" << rat_to_string(eps) << "=" << fmt(value);
            std::cout << "\n";
        }
    }
    if (flags.json_output) std::cout << arr.dump() << "\n";
    return kOk;
}

int cmd_roth_table(long k, const std::string& eps_csv, int corpus_depth, bool include_seed,
                   int fixed_eq, const std::string& p1_text, const GlobalFlags& flags) {
    RootSpec root(k, 3);
    auto eps_list = parse_rat_list(eps_csv);
    KSelectionPolicy policy;
    if (fixed_eq >= 0) {
        policy.kind = KSelectionPolicy::Kind::FixedEquation;
        policy.fixed_index = fixed_eq;
    }
    policy.corpus_depth = corpus_depth;
    policy.include_seed = include_seed;
    std::optional<Rat> p1;
    if (!p1_text.empty()) p1 = parse_rat(p1_text);

    auto rows = roth_table(root, eps_list, policy, p1);
    if (flags.json_output) {
        json arr = json::array();
        for (const auto& row : rows) {
            json j{{"eps_roth", rat_to_string(row.eps_roth)},
                   {"eps_abc", rat_to_string(row.eps_abc)},
                   {"k_eps", row.k_eps},
                   {"bound", row.bound},
                   {"k_source_index", row.k_source_index},
                   {"flags", row.flags}};
            if (row.published) j["published"] = *row.published;
            if (!row.known_bound.empty()) j["known_bound"] = row.known_bound;
            arr.push_back(j);
        }
        std::cout << arr.dump() << "\n";
        return kOk;
    }
    std::cout << "eps_roth  eps_abc  K_eps    bound     published  notes\n";
    for (const auto& row : rows) {
        std::cout << rat_to_string(row.eps_roth) << "  " << rat_to_string(row.eps_abc) << "  "
                  << fmt(row.k_eps) << "  " << fmt(row.bound) << "  "
                  << (row.published ? fmt(*row.published) : std::string("-"));
        std::string notes;
        for (const auto& f : row.flags) notes += f + " ";
        if (!row.known_bound.empty()) notes += "known: " + row.known_bound;
        if (!notes.empty()) std::cout << "  " << notes;
        std::cout << "\n";
    }
    return kOk;
}

int cmd_ridout(long k, unsigned s, const std::string& primes_csv, const std::string& eps_text,
               double K, int depth, const std::string& p1_text, const GlobalFlags& flags) {
    RidoutQuery query{RootSpec(k, s), parse_prime_list(primes_csv), parse_rat(eps_text), K, depth};
    if (s == 2) {
        double bound = ridout_sqrt_bound(query);
        auto solutions = ridout_sqrt_solutions(query);
        if (flags.json_output) {
            json j{{"bound", bound}};
            j["approximants"] = json::array();
            for (const auto& c : solutions)
                j["approximants"].push_back({{"n", c.n}, {"p", c.p.get_str()}, {"q", c.q.get_str()}});
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "bound for p: " << bound << "\n";
            std::cout << "approximants:";
            if (solutions.empty()) std::cout << " none";
            for (const auto& c : solutions) std::cout << " " << c.p.get_str() << "/" << c.q.get_str();
            std::cout << "\n";
        }
        return kOk;
    }
    if (s == 3) {
        Rat p1 = p1_text.empty() ? [&] {
            auto eqs = resulting_equations(query.root, 2);
            Rat r(eqs[1].p, eqs[1].q);
            r.canonicalize();
            return r;
        }()
                                 : parse_rat(p1_text);
        double bound = ridout_cbrt_bound(query, p1);
        if (flags.json_output)
            std::cout << json{{"bound", bound}, {"p1", rat_to_string(p1)}}.dump() << "\n";
        else
            std::cout << "bound for p: " << bound << " (p1/q1 = " << rat_to_string(p1) << ")\n";
        return kOk;
    }
    throw CLI::ValidationError("--s must be 2 or 3 for ridout");
}

int cmd_scan(const ScanOptions& options, const std::string& out_path, const std::string& csv_path,
             const GlobalFlags& flags) {
    auto skip = existing_keys(out_path);
    auto records = run_scan(options, skip);
    append_jsonl(out_path, records);
    size_t total = read_jsonl(out_path).size();
    if (!csv_path.empty()) {
        auto all = read_jsonl(out_path);
        write_csv(csv_path, all);
    }
    if (flags.json_output)
        std::cout << json{{"new_records", records.size()},
                          {"skipped_existing", skip.size()},
                          {"total_records", total}}
                         .dump()
                  << "\n";
    else
        std::cout << "wrote " << records.size() << " new records (" << skip.size()
                  << " already present, " << total << " total)\n";
    return kOk;
}

struct VerifyArgs {
    std::string suite = "all";
    unsigned s = 3;
    long k_min = 2;
    long k_max = 50;
    int depth = 20;
    long k = 2;
    std::string eps_roth = "1/2";
    double c_inverse = 0;
    long korobov_limit = 10000;
    bool with_quality = false;
};

int cmd_verify(const VerifyArgs& args, const GlobalFlags& flags) {
    std::vector<VerificationReport> reports;
    bool any_failing_violation = false;

    auto run = [&](const std::string& name) {
        if (name == "gains") {
            GainScanOptions options;
            options.depth = args.depth;
            options.jobs = flags.jobs;
            options.check_quality = args.with_quality;
            reports.push_back(scan_gains(args.s, args.k_min, args.k_max, options));
        } else if (name == "bvdp") {
            reports.push_back(bvdp_suite(args.k_min, args.k_max, args.depth, args.s));
        } else if (name == "liouville") {
            reports.push_back(liouville_suite(args.k_min, args.k_max, args.depth, args.s));
        } else if (name == "roth-form") {
            RootSpec root(args.k, 3);
            double c_inverse = args.c_inverse;
            if (c_inverse <= 0) {
                // derive 1/C from the bound formula with K from the table policy
                auto rows = roth_table(root, std::vector<Rat>{parse_rat(args.eps_roth)});
                c_inverse = rows[0].bound;
            }
            reports.push_back(check_roth_form(root, parse_rat(args.eps_roth), c_inverse, args.depth));
        } else if (name == "korobov") {
            auto check = korobov_check(args.korobov_limit);
            VerificationReport report;
            report.suite = "korobov-sharpness";
            report.config = "q_limit=" + std::to_string(args.korobov_limit);
            report.instances_checked = args.korobov_limit - 2;
            report.max_observed = check.q4_value;
            if (check.min_value <= 1.0)
                report.violations.push_back(make_violation(Int(2), 3, int(check.min_q),
                                                           "|cbrt2 - p/q| q^2.5 <= 1 away from q=4",
                                                           check.min_value, 1.0));
            report.notes.push_back("min over q != 4: " + fmt(check.min_value) + " at q=" +
                                   std::to_string(check.min_q));
            report.notes.push_back("q=4 value " + fmt(check.q4_value) + ", inverse " +
                                   fmt(1.0 / check.q4_value));
            reports.push_back(std::move(report));
        } else {
            throw CLI::ValidationError("unknown suite '" + name + "'");
        }
    };

    if (args.suite == "all") {
        run("gains");
        run("bvdp");
        run("liouville");
        run("korobov");
    } else {
        run(args.suite);
    }

    if (flags.json_output) {
        json arr = json::array();
        for (const auto& report : reports) arr.push_back(report_json(report));
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& report : reports) print_report(report, false);
    }
    for (const auto& report : reports)
        if (!report.passed()) any_failing_violation = true;
    return any_failing_violation ? kViolations : kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact continued fractions of integer roots and the ABC metrics, bounds and "
                 "inequality scans built from their resulting equations"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    app.set_config("--config");

    GlobalFlags flags;
    app.add_flag("--json", flags.json_output, "machine-readable output");
    app.add_option("--jobs", flags.jobs, "worker threads for scans")->check(CLI::PositiveNumber);

    long k = 2;
    unsigned s = 3;
    int terms = 10;

    ExpandOptions expand_options;
    auto* expand_cmd = app.add_subcommand("expand", "continued fraction coefficients and convergents");
    expand_cmd->add_option("--k", k, "radicand")->required()->check(CLI::Range(2l, long(1) << 62));
    expand_cmd->add_option("--s", s, "root degree")->required()->check(CLI::Range(2u, 64u));
    expand_cmd->add_option("--terms", terms, "coefficients to compute")->required()->check(CLI::PositiveNumber);
    expand_cmd->add_option("--bits-per-term", expand_options.bits_per_term,
                           "starting precision per coefficient")->check(CLI::PositiveNumber);
    expand_cmd->add_option("--max-doublings", expand_options.max_precision_doublings,
                           "precision doublings before giving up")->check(CLI::NonNegativeNumber);

    auto* equations_cmd = app.add_subcommand("equations", "resulting equations and ABC triples");
    equations_cmd->add_option("--k", k, "radicand")->required()->check(CLI::Range(2l, long(1) << 62));
    equations_cmd->add_option("--s", s, "root degree")->required()->check(CLI::Range(2u, 64u));
    equations_cmd->add_option("--terms", terms, "convergents to use")->required()->check(CLI::PositiveNumber);

    std::string eps_csv;
    auto* metrics_cmd = app.add_subcommand("metrics", "quality, hits, gains and K_eps per equation");
    metrics_cmd->add_option("--k", k, "radicand")->required()->check(CLI::Range(2l, long(1) << 62));
    metrics_cmd->add_option("--s", s, "root degree")->required()->check(CLI::Range(2u, 64u));
    metrics_cmd->add_option("--terms", terms, "convergents to use")->required()->check(CLI::PositiveNumber);
    metrics_cmd->add_option("--eps", eps_csv, "comma-separated epsilons for K_eps columns");

    std::string eps_roth_csv = "0.4,0.5,1";
    int corpus_depth = 3;
    bool include_seed = false;
    int fixed_eq = -1;
    std::string p1_text;
    auto* roth_cmd = app.add_subcommand("roth-table", "inverse Roth constant bounds per epsilon");
    roth_cmd->add_option("--k", k, "radicand (cubic)")->required()->check(CLI::Range(2l, long(1) << 62));
    roth_cmd->add_option("--eps-roth", eps_roth_csv,
                         "comma-separated Roth epsilons in [0,1] (maps into [0,1/2] on the ABC side)");
    roth_cmd->add_option("--corpus-depth", corpus_depth, "equations 1..N feed the K_eps maximum")
        ->check(CLI::PositiveNumber);
    roth_cmd->add_flag("--include-seed", include_seed, "admit the n=0 equation into the corpus");
    roth_cmd->add_option("--k-from-equation", fixed_eq, "take K_eps from this single equation index");
    roth_cmd->add_option("--p1", p1_text, "override the p1/q1 factor (rational)");

    std::string primes_csv;
    std::string eps_text = "1";
    double K = 1.0;
    int depth = 40;
    auto* ridout_cmd = app.add_subcommand("ridout", "S-integer denominator bounds and approximants");
    ridout_cmd->add_option("--k", k, "radicand")->required()->check(CLI::Range(2l, long(1) << 62));
    ridout_cmd->add_option("--s", s, "root degree (2 or 3)")->required()->check(CLI::Range(2u, 3u));
    ridout_cmd->add_option("--primes", primes_csv, "the set S, comma-separated primes")->required();
    ridout_cmd->add_option("--eps", eps_text, "epsilon (rational)");
    ridout_cmd->add_option("--K", K, "ABC constant K_eps");
    ridout_cmd->add_option("--depth", depth, "convergents to examine")->check(CLI::PositiveNumber);
    ridout_cmd->add_option("--p1", p1_text, "override the p1/q1 factor (cubic only)");

    ScanOptions scan_options;
    std::string out_path, csv_path;
    auto* scan_cmd = app.add_subcommand("scan", "record equations and metrics to JSONL (resumable)");
    scan_cmd->add_option("--s", scan_options.s, "root degree")->check(CLI::Range(2u, 64u));
    scan_cmd->add_option("--k-min", scan_options.k_min, "first k")->required();
    scan_cmd->add_option("--k-max", scan_options.k_max, "last k")->required();
    scan_cmd->add_option("--depth", scan_options.depth, "convergents per root")->required()
        ->check(CLI::PositiveNumber);
    scan_cmd->add_option("--out", out_path, "JSONL output path")->required();
    scan_cmd->add_option("--csv", csv_path, "also write the full record set as CSV");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run inequality suites; exit 5 on violations");
    verify_cmd->add_option("--suite", verify_args.suite,
                           "gains | bvdp | liouville | roth-form | korobov | all");
    verify_cmd->add_option("--s", verify_args.s, "root degree")->check(CLI::Range(2u, 64u));
    verify_cmd->add_option("--k-min", verify_args.k_min, "first k");
    verify_cmd->add_option("--k-max", verify_args.k_max, "last k");
    verify_cmd->add_option("--depth", verify_args.depth, "convergents per root")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--k", verify_args.k, "radicand for roth-form");
    verify_cmd->add_option("--eps-roth", verify_args.eps_roth, "Roth epsilon for roth-form");
    verify_cmd->add_option("--c-inverse", verify_args.c_inverse,
                           "1/C for roth-form (derived from the bound formula when omitted)");
    verify_cmd->add_option("--korobov-limit", verify_args.korobov_limit, "denominator limit");
    verify_cmd->add_flag("--with-quality", verify_args.with_quality,
                         "also check gain <= quality (needs factorization)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return kUsage;
    }

    try {
        if (expand_cmd->parsed()) return cmd_expand(k, s, terms, expand_options, flags);
        if (equations_cmd->parsed()) return cmd_equations(k, s, terms, flags);
        if (metrics_cmd->parsed()) return cmd_metrics(k, s, terms, eps_csv, flags);
        if (roth_cmd->parsed())
            return cmd_roth_table(k, eps_roth_csv, corpus_depth, include_seed, fixed_eq, p1_text, flags);
        if (ridout_cmd->parsed()) return cmd_ridout(k, s, primes_csv, eps_text, K, depth, p1_text, flags);
        if (scan_cmd->parsed()) {
            scan_options.jobs = flags.jobs;
            return cmd_scan(scan_options, out_path, csv_path, flags);
        }
        if (verify_cmd->parsed()) return cmd_verify(verify_args, flags);
    } catch (const InvalidRootSpec& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecision;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsage;
}
