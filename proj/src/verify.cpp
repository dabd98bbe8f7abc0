#include "abcroots/verify.hpp"

#include "abcroots/errors.hpp"
#include "abcroots/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <future>
#include <sstream>

namespace abcroots {

namespace {

double to_double(const Int& x) { return mpz_get_d(x.get_mpz_t()); }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

Violation make_violation(Int k, unsigned s, int n, std::string what, double lhs, double rhs) {
    Violation v{std::move(k), s, n, std::move(what), lhs, rhs, 0};
    v.slack = rhs != 0 ? lhs / rhs : std::numeric_limits<double>::infinity();
    return v;
}

BvdpCheck check_bvdp(const ResultingEquation& eq, const Int& b_next) {
    const unsigned s = eq.root.s;
    Int rhs = s * pow_int(eq.p, s - 1);
    Int ad = abs(eq.d);
    Int lhs_upper = ad * eq.q * b_next;
    Int lhs_lower = ad * eq.q * (b_next + 2);

    BvdpCheck check;
    check.upper = {lhs_upper <= rhs, to_double(lhs_upper), to_double(rhs)};
    check.lower = {lhs_lower >= rhs, to_double(lhs_lower), to_double(rhs)};
    return check;
}

bool check_liouville_b(const RootSpec& root, const Convergent& conv, const Int& b_next) {
    return b_next <= root.s * root.k * conv.q;
}

namespace {

struct GainPartial {
    long checked = 0;
    long skipped = 0;
    std::vector<Violation> violations;
    std::vector<std::string> notes;
    double max_observed = 0;
    Int max_k;
    int max_n = -1;
};

GainPartial scan_gains_for_k(unsigned s, const Int& k, const GainScanOptions& options) {
    GainPartial part;
    RootSpec root(k, s);
    auto eqs = resulting_equations(root, options.depth, options.expand);
    for (const auto& eq : eqs) {
        if (eq.p <= eq.q) { ++part.skipped; continue; } // theorem hypothesis
        ++part.checked;
        Int numerator_arg = sgn(eq.d) > 0 ? eq.kq_power() : eq.p_power();
        Int denominator_arg = abs(eq.d) * eq.q * k * eq.p;
        double gain = approximation_gain(eq);
        // gain >= s/2  <=>  2 ln N >= s ln D  <=>  N^2 >= D^s
        if (numerator_arg * numerator_arg >= pow_int(denominator_arg, s)) {
            part.violations.push_back(make_violation(
                k, s, eq.n, "approximation-gain >= " + std::to_string(s) + "/2", gain, s / 2.0));
        }
        if (gain > part.max_observed) {
            part.max_observed = gain;
            part.max_k = k;
            part.max_n = eq.n;
        }
        if (options.check_quality) {
            try {
                MetricsRecord rec = equation_metrics(eq, {}, options.budget);
                if (*rec.approximation_gain > rec.quality + options.quality_tolerance)
                    part.violations.push_back(make_violation(k, s, eq.n, "approximation-gain > quality",
                                                             *rec.approximation_gain, rec.quality));
            } catch (const FactorizationBudgetExceeded&) {
                ++part.skipped;
                part.notes.push_back("k=" + k.get_str() + " n=" + std::to_string(eq.n) +
                                     ": factorization budget exceeded, quality not checked");
            }
        }
    }
    return part;
}

} // namespace

VerificationReport scan_gains(unsigned s, const Int& k_min, const Int& k_max,
                              const GainScanOptions& options) {
    auto start = Clock::now();
    VerificationReport report;
    report.suite = "approximation-gain-bound";
    {
        std::ostringstream cfg;
        cfg << "s=" << s << " k=[" << k_min << "," << k_max << "] depth=" << options.depth
            << " quality=" << (options.check_quality ? 1 : 0);
        report.config = cfg.str();
    }

    std::vector<Int> ks;
    for (Int k = k_min; k <= k_max; ++k)
        if (!is_perfect_power(k, s)) ks.push_back(k);

    std::vector<GainPartial> parts(ks.size());
    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < ks.size(); ++i) parts[i] = scan_gains_for_k(s, ks[i], options);
    } else {
        std::vector<std::future<void>> workers;
        std::atomic<size_t> next{0};
        for (int w = 0; w < jobs; ++w)
            workers.push_back(std::async(std::launch::async, [&] {
                for (size_t i = next.fetch_add(1); i < ks.size(); i = next.fetch_add(1))
                    parts[i] = scan_gains_for_k(s, ks[i], options);
            }));
        for (auto& worker : workers) worker.get();
    }

    // k-ordered merge keeps reports byte-identical however many workers ran
    for (const auto& part : parts) {
        report.instances_checked += part.checked;
        report.skipped += part.skipped;
        report.violations.insert(report.violations.end(), part.violations.begin(), part.violations.end());
        report.notes.insert(report.notes.end(), part.notes.begin(), part.notes.end());
        if (part.max_observed > report.max_observed) {
            report.max_observed = part.max_observed;
            report.max_k = part.max_k;
            report.max_n = part.max_n;
        }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

VerificationReport check_roth_form(const RootSpec& root, const Rat& eps_roth, double c_inverse,
                                   int depth) {
    if (depth < 2) throw std::invalid_argument("check_roth_form: depth must be >= 2");
    if (c_inverse <= 0) throw std::invalid_argument("check_roth_form: 1/C must be > 0");
    auto start = Clock::now();
    VerificationReport report;
    report.suite = "roth-coefficient-form";
    {
        std::ostringstream cfg;
        cfg << "k=" << root.k << " s=" << root.s << " eps_roth=" << rat_to_string(eps_roth)
            << " c_inverse=" << c_inverse << " depth=" << depth;
        report.config = cfg.str();
    }

    auto cf = expand(root, depth);
    auto convs = convergents(cf);
    Rat c_exact = rat_from_double(c_inverse); // doubles are exact rationals
    Int u(eps_roth.get_num()), v(eps_roth.get_den());
    if (!v.fits_uint_p() || !u.fits_uint_p())
        throw std::invalid_argument("check_roth_form: eps_roth too wild to power exactly");

    // b_{n+1} <= C q^(u/v)  <=>  b^v c_den^v <= c_num^v q^u
    Int c_num(c_exact.get_num()), c_den(c_exact.get_den());
    Int c_num_pow = pow_int(c_num, v.get_ui());
    Int c_den_pow = pow_int(c_den, v.get_ui());
    for (int n = 0; n + 1 < int(cf.coefficients.size()); ++n) {
        const Int& b = cf.coefficients[size_t(n) + 1];
        const Int& q = convs[size_t(n)].q;
        ++report.instances_checked;
        Int lhs = pow_int(b, v.get_ui()) * c_den_pow;
        Int rhs = c_num_pow * pow_int(q, u.get_ui());
        if (lhs > rhs) {
            double rhs_float = c_inverse * std::exp(mpq_get_d(eps_roth.get_mpq_t()) * log_big(q));
            report.violations.push_back(make_violation(root.k, root.s, n,
                                                       "b_{n+1} > (1/C) q_n^eps", to_double(b),
                                                       rhs_float));
        }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

VerificationReport bvdp_suite(const Int& k_min, const Int& k_max, int depth, unsigned s) {
    auto start = Clock::now();
    VerificationReport report;
    report.suite = "bombieri-van-der-poorten";
    {
        std::ostringstream cfg;
        cfg << "s=" << s << " k=[" << k_min << "," << k_max << "] depth=" << depth;
        report.config = cfg.str();
    }
    const bool observational = s != 3; // the inequality is only claimed for cubics

    for (Int k = k_min; k <= k_max; ++k) {
        if (is_perfect_power(k, s)) continue;
        RootSpec root(k, s);
        auto cf = expand(root, depth + 1);
        auto convs = convergents(cf);
        for (int n = 0; n < depth && n + 1 < int(cf.coefficients.size()); ++n) {
            auto eq = resulting_equation(root, convs[size_t(n)]);
            auto check = check_bvdp(eq, cf.coefficients[size_t(n) + 1]);
            ++report.instances_checked;
            auto note_or_violation = [&](const char* what, const InequalityCheck& ineq) {
                if (observational) {
                    report.notes.push_back("k=" + k.get_str() + " n=" + std::to_string(n) + ": " + what);
                } else {
                    report.violations.push_back(make_violation(k, s, n, what, ineq.lhs, ineq.rhs));
                }
            };
            if (!check.upper.holds) note_or_violation("bvdp-upper |d| q b <= s p^(s-1)", check.upper);
            if (!check.lower.holds) note_or_violation("bvdp-lower |d| q (b+2) >= s p^(s-1)", check.lower);
        }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

VerificationReport liouville_suite(const Int& k_min, const Int& k_max, int depth, unsigned s) {
    auto start = Clock::now();
    VerificationReport report;
    report.suite = "liouville-coefficient-bound";
    {
        std::ostringstream cfg;
        cfg << "s=" << s << " k=[" << k_min << "," << k_max << "] depth=" << depth;
        report.config = cfg.str();
    }
    const bool observational = s != 3;

    for (Int k = k_min; k <= k_max; ++k) {
        if (is_perfect_power(k, s)) continue;
        RootSpec root(k, s);
        auto cf = expand(root, depth + 1);
        auto convs = convergents(cf);
        for (int n = 0; n < depth && n + 1 < int(cf.coefficients.size()); ++n) {
            const Int& b_next = cf.coefficients[size_t(n) + 1];
            ++report.instances_checked;
            if (!check_liouville_b(root, convs[size_t(n)], b_next)) {
                if (observational) {
                    report.notes.push_back("k=" + k.get_str() + " n=" + std::to_string(n) +
                                           ": b_{n+1}=" + b_next.get_str() + " exceeds s k q_n=" +
                                           Int(s * k * convs[size_t(n)].q).get_str());
                } else {
                    report.violations.push_back(make_violation(k, s, n, "b_{n+1} > s k q_n",
                                                               to_double(b_next),
                                                               to_double(Int(s * k * convs[size_t(n)].q))));
                }
            }
        }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

} // namespace abcroots
