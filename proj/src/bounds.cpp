#include "abcroots/bounds.hpp"

#include "abcroots/errors.hpp"
#include "abcroots/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace abcroots {

Rat eps_roth_from_abc(const Rat& eps_abc) {
    if (sgn(eps_abc) < 0) throw std::invalid_argument("eps_abc must be >= 0");
    Rat r = 3 * eps_abc / (1 + eps_abc);
    r.canonicalize();
    return r;
}

Rat eps_abc_from_roth(const Rat& eps_roth) {
    if (sgn(eps_roth) < 0 || eps_roth >= 3)
        throw std::invalid_argument("eps_roth must lie in [0, 3)");
    Rat r = eps_roth / (3 - eps_roth);
    r.canonicalize();
    return r;
}

double inverse_c_bound(const RothBoundParams& params) {
    if (params.root.s != 3) throw std::invalid_argument("inverse_c_bound: cubic roots only");
    if (sgn(params.eps_abc) < 0 || params.eps_abc > Rat(1, 2))
        throw std::invalid_argument("inverse_c_bound: eps_abc must lie in [0, 1/2]");
    if (params.k_eps < 0) throw std::invalid_argument("inverse_c_bound: K must be >= 0");
    // p1/q1 must sit above the root
    Rat p1 = params.p1_over_q1;
    if (pow_int(Int(p1.get_num()), 3) <= params.root.k * pow_int(Int(p1.get_den()), 3))
        throw std::invalid_argument("inverse_c_bound: p1/q1 must exceed k^(1/3)");

    double eps = mpq_get_d(params.eps_abc.get_mpq_t());
    double k_term = 3.0 * mpz_get_d(params.root.k.get_mpz_t());
    double k_pow = params.k_eps > 0 ? std::exp(std::log(params.k_eps) / (1.0 + eps)) : 0.0;
    double ratio_pow = std::exp(log_rat(p1) * (3.0 * eps / (1.0 + eps)));
    return k_pow * k_term * ratio_pow;
}

namespace {

// Reference rows reported for cbrt(2); used to annotate tables and to flag
// rows whose published bound disagrees with the formula.
struct ReferenceRow {
    Rat eps_roth;
    double published_bound;
    const char* known_bound;
};

const std::vector<ReferenceRow>& cbrt2_reference_rows() {
    static const std::vector<ReferenceRow> rows = {
        {Rat(0), 60.686, "probably unbounded"},
        {Rat(2, 5), 15.03, "not known"},
        {Rat(1, 2), 13.16, "3.125 (Korobov, exact)"},
        {Rat(1), 6.78, "6 (Liouville; lowering to 1.575 reported)"},
    };
    return rows;
}

} // namespace

std::vector<RothTableRow> roth_table(const RootSpec& root, std::span<const Rat> eps_roth_list,
                                     const KSelectionPolicy& policy, std::optional<Rat> p1_override,
                                     const FactorBudget& budget) {
    if (root.s != 3) throw std::invalid_argument("roth_table: cubic roots only");
    if (policy.corpus_depth < 1) throw std::invalid_argument("roth_table: corpus depth must be >= 1");
    int depth = std::max(policy.corpus_depth,
                         policy.kind == KSelectionPolicy::Kind::FixedEquation ? policy.fixed_index : 1);
    auto eqs = resulting_equations(root, depth + 1);

    Rat p1 = p1_override ? *p1_override : Rat(eqs[1].p, eqs[1].q);
    p1.canonicalize();

    std::vector<RothTableRow> out;
    for (const Rat& eps_roth : eps_roth_list) {
        RothTableRow row;
        row.eps_roth = eps_roth;
        row.eps_abc = eps_abc_from_roth(eps_roth);

        if (policy.kind == KSelectionPolicy::Kind::FixedEquation) {
            row.k_eps = k_epsilon(normalize_to_abc(eqs.at(size_t(policy.fixed_index))), row.eps_abc, budget);
            row.k_source_index = policy.fixed_index;
        } else {
            for (int n = policy.include_seed ? 0 : 1; n <= policy.corpus_depth; ++n) {
                double v = k_epsilon(normalize_to_abc(eqs.at(size_t(n))), row.eps_abc, budget);
                if (v > row.k_eps) { row.k_eps = v; row.k_source_index = n; }
            }
        }

        row.bound = inverse_c_bound({root, row.eps_abc, row.k_eps, p1});

        if (root.k == 2) {
            for (const auto& ref : cbrt2_reference_rows()) {
                if (ref.eps_roth == eps_roth) {
                    row.known_bound = ref.known_bound;
                    row.published = ref.published_bound;
                    if (std::fabs(ref.published_bound - row.bound) > 0.02 * ref.published_bound)
                        row.flags.push_back("paper-discrepancy");
                }
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

Int product_of_primes(const std::vector<Int>& primes) {
    Int prod = 1;
    for (const Int& p : primes) {
        if (p < 2) throw std::invalid_argument("S must contain primes >= 2");
        prod *= p;
    }
    return prod;
}

bool is_smooth_over(Int q, const std::vector<Int>& primes) {
    for (const Int& p : primes)
        while (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) q /= p;
    return q == 1;
}

} // namespace

double ridout_sqrt_bound(const RidoutQuery& query) {
    if (query.root.s != 2) throw std::invalid_argument("ridout_sqrt_bound: square roots only");
    if (query.primes.empty()) throw std::invalid_argument("ridout: S must be non-empty");
    Int rad_s = product_of_primes(query.primes);
    double eps = mpq_get_d(query.eps.get_mpq_t());

    // full exponent on rad(S)*k is (1+eps)^2/2; when that is an integer and
    // K = 1 the bound is an exact integer power
    Rat full_exp = (1 + query.eps) * (1 + query.eps) / 2;
    full_exp.canonicalize();
    if (query.K == 1.0 && full_exp.get_den() == 1 && full_exp.get_num().fits_uint_p()) {
        Int exact = pow_int(rad_s * query.root.k, full_exp.get_num().get_ui());
        return mpz_get_d(exact.get_mpz_t());
    }
    if (query.K == 0.0) return 0.0;
    double log_bound =
        (1.0 + eps) / 2.0 * (std::log(query.K) + (1.0 + eps) * log_big(rad_s * query.root.k));
    return std::exp(log_bound);
}

std::vector<Convergent> ridout_sqrt_solutions(const RidoutQuery& query) {
    if (query.root.s != 2) throw std::invalid_argument("ridout_sqrt_solutions: square roots only");
    if (query.depth < 1) throw std::invalid_argument("ridout: depth must be >= 1");
    double bound = ridout_sqrt_bound(query);
    auto convs = convergents(expand(query.root, query.depth));
    std::vector<Convergent> out;
    for (const auto& conv : convs) {
        if (conv.q <= 1) continue; // integer convergent, not an approximant
        Int d = conv.p * conv.p - query.root.k * conv.q * conv.q;
        if (abs(d) != 1) continue;
        if (!is_smooth_over(conv.q, query.primes)) continue;
        if (mpz_cmp_d(conv.p.get_mpz_t(), bound) > 0) continue;
        out.push_back(conv);
    }
    return out;
}

double ridout_cbrt_bound(const RidoutQuery& query, const Rat& p1_over_q1) {
    if (query.root.s != 3) throw std::invalid_argument("ridout_cbrt_bound: cubic roots only");
    if (query.primes.empty()) throw std::invalid_argument("ridout: S must be non-empty");
    if (query.K == 0.0) return 0.0;
    Int rad_s = product_of_primes(query.primes);
    double eps = mpq_get_d(query.eps.get_mpq_t());
    double inner = std::log(query.K) + (1.0 + eps) * log_big(rad_s) +
                   (2.0 + 2.0 * eps) * log_big(query.root.k) + (1.0 + eps) * log_rat(p1_over_q1);
    return std::exp(2.0 * (1.0 + eps) / 3.0 * inner);
}

double explicit_power_gain_bound(const Int& k, const Int& p_n, const ExplicitAbcParams& params) {
    if (params.L_eps <= 0) throw std::invalid_argument("L must be > 0");
    if (sgn(params.eps) < 0) throw std::invalid_argument("eps must be >= 0");
    Int p_cubed = pow_int(p_n, 3);
    if (mpz_cmp_d(p_cubed.get_mpz_t(), params.L_eps) <= 0)
        throw BoundUndefined("p^3 <= L: index not large enough");
    double eps = mpq_get_d(params.eps.get_mpq_t());
    double numerator = log_big(k * k * p_cubed);
    double denominator = (log_big(p_cubed) - std::log(params.L_eps)) / (3.0 + eps);
    return numerator / denominator;
}

KorobovCheck korobov_check(long q_limit) {
    if (q_limit < 2) throw std::invalid_argument("korobov_check: limit must be >= 2");
    RootSpec root(2, 3);
    auto [lo, hi] = root_enclosure(root, 320);
    KorobovCheck result;
    result.min_value = std::numeric_limits<double>::infinity();
    for (long q = 2; q <= q_limit; ++q) {
        Rat scaled_lo = lo * q;
        // nearest integer to q * cbrt(2); the enclosure is far too tight for
        // the rounding to be ambiguous at this scale
        Int p = floor_rat(scaled_lo + Rat(1, 2));
        Rat diff = abs(scaled_lo - Rat(p)) / q;
        double value = mpq_get_d(diff.get_mpq_t()) * std::pow(double(q), 2.5);
        if (q == 4) {
            result.q4_value = value;
            continue;
        }
        if (value < result.min_value) {
            result.min_value = value;
            result.min_q = q;
        }
    }
    return result;
}

} // namespace abcroots
