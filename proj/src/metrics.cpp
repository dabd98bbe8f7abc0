#include "abcroots/metrics.hpp"

#include "abcroots/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace abcroots {

Int rad_abc(const AbcTriple& t, const FactorBudget& budget) {
    // pairwise coprime, so no prime is counted twice
    return radical(t.a, budget) * radical(t.b, budget) * radical(t.c, budget);
}

double quality(const AbcTriple& t, const FactorBudget& budget) {
    Int rad = rad_abc(t, budget);
    if (rad < 2) throw std::invalid_argument("quality: rad(abc) must be >= 2");
    return log_big(t.c) / log_big(rad);
}

bool is_hit(const AbcTriple& t, const FactorBudget& budget) {
    return rad_abc(t, budget) < t.c;
}

double k_epsilon(const AbcTriple& t, const Rat& eps, const FactorBudget& budget) {
    if (sgn(eps) < 0) throw std::invalid_argument("k_epsilon: eps must be >= 0");
    Int rad = rad_abc(t, budget);
    return std::exp(log_big(t.c) - (1.0 + mpq_get_d(eps.get_mpq_t())) * log_big(rad));
}

namespace detail {

double gain_from_parts(unsigned s, const Int& k, const Int& p, const Int& q, const Int& d) {
    if (d == 0) throw DegenerateEquation("gain: d = 0");
    Int arg = abs(d) * q * k * p;
    if (arg < 2) throw GainUndefined("gain: log argument " + arg.get_str() + " is below 2");
    Int numerator_arg = sgn(d) > 0 ? Int(k * pow_int(q, s)) : pow_int(p, s);
    if (numerator_arg < 1) throw GainUndefined("gain: empty numerator");
    return log_big(numerator_arg) / log_big(arg);
}

} // namespace detail

double approximation_gain(const ResultingEquation& eq) {
    return detail::gain_from_parts(eq.root.s, eq.root.k, eq.p, eq.q, eq.d);
}

double power_gain(const ResultingEquation& eq, const FactorBudget& budget) {
    Int arg = abs(eq.d) * eq.q * eq.root.k * eq.p;
    if (arg < 2) throw GainUndefined("power gain: log argument below 2");
    FactoredInteger f = fi_mul(fi_mul(factorize(Int(abs(eq.d)), budget), factorize(eq.q, budget)),
                               fi_mul(factorize(eq.root.k, budget), factorize(eq.p, budget)));
    return log_big(arg) / log_big(f.radical());
}

MetricsRecord equation_metrics(const ResultingEquation& eq, std::span<const Rat> eps_list,
                               const FactorBudget& budget) {
    MetricsRecord rec;
    rec.triple = normalize_to_abc(eq);

    FactoredInteger fp = factorize(eq.p, budget);
    FactoredInteger fq = factorize(eq.q, budget);
    FactoredInteger fk = factorize(eq.root.k, budget);
    FactoredInteger fd = factorize(Int(abs(eq.d)), budget);
    FactoredInteger fg = factorize(eq.g, budget);

    // sides of the positive arrangement, factored without touching p^s or
    // k q^s as whole numbers
    FactoredInteger f_p_side = fi_pow(fp, eq.root.s);
    FactoredInteger f_kq_side = fi_mul(fk, fi_pow(fq, eq.root.s));
    const bool p_side_is_max = sgn(eq.d) > 0;
    FactoredInteger f_max = p_side_is_max ? f_p_side : f_kq_side;
    FactoredInteger f_min = p_side_is_max ? f_kq_side : f_p_side;

    FactoredInteger fa = fi_div_exact(f_min, fg);
    FactoredInteger fb = fi_div_exact(fd, fg);
    FactoredInteger fc = fi_div_exact(f_max, fg);

    rec.rad_abc = fa.radical() * fb.radical() * fc.radical();
    rec.rad_certified = fa.primality_certified && fb.primality_certified && fc.primality_certified;
    rec.quality = log_big(rec.triple.c) / log_big(rec.rad_abc);
    rec.is_hit = rec.rad_abc < rec.triple.c;
    for (const Rat& eps : eps_list)
        rec.k_epsilon[eps] =
            std::exp(log_big(rec.triple.c) - (1.0 + mpq_get_d(eps.get_mpq_t())) * log_big(rec.rad_abc));

    rec.approximation_gain = approximation_gain(eq);
    Int arg = abs(eq.d) * eq.q * eq.root.k * eq.p;
    rec.power_gain = log_big(arg) / log_big(fi_mul(fi_mul(fd, fq), fi_mul(fk, fp)).radical());
    return rec;
}

} // namespace abcroots
