#pragma once

#include "abcroots/equations.hpp"
#include "abcroots/factor.hpp"

#include <map>
#include <optional>
#include <span>

namespace abcroots {

struct MetricsRecord {
    AbcTriple triple;
    Int rad_abc;
    bool rad_certified = true;
    double quality = 0;
    bool is_hit = false;
    std::map<Rat, double> k_epsilon;
    std::optional<double> approximation_gain; // only when sourced from an equation
    std::optional<double> power_gain;
};

// rad(abc).  The triple is pairwise coprime, so the parts factor separately.
Int rad_abc(const AbcTriple& t, const FactorBudget& budget = {});

// ln(c) / ln(rad(abc)); requires rad >= 2.
double quality(const AbcTriple& t, const FactorBudget& budget = {});

// rad(abc) < c, strict.
bool is_hit(const AbcTriple& t, const FactorBudget& budget = {});

// The constant making c = K * rad(abc)^(1+eps) an equality for this triple.
double k_epsilon(const AbcTriple& t, const Rat& eps, const FactorBudget& budget = {});

// ln(k q^s) / ln(d q k p) when d > 0, ln(p^s) / ln(|d| q k p) when d < 0.
double approximation_gain(const ResultingEquation& eq);

// ln(|d| q k p) / ln(rad(|d| q k p)).
double power_gain(const ResultingEquation& eq, const FactorBudget& budget = {});

// Full record for one equation.  Factors p, q, k, |d| and g individually and
// assembles rad(abc) from those, so the power-equation sides never have to
// be factored whole.
MetricsRecord equation_metrics(const ResultingEquation& eq, std::span<const Rat> eps_list = {},
                               const FactorBudget& budget = {});

namespace detail {
// Gain formula on raw parts; lets tests drive the undefined-argument branch
// that valid RootSpecs cannot reach.
double gain_from_parts(unsigned s, const Int& k, const Int& p, const Int& q, const Int& d);
} // namespace detail

} // namespace abcroots
