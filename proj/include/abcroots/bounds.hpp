#pragma once

#include "abcroots/equations.hpp"
#include "abcroots/factor.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace abcroots {

// eps_roth = 3 e / (1 + e)
Rat eps_roth_from_abc(const Rat& eps_abc);
// inverse map: eps_abc = e / (3 - e)
Rat eps_abc_from_roth(const Rat& eps_roth);

struct RothBoundParams {
    RootSpec root;   // cubic only
    Rat eps_abc;     // in [0, 1/2]
    double k_eps;
    Rat p1_over_q1;  // first convergent above the root
};

// K^(1/(1+eps)) * 3k * (p1/q1)^(3 eps/(1+eps)), the gcd factor taken as 1.
double inverse_c_bound(const RothBoundParams& params);

// How the K_eps column of a bound table is sourced from the equation corpus.
struct KSelectionPolicy {
    enum class Kind { MaxOverCorpus, FixedEquation };
    Kind kind = Kind::MaxOverCorpus;
    int corpus_depth = 3;      // use equations from convergents 1..corpus_depth
    bool include_seed = false; // also admit the n = 0 equation
    int fixed_index = 2;       // for FixedEquation
};

struct RothTableRow {
    Rat eps_roth;
    Rat eps_abc;
    double k_eps = 0;
    double bound = 0;
    int k_source_index = -1;        // convergent whose equation supplied K_eps
    std::string known_bound;        // classical reference value, when one exists
    std::optional<double> published; // previously reported bound for this row
    std::vector<std::string> flags; // "paper-discrepancy" when published != computed
};

std::vector<RothTableRow> roth_table(const RootSpec& root, std::span<const Rat> eps_roth_list,
                                     const KSelectionPolicy& policy = {},
                                     std::optional<Rat> p1_override = {},
                                     const FactorBudget& budget = {});

struct RidoutQuery {
    RootSpec root;
    std::vector<Int> primes; // the set S; q must be an S-integer
    Rat eps;
    double K = 1.0;
    int depth = 40; // convergents examined for solutions
};

// Bound for p from p^(2/(1+eps)) <= K rad(q)^(1+eps) k^(1+eps), with rad(q)
// at its maximum, the product of S.
double ridout_sqrt_bound(const RidoutQuery& query);

// Convergents of sqrt(k) with |p^2 - k q^2| = 1, q > 1 an S-integer, and
// p within ridout_sqrt_bound.
std::vector<Convergent> ridout_sqrt_solutions(const RidoutQuery& query);

// Cubic analogue: (K rad(q)^(1+eps) k^(2+2eps) (p1/q1)^(1+eps))^(2(1+eps)/3).
double ridout_cbrt_bound(const RidoutQuery& query, const Rat& p1_over_q1);

struct ExplicitAbcParams {
    double L_eps = 1.0;
    Rat eps; // exponent is 3 + eps
};

// ln(k^2 p^3) / ln((p^3 / L)^(1/(3+eps))); needs p^3 > L.
double explicit_power_gain_bound(const Int& k, const Int& p_n, const ExplicitAbcParams& params);

struct KorobovCheck {
    double min_value = 0; // min of |cbrt(2) - p/q| q^2.5 over 2 <= q <= limit, q != 4
    long min_q = 0;
    double q4_value = 0;  // the excluded q = 4 value, whose inverse is the sharp constant
};

KorobovCheck korobov_check(long q_limit);

} // namespace abcroots
