#pragma once

#include "abcroots/equations.hpp"
#include "abcroots/factor.hpp"

#include <string>
#include <vector>

namespace abcroots {

// One exact inequality outcome; lhs/rhs are float renditions for reports,
// the verdict itself comes from integer cross-multiplication.
struct InequalityCheck {
    bool holds = false;
    double lhs = 0;
    double rhs = 0;
    double slack() const { return lhs == 0 ? 0 : rhs / lhs; }
};

// |d| <= s p^(s-1) / (q b_next) and |d| >= s p^(s-1) / (q (b_next + 2)),
// both decided in integers.
struct BvdpCheck {
    InequalityCheck upper; // lhs = |d| q b_next, rhs = s p^(s-1)
    InequalityCheck lower; // lhs = |d| q (b_next+2), rhs = s p^(s-1)
    bool pass() const { return upper.holds && lower.holds; }
};

BvdpCheck check_bvdp(const ResultingEquation& eq, const Int& b_next);

// Exact comparison b_next <= s k q_n.
bool check_liouville_b(const RootSpec& root, const Convergent& conv, const Int& b_next);

struct Violation {
    Int k;
    unsigned s = 0;
    int n = 0;
    std::string what; // which inequality failed
    double lhs = 0;
    double rhs = 0;
    double slack = 0; // lhs / rhs, how far past the boundary
};

Violation make_violation(Int k, unsigned s, int n, std::string what, double lhs, double rhs);

struct VerificationReport {
    std::string suite;
    std::string config; // reproducibility key: all inputs that shaped the run
    long instances_checked = 0;
    long skipped = 0;
    std::vector<Violation> violations;
    std::vector<std::string> notes; // observations that do not fail the suite
    double max_observed = 0;
    Int max_k;
    int max_n = -1;
    double elapsed_seconds = 0; // excluded from report equality

    bool passed() const { return violations.empty(); }
};

struct GainScanOptions {
    int depth = 30;
    bool check_quality = false; // also test gain <= quality + tolerance
    double quality_tolerance = 1e-9;
    int jobs = 1;
    ExpandOptions expand{};
    FactorBudget budget{};
};

// Approximation gain of every resulting equation with p > q versus the s/2
// threshold; the verdict gain >= s/2 is the exact integer test N^2 >= D^s.
VerificationReport scan_gains(unsigned s, const Int& k_min, const Int& k_max,
                              const GainScanOptions& options = {});

// b_{n+1} <= c_inverse * q_n^eps_roth for every computed index, decided by
// exact powering of the dyadic value of c_inverse.
VerificationReport check_roth_form(const RootSpec& root, const Rat& eps_roth, double c_inverse,
                                   int depth);

// Both Bombieri-Van der Poorten inequalities over a k range.  Cubic roots
// fail the suite on any miss; other degrees are observational (notes only).
VerificationReport bvdp_suite(const Int& k_min, const Int& k_max, int depth, unsigned s = 3);

// Liouville coefficient bound b_{n+1} <= s k q_n over a k range; cubic
// strict, other degrees observational.
VerificationReport liouville_suite(const Int& k_min, const Int& k_max, int depth, unsigned s = 3);

} // namespace abcroots
