#pragma once

#include "abcroots/integers.hpp"

#include <utility>
#include <vector>

namespace abcroots {

// The algebraic number k^(1/s) under study.  Construction rejects perfect
// s-th powers, so every instance is irrational.
struct RootSpec {
    Int k;
    unsigned s;

    RootSpec(Int k_, unsigned s_);
};

// One convergent p_n/q_n.  gcd(p, q) = 1 by the recurrence.
struct Convergent {
    int n = 0;
    Int p, q;
};

struct CFExpansion {
    RootSpec root;
    std::vector<Int> coefficients; // b_0 .. b_{terms-1}
    unsigned precision_bits = 0;   // enclosure width that certified the run
};

struct ExpandOptions {
    unsigned bits_per_term = 64;
    int max_precision_doublings = 8;
};

// Dyadic enclosure lo < k^(1/s) < hi with hi - lo = 2^-bits.  Both bounds
// are strict because the root is irrational.
std::pair<Rat, Rat> root_enclosure(const RootSpec& root, unsigned bits);

// First `terms` partial quotients of the regular continued fraction.  Every
// coefficient is certified: it is emitted only when both ends of the exact
// rational enclosure give the same floor.  On a certification miss the
// precision doubles and the run restarts; PrecisionExhausted after
// max_precision_doublings.
CFExpansion expand(const RootSpec& root, int terms, const ExpandOptions& options = {});

// p_n = b_n p_{n-1} + p_{n-2}, q_n likewise, seeded with (1,0) and (0,1).
std::vector<Convergent> convergents(const CFExpansion& cf);

} // namespace abcroots
