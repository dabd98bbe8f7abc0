#pragma once

#include "abcroots/cf.hpp"
#include "abcroots/integers.hpp"

#include <vector>

namespace abcroots {

// The integer identity p^s = k q^s + d generated by a convergent, together
// with the gcd its ABC normalization divides out.  d keeps its sign; the
// positive arrangement is max_side() = min_side() + |d|.
struct ResultingEquation {
    RootSpec root;
    int n = 0;
    Int p, q;
    Int d; // p^s - k q^s, nonzero
    Int g; // gcd of the two smaller addends of the positive arrangement

    Int p_power() const;   // p^s
    Int kq_power() const;  // k q^s
    Int max_side() const { return sgn(d) > 0 ? p_power() : kq_power(); }
    Int min_side() const { return sgn(d) > 0 ? kq_power() : p_power(); }
};

// Coprime positive integers with a + b = c and a <= b < c (a = b only for
// the trivial 1 + 1 = 2).
struct AbcTriple {
    Int a, b, c;
};

ResultingEquation resulting_equation(const RootSpec& root, const Convergent& conv);

AbcTriple normalize_to_abc(const ResultingEquation& eq);

// Equations for convergents 0..depth-1 of one root.
std::vector<ResultingEquation> resulting_equations(const RootSpec& root, int depth,
                                                   const ExpandOptions& options = {});

} // namespace abcroots
