#include "abcroots/equations.hpp"

#include "abcroots/errors.hpp"

namespace abcroots {

Int ResultingEquation::p_power() const {
    return pow_int(p, root.s);
}

Int ResultingEquation::kq_power() const {
    return root.k * pow_int(q, root.s);
}

ResultingEquation resulting_equation(const RootSpec& root, const Convergent& conv) {
    ResultingEquation eq{root, conv.n, conv.p, conv.q, 0, 1};
    Int ps = eq.p_power();
    Int kqs = eq.kq_power();
    eq.d = ps - kqs;
    if (eq.d == 0)
        throw DegenerateEquation("p^s = k q^s at n=" + std::to_string(conv.n)); // impossible, k is no perfect power
    eq.g = gcd(eq.min_side(), Int(abs(eq.d)));
    return eq;
}

AbcTriple normalize_to_abc(const ResultingEquation& eq) {
    Int a = eq.min_side() / eq.g;
    Int b = abs(eq.d) / eq.g;
    Int c = eq.max_side() / eq.g;
    if (a > b) swap(a, b);
    if (a + b != c || gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1)
        throw NotCoprime("normalization failed for n=" + std::to_string(eq.n) + " of " +
                         eq.root.k.get_str() + "^(1/" + std::to_string(eq.root.s) + ")");
    return AbcTriple{a, b, c};
}

std::vector<ResultingEquation> resulting_equations(const RootSpec& root, int depth,
                                                   const ExpandOptions& options) {
    auto convs = convergents(expand(root, depth, options));
    std::vector<ResultingEquation> out;
    out.reserve(convs.size());
    for (const auto& conv : convs) out.push_back(resulting_equation(root, conv));
    return out;
}

} // namespace abcroots
