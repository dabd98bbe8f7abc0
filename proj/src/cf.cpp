#include "abcroots/cf.hpp"

#include "abcroots/errors.hpp"

#include <stdexcept>

namespace abcroots {

RootSpec::RootSpec(Int k_, unsigned s_) : k(std::move(k_)), s(s_) {
    if (k < 2) throw InvalidRootSpec("k must be >= 2, got " + k.get_str());
    if (s < 2) throw InvalidRootSpec("s must be >= 2, got " + std::to_string(s));
    if (is_perfect_power(k, s))
        throw InvalidRootSpec(k.get_str() + " is a perfect " + std::to_string(s) + "-th power");
}

std::pair<Rat, Rat> root_enclosure(const RootSpec& root, unsigned bits) {
    // r = floor(k^(1/s) * 2^bits): k * 2^(s*bits) can never be a perfect
    // s-th power, so both bounds are strict.
    Int scaled = root.k << (size_t(root.s) * bits);
    Int r = integer_nth_root(scaled, root.s);
    Int den = Int(1) << bits;
    Rat lo(r, den), hi(r + 1, den);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

CFExpansion expand(const RootSpec& root, int terms, const ExpandOptions& options) {
    if (terms < 1) throw std::invalid_argument("expand: terms must be >= 1");

    unsigned bits = options.bits_per_term * unsigned(terms);
    for (int attempt = 0; attempt <= options.max_precision_doublings; ++attempt) {
        auto [lo, hi] = root_enclosure(root, bits);
        std::vector<Int> coeffs;
        coeffs.reserve(size_t(terms));
        bool certified = true;
        for (int i = 0; i < terms; ++i) {
            Int fl = floor_rat(lo), fh = floor_rat(hi);
            if (fl != fh) { certified = false; break; }
            coeffs.push_back(fl);
            if (i + 1 == terms) break;
            Rat frac_lo = lo - Rat(fl);
            Rat frac_hi = hi - Rat(fl);
            if (sgn(frac_lo) <= 0) { certified = false; break; } // endpoint hit the floor exactly
            // inversion swaps the ends
            lo = 1 / frac_hi;
            hi = 1 / frac_lo;
        }
        if (certified) return CFExpansion{root, std::move(coeffs), bits};
        bits *= 2;
    }
    throw PrecisionExhausted("no certified expansion of " + root.k.get_str() + "^(1/" +
                             std::to_string(root.s) + ") to " + std::to_string(terms) +
                             " terms within the precision limit");
}

std::vector<Convergent> convergents(const CFExpansion& cf) {
    if (cf.coefficients.empty()) throw std::invalid_argument("convergents: empty expansion");
    std::vector<Convergent> out;
    out.reserve(cf.coefficients.size());
    Int p_prev = 1, p_prev2 = 0; // p_{-1}, p_{-2}
    Int q_prev = 0, q_prev2 = 1; // q_{-1}, q_{-2}
    int n = 0;
    for (const Int& b : cf.coefficients) {
        Int p = b * p_prev + p_prev2;
        Int q = b * q_prev + q_prev2;
        if (gcd(p, q) != 1)
            throw Error("convergent recurrence produced a non-reduced fraction"); // unreachable
        out.push_back(Convergent{n++, p, q});
        p_prev2 = p_prev; p_prev = p;
        q_prev2 = q_prev; q_prev = q;
    }
    return out;
}

} // namespace abcroots
