#include "abcroots/integers.hpp"

#include <cmath>
#include <stdexcept>

namespace abcroots {

Int pow_int(const Int& base, unsigned exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

namespace {

// An integer guaranteed to be >= x^(1/s): never underestimates, so the
// Newton iteration below always starts above the true root.
Int root_start_estimate(const Int& x, unsigned s) {
    signed long e;
    double m = mpz_get_d_2exp(&e, x.get_mpz_t()); // x = m * 2^e, m in [0.5, 1)
    double t = (std::log2(m) + double(e)) / double(s);
    long ip = long(std::floor(t));
    if (std::isfinite(t) && ip >= 52) {
        double mant = std::exp2(t - double(ip)); // in [1, 2)
        Int r(std::ldexp(mant, 52) * (1.0 + 1e-9) + 4.0);
        r <<= unsigned(ip - 52);
        if (pow_int(r, s) >= x) return r;
    } else if (std::isfinite(t) && ip < 52) {
        Int r(std::exp2(t) * (1.0 + 1e-9) + 4.0);
        if (pow_int(r, s) >= x) return r;
    }
    // fallback: 2^ceil(bits/s) >= x^(1/s) always
    size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
    Int r = 0;
    mpz_setbit(r.get_mpz_t(), (bits + s - 1) / s);
    return r;
}

} // namespace

Int integer_nth_root(const Int& x, unsigned s) {
    if (s < 1) throw std::invalid_argument("integer_nth_root: s must be >= 1");
    if (sgn(x) < 0) throw std::invalid_argument("integer_nth_root: x must be >= 0");
    if (s == 1 || x <= 1) return x;

    Int r = root_start_estimate(x, s);
    for (;;) {
        Int next = ((s - 1) * r + x / pow_int(r, s - 1)) / s;
        if (next >= r) break;
        r = next;
    }
    // bracketing check: the loop can stop one off
    while (pow_int(r, s) > x) --r;
    while (pow_int(r + 1, s) <= x) ++r;
    return r;
}

bool is_perfect_power(const Int& x, unsigned s) {
    if (sgn(x) < 0) return false;
    Int r = integer_nth_root(x, s);
    return pow_int(r, s) == x;
}

double log_big(const Int& x) {
    if (x < 1) throw std::invalid_argument("log_big: x must be >= 1");
    if (x == 1) return 0.0;
    signed long e;
    double m = mpz_get_d_2exp(&e, x.get_mpz_t());
    return std::log(m) + double(e) * M_LN2;
}

double log_rat(const Rat& x) {
    if (sgn(x) <= 0) throw std::invalid_argument("log_rat: x must be > 0");
    return log_big(Int(x.get_num())) - log_big(Int(x.get_den()));
}

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Rat rat_from_double(double x) {
    Rat r;
    mpq_set_d(r.get_mpq_t(), x);
    return r;
}

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Rat r;
        if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
            throw std::invalid_argument("parse_rat: bad rational '" + text + "'");
        r.canonicalize();
        if (sgn(Rat(r.get_den())) == 0) throw std::invalid_argument("parse_rat: zero denominator");
        return r;
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac_len = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("parse_rat: bad decimal '" + text + "'");
        Int num(digits, 10);
        Rat r(num, pow_int(10, unsigned(frac_len)));
        r.canonicalize();
        return r;
    }
    return Rat(Int(text, 10));
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

} // namespace abcroots
