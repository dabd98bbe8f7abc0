#include "abcroots/factor.hpp"

#include "abcroots/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace abcroots {

namespace {

constexpr uint32_t kSievePrimeLimit = 1'000'000;
constexpr uint32_t kDirectTrialLimit = 10'000; // below this, plain division; above, batched gcd

const std::vector<uint32_t>& sieve_primes() {
    static const std::vector<uint32_t> primes = [] {
        std::vector<bool> composite(kSievePrimeLimit + 1, false);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i <= kSievePrimeLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j <= kSievePrimeLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// Primes in [kDirectTrialLimit, 1e6) grouped into blocks together with the
// block product; one gcd against the product tells whether the block holds
// any factor, which beats dividing by every prime one at a time.
struct PrimeBlock {
    size_t first, last; // index range into sieve_primes()
    Int product;
};

Int range_product(const std::vector<uint32_t>& primes, size_t lo, size_t hi) {
    if (hi - lo <= 16) {
        Int r = 1;
        for (size_t i = lo; i < hi; ++i) r *= primes[i];
        return r;
    }
    size_t mid = lo + (hi - lo) / 2;
    return range_product(primes, lo, mid) * range_product(primes, mid, hi);
}

const std::vector<PrimeBlock>& prime_blocks() {
    static const std::vector<PrimeBlock> blocks = [] {
        const auto& primes = sieve_primes();
        std::vector<PrimeBlock> out;
        size_t start = 0;
        while (start < primes.size() && primes[start] < kDirectTrialLimit) ++start;
        const size_t block_len = 8192;
        for (size_t i = start; i < primes.size(); i += block_len) {
            PrimeBlock b;
            b.first = i;
            b.last = std::min(i + block_len, primes.size());
            b.product = range_product(primes, b.first, b.last);
            out.push_back(std::move(b));
        }
        return out;
    }();
    return blocks;
}

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t((unsigned __int128)a * b % m);
}

uint64_t powmod64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod64(r, base, m);
        base = mulmod64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic for all n < 2^64 with this base set.
bool miller_rabin64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

bool miller_rabin_mpz(const Int& n, int rounds) {
    Int d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    d >>= r;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x5eedba5eu); // fixed: results must be reproducible run to run
    for (int round = 0; round < rounds; ++round) {
        Int a = rng.get_z_range(n - 3) + 2;
        Int x;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned long i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

uint64_t gcd64(uint64_t a, uint64_t b) {
    while (b) { uint64_t t = a % b; a = b; b = t; }
    return a;
}

// Brent's cycle variant with batched gcd.  Returns a nontrivial factor, or 0
// once the shared budget is exhausted.
uint64_t rho_brent64(uint64_t n, unsigned long& budget) {
    if ((n & 1) == 0) return 2;
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1, ys = y;
        uint64_t q = 1;
        const unsigned batch = 128;
        for (uint64_t limit = 1; d == 1; limit <<= 1) {
            x = y;
            for (uint64_t i = 0; i < limit && d == 1; i += batch) {
                ys = y;
                uint64_t steps = std::min<uint64_t>(batch, limit - i);
                if (budget < steps) return 0;
                budget -= steps;
                for (uint64_t j = 0; j < steps; ++j) {
                    y = mulmod64(y, y, n) + c;
                    if (y >= n) y -= n;
                    q = mulmod64(q, x > y ? x - y : y - x, n);
                }
                d = gcd64(q, n);
            }
        }
        if (d != n) return d;
        // batch overshot the factor: replay one step at a time
        d = 1;
        while (d == 1) {
            if (budget == 0) return 0;
            --budget;
            ys = mulmod64(ys, ys, n) + c;
            if (ys >= n) ys -= n;
            d = gcd64(x > ys ? x - ys : ys - x, n);
        }
        if (d != n) return d;
    }
}

Int rho_brent_mpz(const Int& n, unsigned long& budget) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, ys = y, q = 1;
        const unsigned batch = 128;
        for (uint64_t limit = 1; d == 1; limit <<= 1) {
            x = y;
            for (uint64_t i = 0; i < limit && d == 1; i += batch) {
                ys = y;
                uint64_t steps = std::min<uint64_t>(batch, limit - i);
                if (budget < steps) return 0;
                budget -= steps;
                for (uint64_t j = 0; j < steps; ++j) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
            }
        }
        if (d != n && d != 0) return d;
        d = 1;
        while (d == 1) {
            if (budget == 0) return 0;
            --budget;
            ys = (ys * ys + c) % n;
            d = gcd(Int(abs(x - ys)), n);
        }
        if (d != n) return d;
    }
}

void add_factor(std::map<Int, unsigned>& acc, const Int& p, unsigned mult) {
    acc[p] += mult;
}

// Forward declaration: split handles composites that survived trial division.
void split_hard(const Int& m, unsigned mult, std::map<Int, unsigned>& acc,
                const FactorBudget& budget, unsigned long& rho_budget, bool& certified);

void record_prime(const Int& p, unsigned mult, std::map<Int, unsigned>& acc, bool& certified) {
    add_factor(acc, p, mult);
    if (!p.fits_ulong_p()) certified = false; // only probabilistically tested
}

void split_hard(const Int& m, unsigned mult, std::map<Int, unsigned>& acc,
                const FactorBudget& budget, unsigned long& rho_budget, bool& certified) {
    if (m == 1) return;
    if (m.fits_ulong_p() ? miller_rabin64(m.get_ui())
                         : miller_rabin_mpz(m, budget.probable_prime_rounds)) {
        record_prime(m, mult, acc, certified);
        return;
    }
    // perfect-power reduction: cubes and squares are common here because
    // callers feed sides of power equations
    size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    for (unsigned e : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (bits < e) break;
        Int r = integer_nth_root(m, e);
        if (r > 1 && pow_int(r, e) == m) {
            split_hard(r, mult * e, acc, budget, rho_budget, certified);
            return;
        }
    }
    Int f;
    if (mpz_sizeinbase(m.get_mpz_t(), 2) <= 63) { // keeps y + c clear of uint64 wrap
        uint64_t g = rho_brent64(m.get_ui(), rho_budget);
        if (g == 0) throw FactorizationBudgetExceeded("rho budget exhausted at " + m.get_str());
        f = Int(static_cast<unsigned long>(g));
    } else {
        f = rho_brent_mpz(m, rho_budget);
        if (f == 0) throw FactorizationBudgetExceeded("rho budget exhausted at " + m.get_str());
    }
    split_hard(f, mult, acc, budget, rho_budget, certified);
    split_hard(Int(m / f), mult, acc, budget, rho_budget, certified);
}

} // namespace

FactoredInteger factorize(const Int& x, const FactorBudget& budget) {
    if (x < 1) throw std::invalid_argument("factorize: x must be >= 1");
    FactoredInteger out;
    out.value = x;
    if (x == 1) return out;

    std::map<Int, unsigned> acc;
    Int m = x;

    // small primes one by one
    for (uint32_t p : sieve_primes()) {
        if (p >= kDirectTrialLimit || p > budget.trial_division_limit) break;
        if (uint64_t(p) * p > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
            add_factor(acc, p, e);
        }
    }

    // medium primes via block gcds
    if (m > 1 && budget.trial_division_limit >= kDirectTrialLimit) {
        for (const auto& block : prime_blocks()) {
            if (m == 1) break;
            Int g = gcd(m, block.product);
            if (g == 1) continue;
            const auto& primes = sieve_primes();
            for (size_t i = block.first; i < block.last && g > 1; ++i) {
                uint32_t p = primes[i];
                if (p > budget.trial_division_limit) break;
                if (mpz_divisible_ui_p(g.get_mpz_t(), p)) {
                    mpz_divexact_ui(g.get_mpz_t(), g.get_mpz_t(), p);
                    unsigned e = 0;
                    do {
                        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                        ++e;
                    } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
                    add_factor(acc, p, e);
                }
            }
        }
    }

    if (m > 1) {
        // anything left has no prime factor below the trial limit
        Int limit_sq = Int(budget.trial_division_limit) * Int(budget.trial_division_limit);
        if (m <= limit_sq) {
            record_prime(m, 1, acc, out.primality_certified);
        } else {
            unsigned long rho_budget = budget.rho_iteration_limit;
            split_hard(m, 1, acc, budget, rho_budget, out.primality_certified);
        }
    }

    out.factors.assign(acc.begin(), acc.end());
    return out;
}

Int FactoredInteger::radical() const {
    Int r = 1;
    for (const auto& [p, e] : factors) r *= p;
    return r;
}

Int FactoredInteger::reconstruct() const {
    Int r = 1;
    for (const auto& [p, e] : factors) r *= pow_int(p, e);
    return r;
}

Int radical(const Int& x, const FactorBudget& budget) {
    return factorize(x, budget).radical();
}

bool is_probable_prime(const Int& n, int rounds_large) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return miller_rabin64(n.get_ui());
    return miller_rabin_mpz(n, rounds_large);
}

FactoredInteger fi_mul(const FactoredInteger& a, const FactoredInteger& b) {
    std::map<Int, unsigned> acc;
    for (const auto& [p, e] : a.factors) acc[p] += e;
    for (const auto& [p, e] : b.factors) acc[p] += e;
    FactoredInteger out;
    out.value = a.value * b.value;
    out.primality_certified = a.primality_certified && b.primality_certified;
    out.factors.assign(acc.begin(), acc.end());
    return out;
}

FactoredInteger fi_pow(const FactoredInteger& a, unsigned e) {
    FactoredInteger out;
    out.value = pow_int(a.value, e);
    out.primality_certified = a.primality_certified;
    out.factors = a.factors;
    for (auto& [p, exp] : out.factors) exp *= e;
    if (e == 0) {
        out.factors.clear();
        out.value = 1;
    }
    return out;
}

FactoredInteger fi_div_exact(const FactoredInteger& a, const FactoredInteger& b) {
    std::map<Int, unsigned> acc(a.factors.begin(), a.factors.end());
    for (const auto& [p, e] : b.factors) {
        auto it = acc.find(p);
        if (it == acc.end() || it->second < e)
            throw std::invalid_argument("fi_div_exact: not divisible");
        it->second -= e;
        if (it->second == 0) acc.erase(it);
    }
    FactoredInteger out;
    if (!mpz_divisible_p(a.value.get_mpz_t(), b.value.get_mpz_t()))
        throw std::invalid_argument("fi_div_exact: not divisible");
    out.value = a.value / b.value;
    out.primality_certified = a.primality_certified && b.primality_certified;
    out.factors.assign(acc.begin(), acc.end());
    return out;
}

} // namespace abcroots
