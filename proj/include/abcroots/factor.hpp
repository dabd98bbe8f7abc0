#pragma once

#include "abcroots/integers.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace abcroots {

// Effort limits for factorize().  rho_iteration_limit counts Pollard-rho
// function evaluations across one whole factorize() call.
struct FactorBudget {
    unsigned long trial_division_limit = 1'000'000;
    unsigned long rho_iteration_limit = 20'000'000;
    int probable_prime_rounds = 64; // Miller-Rabin rounds past the deterministic range
};

struct FactoredInteger {
    Int value = 1;
    std::vector<std::pair<Int, unsigned>> factors; // (prime, exponent), primes ascending
    // false when some recorded prime was only probabilistically tested
    // (operands above 2^64 use Miller-Rabin with fixed rounds).
    bool primality_certified = true;

    Int radical() const;
    Int reconstruct() const; // product of prime^exponent
};

// Complete factorization of x >= 1.  Trial division through the configured
// limit, deterministic Miller-Rabin below 2^64, Brent-variant Pollard rho
// for what remains.  Throws FactorizationBudgetExceeded when rho runs out
// of budget.
FactoredInteger factorize(const Int& x, const FactorBudget& budget = {});

// Product of the distinct prime factors; radical(1) = 1.
Int radical(const Int& x, const FactorBudget& budget = {});

// Deterministic below 2^64; Miller-Rabin with `rounds_large` fixed
// pseudorandom bases above.
bool is_probable_prime(const Int& n, int rounds_large = 64);

// Exact product / power / quotient on factored form (quotient requires
// divisibility; checked).
FactoredInteger fi_mul(const FactoredInteger& a, const FactoredInteger& b);
FactoredInteger fi_pow(const FactoredInteger& a, unsigned e);
FactoredInteger fi_div_exact(const FactoredInteger& a, const FactoredInteger& b);

} // namespace abcroots
