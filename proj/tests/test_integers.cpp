#include "abcroots/integers.hpp"

#include "abcroots/errors.hpp"
#include "abcroots/factor.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace abcroots;

namespace {

Int random_bits(std::mt19937_64& rng, unsigned max_bits) {
    std::uniform_int_distribution<unsigned> bits_dist(1, max_bits);
    unsigned bits = bits_dist(rng);
    Int x = 0;
    for (unsigned produced = 0; produced < bits; produced += 32) {
        x <<= 32;
        x += uint32_t(rng());
    }
    Int mask = (Int(1) << bits) - 1;
    x &= mask;
    return x;
}

} // namespace

TEST_CASE("integer_nth_root on exact and near powers") {
    CHECK(integer_nth_root(8, 3) == 2);
    CHECK(integer_nth_root(63, 3) == 3);
    CHECK(integer_nth_root(64, 3) == 4);
    CHECK(integer_nth_root(0, 5) == 0);
    CHECK(integer_nth_root(1, 7) == 1);
    CHECK(integer_nth_root(Int("123456789123456789"), 1) == Int("123456789123456789"));

    Int big = Int(2) * pow_int(10, 30);
    Int r = integer_nth_root(big, 3);
    CHECK(pow_int(r, 3) <= big);
    CHECK(pow_int(r + 1, 3) > big);
}

TEST_CASE("integer_nth_root bracketing property on random inputs") {
    std::mt19937_64 rng(20240801);
    for (int i = 0; i < 400; ++i) {
        Int x = random_bits(rng, 512);
        unsigned s = 1 + unsigned(rng() % 8);
        Int r = integer_nth_root(x, s);
        CHECK(pow_int(r, s) <= x);
        CHECK(pow_int(r + 1, s) > x);
    }
}

TEST_CASE("factorize matches the stated examples") {
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(1).value == 1);

    auto f = factorize(296100);
    std::vector<std::pair<Int, unsigned>> expected = {{2, 2}, {3, 2}, {5, 2}, {7, 1}, {47, 1}};
    CHECK(f.factors == expected);

    auto g = factorize(6436343); // 23^5
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].first == 23);
    CHECK(g.factors[0].second == 5);
    CHECK(g.primality_certified);
}

TEST_CASE("factorize agrees with trial division on random inputs") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 60; ++i) {
        Int x = Int(1) + random_bits(rng, 40);
        auto mine = factorize(x);
        auto ref = oracles::trial_division(x);
        CHECK(mine.factors == ref);
        CHECK(mine.reconstruct() == x);
    }
}

TEST_CASE("factorize reconstructs its input") {
    std::mt19937_64 rng(123);
    for (int i = 0; i < 30; ++i) {
        Int x = Int(1) + random_bits(rng, 72);
        auto f = factorize(x);
        CHECK(f.reconstruct() == x);
        for (size_t j = 1; j < f.factors.size(); ++j)
            CHECK(f.factors[j - 1].first < f.factors[j].first); // ascending, distinct
        for (const auto& [p, e] : f.factors) CHECK(is_probable_prime(p));
    }
}

TEST_CASE("rho splits semiprimes past the trial range") {
    Int n = Int("1000000007") * Int("1000000009");
    auto f = factorize(n);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<Int, unsigned>{Int("1000000007"), 1});
    CHECK(f.factors[1] == std::pair<Int, unsigned>{Int("1000000009"), 1});
    CHECK(f.primality_certified);
}

TEST_CASE("perfect powers of large primes factor without a full rho search") {
    Int p("2147483647"); // 2^31 - 1
    auto f = factorize(pow_int(p, 3));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == p);
    CHECK(f.factors[0].second == 3);
}

TEST_CASE("factorization budget exhaustion throws instead of spinning") {
    // product of two ~2^61..2^63 primes: rho cannot split this within a
    // 2000-step budget
    Int hard = Int("2305843009213693951") * Int("9223372036854775783");
    FactorBudget budget;
    budget.rho_iteration_limit = 2000;
    CHECK_THROWS_AS(factorize(hard, budget), FactorizationBudgetExceeded);
}

TEST_CASE("primes above 2^64 are only probable and get flagged") {
    Int m89 = pow_int(2, 89) - 1; // Mersenne prime
    auto f = factorize(m89);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == m89);
    CHECK_FALSE(f.primality_certified);
    CHECK(is_probable_prime(m89));
    CHECK_FALSE(is_probable_prime(pow_int(2, 89) + 1));
}

TEST_CASE("radical matches the stated examples") {
    CHECK(radical(1) == 1);
    CHECK(radical(48000) == 30); // 128 * 125 * 3
    CHECK(Int(128 * 125 * 3) == 48000);
    CHECK(radical(296100) == 9870);
    CHECK(radical(296100) == oracles::radical_by_trial_division(296100));
}

TEST_CASE("radical divides its argument and is squarefree") {
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 40; ++i) {
        Int x = Int(1) + random_bits(rng, 48);
        Int r = radical(x);
        CHECK(x % r == 0);
        for (const auto& [p, e] : factorize(r).factors) CHECK(e == 1);
    }
    // prime powers collapse to the prime
    for (Int p : {Int(2), Int(3), Int(97), Int(10007)})
        for (unsigned e : {1u, 2u, 5u})
            CHECK(radical(pow_int(p, e)) == p);
}

TEST_CASE("log_big matches high precision references") {
    CHECK(log_big(1) == 0.0);
    CHECK(log_big(6436343) == doctest::Approx(15.6774716).epsilon(1e-7));
    CHECK(log_big(6436343) == doctest::Approx(oracles::log_mpfr(6436343)).epsilon(1e-13));
    CHECK(log_big(pow_int(2, 200)) == doctest::Approx(200.0 * M_LN2).epsilon(1e-13));

    std::mt19937_64 rng(99);
    for (int i = 0; i < 60; ++i) {
        Int x = Int(2) + random_bits(rng, 2048);
        CHECK(log_big(x) == doctest::Approx(oracles::log_mpfr(x)).epsilon(1e-13));
    }
}

TEST_CASE("log_big is additive over products") {
    std::mt19937_64 rng(1007);
    for (int i = 0; i < 60; ++i) {
        Int x = Int(2) + random_bits(rng, 256);
        Int y = Int(2) + random_bits(rng, 256);
        double sum = log_big(x) + log_big(y);
        CHECK(log_big(x * y) == doctest::Approx(sum).epsilon(1e-10));
    }
}

TEST_CASE("factored-form arithmetic stays consistent with its value") {
    auto f12 = factorize(12);
    auto f30 = factorize(30);
    auto product = fi_mul(f12, f30);
    CHECK(product.value == 360);
    CHECK(product.reconstruct() == 360);
    CHECK(product.radical() == 30);

    auto squared = fi_pow(f12, 2);
    CHECK(squared.value == 144);
    CHECK(squared.factors == std::vector<std::pair<Int, unsigned>>{{2, 4}, {3, 2}});
    CHECK(fi_pow(f12, 0).value == 1);

    auto quotient = fi_div_exact(product, f30);
    CHECK(quotient.value == 12);
    CHECK(quotient.factors == f12.factors);
    CHECK_THROWS_AS(fi_div_exact(f12, f30), std::invalid_argument);
}

TEST_CASE("rational parsing accepts fractions, decimals and integers") {
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("0.25") == Rat(1, 4));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(parse_rat("0.4") == Rat(2, 5));
    CHECK(rat_to_string(parse_rat("6/4")) == "3/2");
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x/y"), std::invalid_argument);
}
