#include "abcroots/cf.hpp"

#include "abcroots/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace abcroots;

namespace {

std::vector<Int> coeffs(long k, unsigned s, int terms) {
    return expand(RootSpec(k, s), terms).coefficients;
}

} // namespace

TEST_CASE("expansion reproduces the known openings") {
    CHECK(coeffs(2, 3, 4) == std::vector<Int>{1, 3, 1, 5});
    CHECK(coeffs(2, 2, 5) == std::vector<Int>{1, 2, 2, 2, 2});
    CHECK(coeffs(109, 5, 5) == std::vector<Int>{2, 1, 1, 4, 77733});
}

TEST_CASE("perfect powers and degenerate parameters are rejected") {
    CHECK_THROWS_AS(RootSpec(4, 2), InvalidRootSpec);
    CHECK_THROWS_AS(RootSpec(8, 3), InvalidRootSpec);
    CHECK_THROWS_AS(RootSpec(1, 2), InvalidRootSpec);
    CHECK_THROWS_AS(RootSpec(0, 3), InvalidRootSpec);
    CHECK_THROWS_AS(RootSpec(2, 1), InvalidRootSpec);
    CHECK_NOTHROW(RootSpec(4, 3));
}

TEST_CASE("expansion agrees with the integer surd oracle for square roots") {
    for (long k : {2L, 3L, 5L, 7L, 61L}) {
        auto mine = coeffs(k, 2, 50);
        auto ref = oracles::surd_sqrt_cf(k, 50);
        CHECK(mine == ref);
    }
}

TEST_CASE("expansion is deterministic and prefix-stable") {
    auto a = coeffs(5, 3, 12);
    auto b = coeffs(5, 3, 12);
    CHECK(a == b);
    auto longer = coeffs(5, 3, 25);
    CHECK(std::equal(a.begin(), a.end(), longer.begin()));
}

TEST_CASE("partial quotients past b_0 are positive") {
    for (long k : {2L, 3L, 17L, 100L}) {
        auto cf = coeffs(k, 3, 30);
        for (size_t i = 1; i < cf.size(); ++i) CHECK(cf[i] >= 1);
    }
}

TEST_CASE("precision exhaustion is reported rather than looping") {
    ExpandOptions options;
    options.bits_per_term = 2;
    options.max_precision_doublings = 0;
    CHECK_THROWS_AS(expand(RootSpec(2, 3), 10, options), PrecisionExhausted);
}

TEST_CASE("convergents follow the recurrence and the known values") {
    auto convs = convergents(expand(RootSpec(2, 3), 4));
    REQUIRE(convs.size() == 4);
    CHECK(convs[0].p == 1);
    CHECK(convs[0].q == 1);
    CHECK(convs[1].p == 4);
    CHECK(convs[1].q == 3);
    CHECK(convs[2].p == 5);
    CHECK(convs[2].q == 4);
    CHECK(convs[3].p == 29);
    CHECK(convs[3].q == 23);

    auto fifth_root = convergents(expand(RootSpec(109, 5), 4));
    CHECK(fifth_root[3].p == 23);
    CHECK(fifth_root[3].q == 9);

    auto seed_only = convergents(expand(RootSpec(5, 2), 1));
    REQUIRE(seed_only.size() == 1);
    CHECK(seed_only[0].p == 2); // floor(sqrt 5)
    CHECK(seed_only[0].q == 1);
}

TEST_CASE("convergents are coprime and satisfy the determinant identity") {
    for (long k : {2L, 29L, 109L}) {
        unsigned s = k == 109 ? 5 : 3;
        auto convs = convergents(expand(RootSpec(k, s), 25));
        for (const auto& c : convs) CHECK(gcd(c.p, c.q) == 1);
        for (size_t n = 1; n < convs.size(); ++n) {
            Int det = convs[n].p * convs[n - 1].q - convs[n - 1].p * convs[n].q;
            CHECK(det == (n % 2 == 1 ? 1 : -1)); // (-1)^(n-1)
        }
    }
}

TEST_CASE("p^s - k q^s alternates sign starting below the root") {
    for (long k : {2L, 3L, 44L}) {
        RootSpec root(k, 3);
        auto convs = convergents(expand(root, 20));
        for (const auto& c : convs) {
            Int d = pow_int(c.p, 3) - root.k * pow_int(c.q, 3);
            CHECK(sgn(d) == (c.n % 2 == 0 ? -1 : 1)); // (-1)^(n+1)
        }
    }
}

TEST_CASE("convergents approximate to within 1/(q_n q_{n+1})") {
    for (long k : {2L, 5L, 109L}) {
        unsigned s = k == 109 ? 5 : 3;
        RootSpec root(k, s);
        auto convs = convergents(expand(root, 21));
        auto [lo, hi] = root_enclosure(root, 4096);
        for (size_t n = 0; n + 1 < convs.size(); ++n) {
            Rat approx(convs[n].p, convs[n].q);
            approx.canonicalize();
            Rat err_lo = abs(lo - approx);
            Rat err_hi = abs(hi - approx);
            Rat worst = err_lo > err_hi ? err_lo : err_hi;
            Rat limit(1, convs[n].q * convs[n + 1].q);
            limit.canonicalize();
            CHECK(worst < limit); // exact rational comparison
        }
    }
}

TEST_CASE("root enclosure straddles the root with the advertised width") {
    RootSpec root(7, 3);
    auto [lo, hi] = root_enclosure(root, 128);
    CHECK(hi - lo == Rat(1, Int(1) << 128));
    // lo^3 < 7 < hi^3
    Rat lo3 = lo * lo * lo, hi3 = hi * hi * hi;
    CHECK(lo3 < 7);
    CHECK(hi3 > 7);
}
