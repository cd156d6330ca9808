#include "parkhull/series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace parkhull;

namespace {

RationalSeries random_series(std::mt19937& rng, std::size_t order, int constant_term) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    return RationalSeries::generate(order, [&](std::size_t i) {
        if (i == 0) return BigRational(constant_term);
        return BigRational(num(rng), den(rng));
    });
}

} // namespace

TEST_CASE("exp of the zero series is 1") {
    const RationalSeries zero(6);
    const RationalSeries one = zero.exponential();
    REQUIRE(one[0] == 1);
    for (std::size_t i = 1; i <= 6; ++i) REQUIRE(one[i] == 0);
}

TEST_CASE("derivative of sum x^n/n! shifts the series") {
    const auto e = RationalSeries::generate(8, [](std::size_t i) {
        return BigRational(1, factorial(static_cast<unsigned>(i)));
    });
    const auto d = e.differentiated();
    REQUIRE(d == e.truncated(7));
}

TEST_CASE("tree series satisfies g = x exp(g) to order 10") {
    // g(x) = sum_{n>=1} n^{n-1} x^n / n!
    const auto g = RationalSeries::generate(10, [](std::size_t i) {
        if (i == 0) return BigRational(0);
        return BigRational(boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(i - 1)),
                           factorial(static_cast<unsigned>(i)));
    });
    const auto x_exp_g = g.exponential().shifted_up().truncated(10);
    REQUIRE(g == x_exp_g);
}

TEST_CASE("exp and log round-trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto h = random_series(rng, 8, 0);
        REQUIRE(h.exponential().logarithm() == h);
        const auto u = random_series(rng, 8, 1);
        REQUIRE(u.logarithm().exponential() == u);
    }
}

TEST_CASE("differentiate after integrate is the identity") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_series(rng, 7, trial % 3);
        REQUIRE(s.integrated().differentiated() == s);
    }
}

TEST_CASE("ring identities on random series") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, 6, 2);
        const auto b = random_series(rng, 6, -1);
        REQUIRE((a + b) - b == a);
        REQUIRE(a * b == b * a);
        REQUIRE(a.scaled(BigRational(3, 2)).scaled(BigRational(2, 3)) == a);
    }
}

TEST_CASE("series contract violations") {
    const RationalSeries a(4);
    const RationalSeries b(5);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a.truncated(9), std::invalid_argument);

    const auto with_constant = RationalSeries::generate(4, [](std::size_t i) {
        return BigRational(i == 0 ? 1 : 0);
    });
    CHECK_THROWS_AS(with_constant.exponential(), std::invalid_argument);
    CHECK_THROWS_AS(RationalSeries(4).logarithm(), std::invalid_argument);
}
