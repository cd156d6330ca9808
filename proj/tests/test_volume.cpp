#include "parkhull/lattice.hpp"
#include "parkhull/volume.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace parkhull;

TEST_CASE("volume recurrence table") {
    CHECK(volume(0) == 1);
    CHECK(volume(1) == 0);
    CHECK(volume(2) == BigRational(1, 2));
    CHECK(volume(3) == 4);
    CHECK(volume(4) == BigRational(159, 4));
    CHECK(volume(5) == 492);
    CHECK(volume(6) == BigRational(58835, 8));
    CHECK(volume(7) == 129237);
    CHECK(volume(8) == BigRational(41822865, 16));
}

TEST_CASE("volume denominators are powers of two up to n = 8") {
    for (std::size_t n = 0; n <= 8; ++n) {
        BigInt den = boost::multiprecision::denominator(volume(n));
        while (den % 2 == 0) den /= 2;
        REQUIRE(den == 1);
    }
}

TEST_CASE("egf identity") {
    SECTION("order 1 is just V0 = 1, V1 = 0") {
        const auto rep = egf_identity_check(1);
        REQUIRE(rep.equal);
        REQUIRE(rep.residual.order() == 1);
    }
    SECTION("order 8 and order 10 hold with zero residual") {
        for (std::size_t order : {std::size_t{8}, std::size_t{10}}) {
            const auto rep = egf_identity_check(order);
            REQUIRE(rep.equal);
            REQUIRE(rep.residual.is_zero());
        }
    }
    CHECK_THROWS_AS(egf_identity_check(0), std::domain_error);
}

TEST_CASE("ehrhart counts") {
    CHECK(ehrhart_count(3, 1) == 17);
    CHECK(ehrhart_count(2, 2) == 6);
    for (int n = 1; n <= 5; ++n) CHECK(ehrhart_count(n, 0) == 1);

    SECTION("triangle closed form for n = 2") {
        for (int m = 1; m <= 6; ++m)
            REQUIRE(ehrhart_count(2, m) == BigInt((m + 1) * (m + 2) / 2));
    }
    SECTION("the unit dilation agrees with the lattice module") {
        for (int n = 1; n <= 6; ++n)
            REQUIRE(ehrhart_count(n, 1) == lattice_count(n, CountMethod::bruteforce));
    }
    SECTION("nondecreasing in the dilation factor") {
        for (int n = 1; n <= 4; ++n) {
            BigInt prev{0};
            for (int m = 0; m <= n + 1; ++m) {
                const BigInt cur = ehrhart_count(n, m);
                REQUIRE(cur >= prev);
                prev = cur;
            }
        }
    }
    CHECK_THROWS_AS(ehrhart_count(0, 1), std::domain_error);
    CHECK_THROWS_AS(ehrhart_count(3, -1), std::domain_error);

    SECTION("budget is enforced") {
        ScanOptions tiny;
        tiny.point_budget = 100;
        try {
            ehrhart_count(3, 5, tiny);
            FAIL("expected ResourceBoundError");
        } catch (const ResourceBoundError& e) {
            CHECK(e.method() == "ehrhart_count");
        }
    }
}

TEST_CASE("interpolation oracle reproduces the volume") {
    CHECK(volume_oracle(1) == 0);
    CHECK(volume_oracle(2) == BigRational(1, 2));
    CHECK(volume_oracle(3) == 4);
    CHECK(volume_oracle(4) == BigRational(159, 4));
    for (int n = 1; n <= 4; ++n) REQUIRE(volume_oracle(n) == volume(static_cast<std::size_t>(n)));
    CHECK_THROWS_AS(volume_oracle(6), ResourceBoundError);
    CHECK_THROWS_AS(volume_oracle(0), ResourceBoundError);
}
