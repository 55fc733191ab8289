#include <cmath>

#include "doctest.h"
#include "wb/arith.hpp"

using namespace wb;

TEST_CASE("kloosterman sum examples") {
    CHECK(kloosterman_sum(1, 1, Modulus(2)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kloosterman_sum(0, 1, Modulus(5)) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(kloosterman_sum(1, 1, Modulus(3)) == doctest::Approx(-1.0).epsilon(1e-12));
    // c = 1 convention: single element, S = 1
    CHECK(kloosterman_sum(0, 1, Modulus(1)) == doctest::Approx(1.0));
    // Ramanujan c_4(6) = -2
    CHECK(kloosterman_sum(0, 6, Modulus(4)) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("modulus rejects zero") {
    CHECK_THROWS_AS(Modulus(0), std::domain_error);
}

TEST_CASE("sqrt(-1) mod q examples") {
    CHECK(sqrt_minus_one_mod(Modulus(5)) == std::vector<u64>{2, 3});
    CHECK(sqrt_minus_one_mod(Modulus(1)) == std::vector<u64>{0});
    CHECK(sqrt_minus_one_mod(Modulus(25)) == std::vector<u64>{7, 18});
    CHECK(sqrt_minus_one_mod(Modulus(3)).empty());
    CHECK(sqrt_minus_one_mod(Modulus(4)).empty());
    CHECK(sqrt_minus_one_mod(Modulus(2)) == std::vector<u64>{1});
}

TEST_CASE("rho examples and multiplicativity spot checks") {
    CHECK(rho(Modulus(10)) == 2);
    CHECK(rho(Modulus(3)) == 0);
    CHECK(rho(Modulus(65)) == 4);
    CHECK(rho(Modulus(5)) * rho(Modulus(13)) == rho(Modulus(65)));
    CHECK(rho(Modulus(1)) == 1);
    // rho equals the root count
    for (u64 q : {1ull, 2ull, 5ull, 13ull, 25ull, 65ull, 100ull, 169ull}) {
        CHECK(rho(Modulus(q)) == sqrt_minus_one_mod(Modulus(q)).size());
    }
}

TEST_CASE("weil bound margin examples") {
    auto w1 = weil_bound_margin(1, 1, Modulus(3));
    CHECK(w1.abs_s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w1.bound == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-12));
    auto w2 = weil_bound_margin(0, 6, Modulus(4));
    CHECK(w2.bound == doctest::Approx(2.0));
    CHECK(w2.abs_s <= w2.bound + 1e-12);
    auto w3 = weil_bound_margin(0, 1, Modulus(1));
    CHECK(w3.abs_s == doctest::Approx(1.0));
    CHECK(w3.bound == doctest::Approx(1.0));
}

TEST_CASE("factorize examples") {
    Factorization f = factorize(50);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<u64, int>{2, 1});
    CHECK(f.factors[1] == std::pair<u64, int>{5, 2});
    CHECK(f.gpf == 5);
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(1).gpf == 1);
    CHECK(factorize(5).gpf == 5);
    // reconstruction over a range
    for (u64 n = 1; n <= 3000; ++n) {
        Factorization g = factorize(n);
        u64 prod = 1;
        u64 prev = 0;
        for (auto [p, k] : g.factors) {
            CHECK(p > prev);
            CHECK(is_prime(p));
            prev = p;
            for (int i = 0; i < k; ++i) prod *= p;
        }
        CHECK(prod == n);
    }
    // a 64-bit semiprime
    Factorization big = factorize(1000003ull * 999983ull);
    REQUIRE(big.factors.size() == 2);
    CHECK(big.gpf == 1000003);
}

TEST_CASE("phi and tau from cached factorization") {
    CHECK(Modulus(12).phi() == 4);
    CHECK(Modulus(12).tau() == 6);
    CHECK(Modulus(1).phi() == 1);
    CHECK(Modulus(97).phi() == 96);
    CHECK(Modulus(97).tau() == 2);
}

TEST_CASE("tonelli-shanks on sample primes") {
    for (u64 p : {5ull, 13ull, 17ull, 29ull, 97ull, 10007ull + 6ull /*10013 = 17*19*31 no*/}) {
        if (!is_prime(p) || p % 4 != 1) continue;
        u64 r = tonelli_shanks(p - 1, p);
        CHECK(mulmod(r, r, p) == p - 1);
    }
}
