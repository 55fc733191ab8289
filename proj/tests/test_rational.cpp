#include <cmath>

#include "doctest.h"
#include <stdexcept>

#include "wb/rational.hpp"

using namespace wb;

TEST_CASE("t_value examples") {
    auto r0 = t_value(ApproxTarget(100, 100, 0.0, 0.0));
    CHECK(r0.t_star == 1);
    CHECK(r0.value == doctest::Approx(1.0));

    auto r1 = t_value(ApproxTarget(12, 12, 1.0 / 3.0, 1.0 / 3.0));
    CHECK(r1.t_star == 3);
    CHECK(r1.value == doctest::Approx(3.0).epsilon(1e-9));

    // tie at value 2 broken toward smaller t
    auto r2 = t_value(ApproxTarget(1, 1, 0.5, 0.5));
    CHECK(r2.t_star == 1);
    CHECK(r2.value == doctest::Approx(2.0));
}

TEST_CASE("t_value result satisfies its own invariants") {
    ApproxTarget tg(7.5, 3.25, 0.123456, 0.654321);
    auto r = t_value(tg);
    CHECK(r.value ==
          doctest::Approx(double(r.t_star) + tg.M * r.alpha_dist + tg.N * r.beta_dist));
    CHECK(r.value >= 1.0);
    for (long long t = 1; t <= 50; ++t) {
        double v = double(t) + tg.M * dist_mod1(tg.alpha * double(t)) +
                   tg.N * dist_mod1(tg.beta * double(t));
        CHECK(r.value <= v + 1e-12);
    }
}

TEST_CASE("inputs reduced mod 1, M N validated") {
    auto a = t_value(ApproxTarget(5, 5, 1.25, -0.75));
    auto b = t_value(ApproxTarget(5, 5, 0.25, 0.25));
    CHECK(a.value == doctest::Approx(b.value));
    CHECK_THROWS_AS(ApproxTarget(0, 1, 0, 0), std::domain_error);
}

TEST_CASE("dirichlet witness examples") {
    auto w0 = dirichlet_witness(0, 0, 10, 10);
    CHECK(w0.t == 1);

    // t = 7 or any smaller t meeting the C = 4 bounds is valid
    auto w1 = dirichlet_witness(1.0 / 7.0, 0, 7, 1);
    CHECK(w1.t <= 4 * 7);
    CHECK(w1.alpha_dist <= 4.0 / 7.0 + 1e-12);
    CHECK(w1.beta_dist == 0.0);

    double a = std::sqrt(2.0) - 1.0, b = std::sqrt(3.0) - 1.0;
    auto w2 = dirichlet_witness(a, b, 5, 5);
    CHECK(w2.t <= 100);
    CHECK(w2.alpha_dist <= 4.0 / 5.0);
    CHECK(w2.beta_dist <= 4.0 / 5.0);
}
