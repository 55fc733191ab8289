#include "doctest.h"
#include <stdexcept>

#include "wb/hyperbola.hpp"

using namespace wb;

TEST_CASE("count_points examples") {
    // c=5, lambda=1, box [0,4]^2: (1,1),(2,3),(3,2),(4,4)
    CHECK(count_points(Modulus(5), 1, Box{0, 5, 0, 5}) == 4);
    // c=7, lambda=0, box [0,6]^2: x=0 row + y=0 column - (0,0)
    CHECK(count_points(Modulus(7), 0, Box{0, 7, 0, 7}) == 13);
    // empty interval
    CHECK(count_points(Modulus(11), 3, Box{0, 0, 0, 5}) == 0);
}

TEST_CASE("count_points small brute-force spot check") {
    for (u64 c : {2ull, 6ull, 12ull, 30ull}) {
        Modulus cm(c);
        for (u64 lambda = 0; lambda < c; ++lambda) {
            Box b{-i64(c), 2 * i64(c), 3, i64(c) + 2};
            u64 brute = 0;
            for (i64 x = b.x_start; x < b.x_start + b.x_len; ++x)
                for (i64 y = b.y_start; y < b.y_start + b.y_len; ++y) {
                    i64 xm = ((x % i64(c)) + i64(c)) % i64(c);
                    i64 ym = ((y % i64(c)) + i64(c)) % i64(c);
                    if (u64(xm) * u64(ym) % c == lambda) ++brute;
                }
            CHECK(count_points(cm, lambda, b) == brute);
        }
    }
}

TEST_CASE("cg_bound example c=5") {
    Modulus c(5);
    Box b{0, 5, 0, 5};
    CgBound cg = cg_bound(c, 1, b, 0.4, 0.4);
    // (XY/c) T_{1,1}(0.4, 0.4): t=1 objective = 1 + 2*0.4 = 1.8; t=2: 2+2*0.2=2.4
    CHECK(cg.t.t_star == 1);
    CHECK(cg.t_term == doctest::Approx(5.0 * 1.8));
    CHECK(cg.gcd_term == doctest::Approx(1.0));
    u64 cnt = count_points(c, 1, b);
    CHECK(double(cnt) <= 3.0 * (cg.t_term + cg.gcd_term));
}

TEST_CASE("cg_bound lambda=0 full box: gcd term dominates") {
    for (u64 p : {7ull, 11ull, 13ull}) {
        Modulus c(p);
        Box b{0, i64(p), 0, i64(p)};
        u64 cnt = count_points(c, 0, b);
        CHECK(cnt == 2 * p - 1);
        CgBound cg = cg_bound(c, 0, b);
        CHECK(cg.gcd_term == doctest::Approx(double(p)));
        CHECK(double(cnt) <= 3.0 * (cg.t_term + cg.gcd_term));
    }
}

TEST_CASE("cg_bound degenerate and domain errors") {
    Modulus c(10);
    CgBound cg = cg_bound(c, 1, Box{0, 0, 0, 5});
    CHECK(cg.t_term == 0.0);
    CHECK(count_points(c, 1, Box{0, 0, 0, 5}) == 0);
    CHECK_THROWS_AS(cg_bound(c, 1, Box{0, 41, 0, 5}), std::domain_error);
}
