#include <cmath>
#include <sstream>

#include "doctest.h"
#include "wb/gpfscan.hpp"

using namespace wb;

TEST_CASE("scan examples") {
    ScanSummary s = scan(1, 10);
    REQUIRE(s.records.size() == 10);
    CHECK(s.records[0].n == 1);
    CHECK(!s.records[0].exponent_defined);  // log 1 = 0, excluded
    CHECK(s.records[1].gpf == 5);
    CHECK(s.records[1].exponent == doctest::Approx(std::log(5.0) / std::log(2.0)));
    CHECK(s.records[6].value == 50);
    CHECK(s.records[6].gpf == 5);
    CHECK(s.records[6].exponent == doctest::Approx(std::log(5.0) / std::log(7.0)));
    CHECK(s.counted == 9);
    CHECK_THROWS_AS(scan(1, 20000000), std::domain_error);
}

TEST_CASE("scan fractions are monotone in the cutoff") {
    ScanSummary s = scan(2, 2000);
    CHECK(s.frac[0] >= s.frac[1]);
    CHECK(s.frac[1] >= s.frac[2]);
    CHECK(s.frac[2] >= s.frac[3]);
    CHECK(s.frac[0] <= 1.0);
}

TEST_CASE("scan gpf divides n^2+1 and odd prime factors are 1 mod 4") {
    ScanSummary s = scan(1, 500);
    for (const auto& r : s.records) {
        CHECK(r.value % r.gpf == 0);
        Factorization f = factorize(r.value);
        for (auto [p, k] : f.factors) CHECK((p == 2 || p % 4 == 1));
    }
}

TEST_CASE("chebyshev identity exact at x=10") {
    ChebyshevResult r = chebyshev_identity(10);
    CHECK(r.lhs == doctest::Approx(r.rhs).epsilon(1e-12));
    double want = 0;
    for (u64 n = 11; n <= 20; ++n) want += std::log(double(n * n + 1));
    CHECK(r.rhs == doctest::Approx(want));
}

TEST_CASE("chebyshev second-order integral tracks the sum") {
    ChebyshevResult r = chebyshev_identity(2000);
    CHECK(std::abs(r.rhs - r.integral) / 2000.0 <= 0.1);
}

TEST_CASE("count_Aq examples") {
    SmoothWindow w = SmoothWindow::bump(2.5, 1.5);
    AqCount a1 = count_Aq(Modulus(1), 10000.0, w);
    CHECK(std::abs(a1.a_q - a1.main_term) <= 3.0);  // 1 + total variation of the window
    AqCount a5 = count_Aq(Modulus(5), 10000.0, w);
    CHECK(std::abs(a5.a_q - a5.main_term) <= 5.0);
    AqCount a3 = count_Aq(Modulus(3), 10000.0, w);
    CHECK(a3.a_q == 0.0);
    CHECK(a3.main_term == 0.0);
}

TEST_CASE("scan csv shape") {
    ScanSummary s = scan(1, 5);
    std::ostringstream os;
    scan_to_csv(s, os);
    std::string str = os.str();
    CHECK(str.rfind("n,value,gpf,exponent\n", 0) == 0);
    CHECK(std::count(str.begin(), str.end(), '\n') == 6);
    std::ostringstream js;
    scan_summary_json(s, js);
    CHECK(js.str().find("frac_exponent_gt") != std::string::npos);
}
