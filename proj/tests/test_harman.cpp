#include <cmath>
#include <sstream>

#include "doctest.h"
#include "wb/harman.hpp"

using namespace wb;

namespace {
const double kTh = kThetaKimSarnak;
}

TEST_CASE("type1 ceiling examples") {
    CHECK(type1_ceiling(1.4, kTh) == doctest::Approx(44.4 / 93.0).epsilon(1e-12));
    CHECK(type1_ceiling(1.25, kTh) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(type1_ceiling(1.1, 0.0) == doctest::Approx(0.5));
    CHECK(type1_ceiling(1.0, 0.0) == doctest::Approx(0.5));
}

TEST_CASE("type2 window examples") {
    auto w = type2_window(1.0, kTh, Type2Variant::squarefree);
    CHECK(w.lower == doctest::Approx(0.0));
    CHECK(w.upper == doctest::Approx(25.0 / 82.0).epsilon(1e-12));
    CHECK(!w.empty());

    auto pr = type2_window(1.4, kTh, Type2Variant::primes);
    CHECK(pr.empty());  // lower 0.4 >= upper (4-4.2)/3 < 0

    auto pr1 = type2_window(1.0, kTh, Type2Variant::primes);
    CHECK(pr1.upper == doctest::Approx(1.0 / 3.0));
    // primes window beats squarefree only below 136/129
    double cross = alpha_sigma_branch_cross(kTh);
    CHECK(cross == doctest::Approx(136.0 / 129.0).epsilon(1e-12));
    CHECK(type2_window(cross - 0.01, kTh, Type2Variant::primes).upper >
          type2_window(cross - 0.01, kTh, Type2Variant::squarefree).upper);
    CHECK(type2_window(cross + 0.01, kTh, Type2Variant::primes).upper <
          type2_window(cross + 0.01, kTh, Type2Variant::squarefree).upper);
}

TEST_CASE("thresholds recover the paper's rationals") {
    auto th = thresholds(kTh);
    REQUIRE(th.size() == 5);
    CHECK(th[0].value == doctest::Approx(25.0 / 24.0).epsilon(1e-15));
    CHECK(th[1].value == doctest::Approx(228.0 / 203.0).epsilon(1e-15));
    CHECK(th[2].value == doctest::Approx(7.0 / 6.0).epsilon(1e-15));
    CHECK(th[3].value == doctest::Approx(139.0 / 114.0).epsilon(1e-15));
    CHECK(th[4].value == doctest::Approx(1.25));
    for (auto& t : th) CHECK(t.residual <= 1e-12);
}

TEST_CASE("params at the special point alpha = 5/4") {
    HarmanParams p = make_params(1.25, kTh);
    // both branches of the min coincide
    CHECK(p.d_exp == doctest::Approx(0.5).epsilon(1e-15));
    CHECK((64.0 - 14.0 * 1.25) / 93.0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.gamma_exp == doctest::Approx(p.sigma0));
    CHECK(p.xi == doctest::Approx(0.25));
}

TEST_CASE("G5 closed form") {
    SieveTable tab(1e-4, 12.0);
    HarmanConfig cfg;
    IntegralResult g5 = compute_G(5, tab, cfg);
    double closed = 2.0 * (std::pow(139.0 / 114.0, 2) - std::pow(7.0 / 6.0, 2));
    CHECK(g5.value == doctest::Approx(closed).epsilon(1e-15));
    CHECK(g5.value == doctest::Approx(272.0 / 1083.0).epsilon(1e-12));
    CHECK(g5.value < 0.25116);
}

TEST_CASE("deficit identity from the six paper bound values") {
    HarmanReport rep = harman_report_from_paper_bounds();
    CHECK(std::abs(rep.deficit - 0.59097) <= 1e-5);
    CHECK(rep.budget >= 0.257406 - 3e-6);
    CHECK(std::abs(rep.omega_bar - 1.30008) <= 5e-4);
}

TEST_CASE("solve_omega_bar edge cases") {
    CHECK(solve_omega_bar(0.0, kTh) == doctest::Approx(1.25));
    CHECK(solve_omega_bar(-0.1, kTh) == doctest::Approx(139.0 / 114.0).epsilon(1e-12));
    // strictly increasing in the budget
    CHECK(solve_omega_bar(0.2, kTh) < solve_omega_bar(0.3, kTh));
}

TEST_CASE("G4 Monte Carlo determinism given (seed, strata)") {
    SieveTable tab(1e-4, 24.0);
    HarmanConfig cfg;
    cfg.mc_samples = 200000;
    cfg.seed = 42;
    IntegralResult a = compute_G(4, tab, cfg);
    IntegralResult b = compute_G(4, tab, cfg);
    CHECK(a.value == b.value);  // bit-identical
    CHECK(a.abs_error == b.abs_error);
    CHECK(a.n_samples == b.n_samples);
    cfg.seed = 43;
    IntegralResult c = compute_G(4, tab, cfg);
    CHECK(a.value != c.value);
    CHECK(std::abs(a.value - c.value) <= a.abs_error + c.abs_error);
}

TEST_CASE("fig2 boundary rows") {
    std::ostringstream os;
    fig2_boundaries(kTh, 1.0, 1.0, 0.1, os);  // single row at alpha = 1
    std::string s = os.str();
    CHECK(s.rfind("alpha,type1_ceiling,type2_upper_sf,type2_upper_pr,alpha_minus_1\n", 0) == 0);
    double a, t1, sf, pr, am1;
    CHECK(std::sscanf(s.c_str() + s.find('\n') + 1, "%lf,%lf,%lf,%lf,%lf", &a, &t1, &sf, &pr,
                      &am1) == 5);
    CHECK(t1 == doctest::Approx(0.5));
    CHECK(sf == doctest::Approx(25.0 / 82.0).epsilon(1e-9));
    CHECK(pr == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(am1 == doctest::Approx(0.0));
}

TEST_CASE("fig2 conditional mode theta = 0") {
    std::ostringstream os;
    fig2_boundaries(0.0, 1.0, 1.0, 0.1, os);
    std::string s = os.str();
    double a, t1, sf, pr, am1;
    std::sscanf(s.c_str() + s.find('\n') + 1, "%lf,%lf,%lf,%lf,%lf", &a, &t1, &sf, &pr, &am1);
    CHECK(sf == doctest::Approx((2.0 - 1.0) / 3.0).epsilon(1e-9));
    CHECK(t1 == doctest::Approx(0.5));
}

TEST_CASE("report json is stable and carries the seed") {
    SieveTable tab(1e-4, 24.0);
    HarmanConfig cfg;
    cfg.mc_samples = 100000;
    cfg.seed = 7;
    HarmanReport rep = harman_report(tab, cfg);
    std::ostringstream o1, o2;
    report_to_json(rep, o1);
    report_to_json(rep, o2);
    CHECK(o1.str() == o2.str());
    CHECK(o1.str().find("\"seed\": 7") != std::string::npos);
    CHECK(o1.str().find("omega_bar") != std::string::npos);
}
