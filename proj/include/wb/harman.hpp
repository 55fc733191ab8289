#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wb/sieve.hpp"

namespace wb {

inline constexpr double kThetaKimSarnak = 7.0 / 32.0;

// per-alpha exponents at eps = 0
struct HarmanParams {
    double theta;
    double alpha;
    double d_exp;      // min(1/2, 2(1-theta alpha)/(4-5 theta))
    double sigma0;     // max((2-(1+theta)alpha)/(3-2theta), (1-theta)(2-alpha)/(3-theta))
    double sigma;      // max((4-3alpha)/3, sigma0)
    double gamma_exp;  // sigma0
    double xi;         // d_exp + 1 - alpha
};

HarmanParams make_params(double alpha, double theta);

double type1_ceiling(double alpha, double theta);

struct Type2Window {
    double lower, upper;
    bool empty() const { return lower >= upper; }
};
enum class Type2Variant { squarefree, primes };
Type2Window type2_window(double alpha, double theta, Type2Variant variant);

struct Threshold {
    std::string name;
    double value;
    double residual;  // |lhs - rhs| of the defining equation
};
// The five range boundaries at theta = 7/32: 25/24, 228/203, 7/6, 139/114, 5/4.
std::vector<Threshold> thresholds(double theta);

// range boundaries for general theta (used by the pipeline)
double alpha_sigma_branch_cross(double theta);   // 136/129 at 7/32
double alpha_range2_end(double theta);           // (8-4theta)/(7-3theta); 228/203
double alpha_range4_end(double theta);           // (5-3theta)/(4-2theta); 139/114

struct IntegralResult {
    double value = 0;
    double abs_error = 0;
    enum class Method { nested_adaptive, monte_carlo } method = Method::nested_adaptive;
    std::uint64_t seed = 0;
    std::uint64_t n_samples = 0;
};

struct HarmanConfig {
    double theta = kThetaKimSarnak;
    double quad_tol = 1e-6;
    std::uint64_t mc_samples = 10000000;
    std::uint64_t seed = 1;
    int strata = 64;
};

// G_1..G_6 (index 1-based). G5 is the closed form 2((139/114)^2 - (7/6)^2);
// G4 is stratified Monte Carlo over the unrecoverable depth-3 region; the
// rest are nested adaptive quadrature against the Buchstab table.
IntegralResult compute_G(int index, const SieveTable& table, const HarmanConfig& cfg);

struct HarmanReport {
    HarmanConfig cfg;
    std::array<IntegralResult, 6> G;
    double deficit = 0;    // (7/6 - 1) + G1+G2+G3+G4+G5 - G6
    double budget = 0;     // 1 - deficit - 2((5/4)^2 - (139/114)^2)
    double omega_bar = 0;
};

HarmanReport harman_report(const SieveTable& table, const HarmanConfig& cfg);

// root of (4-5theta) int_{5/4}^{w} alpha/(1-theta alpha) = budget;
// budget < 0 -> 139/114-analogue (no gain), budget = 0 -> 5/4 exactly.
double solve_omega_bar(double budget, double theta);

// deficit/budget/omega_bar assembled from the six paper bound values
HarmanReport harman_report_from_paper_bounds(double theta = kThetaKimSarnak);

void report_to_json(const HarmanReport& rep, std::ostream& os);

// CSV rows: alpha, type1_ceiling, type2_upper_sf, type2_upper_pr, alpha-1
void fig2_boundaries(double theta, double alpha_lo, double alpha_hi, double step,
                     std::ostream& os);

}  // namespace wb
