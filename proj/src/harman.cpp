#include "wb/harman.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace wb {

namespace {

constexpr double kA1 = 25.0 / 24.0;
constexpr double kA3 = 7.0 / 6.0;
constexpr double kHalf = 0.5;

double round10(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return std::strtod(buf, nullptr);
}

}  // namespace

HarmanParams make_params(double alpha, double theta) {
    HarmanParams p;
    p.theta = theta;
    p.alpha = alpha;
    p.d_exp = type1_ceiling(alpha, theta);
    double b1 = (2.0 - (1.0 + theta) * alpha) / (3.0 - 2.0 * theta);
    double b2 = (1.0 - theta) * (2.0 - alpha) / (3.0 - theta);
    p.sigma0 = std::max(b1, b2);
    p.sigma = std::max((4.0 - 3.0 * alpha) / 3.0, p.sigma0);
    p.gamma_exp = p.sigma0;
    p.xi = p.d_exp + 1.0 - alpha;
    return p;
}

double type1_ceiling(double alpha, double theta) {
    return std::min(kHalf, 2.0 * (1.0 - theta * alpha) / (4.0 - 5.0 * theta));
}

Type2Window type2_window(double alpha, double theta, Type2Variant variant) {
    double lower = alpha - 1.0;
    double upper;
    if (variant == Type2Variant::squarefree) {
        upper = std::max((2.0 - (1.0 + theta) * alpha) / (3.0 - 2.0 * theta),
                         (2.0 - alpha) * (1.0 - theta) / (3.0 - theta));
    } else {
        upper = (4.0 - 3.0 * alpha) / 3.0;
    }
    return {lower, upper};
}

double alpha_sigma_branch_cross(double theta) {
    return (6.0 - 8.0 * theta) / (3.0 * (2.0 - 3.0 * theta));
}
double alpha_range2_end(double theta) { return (8.0 - 4.0 * theta) / (7.0 - 3.0 * theta); }
double alpha_range4_end(double theta) { return (5.0 - 3.0 * theta) / (4.0 - 2.0 * theta); }

std::vector<Threshold> thresholds(double theta) {
    std::vector<Threshold> out;
    auto sigma0 = [theta](double a) {
        return std::max((2.0 - (1.0 + theta) * a) / (3.0 - 2.0 * theta),
                        (1.0 - theta) * (2.0 - a) / (3.0 - theta));
    };
    auto xi = [theta](double a) { return type1_ceiling(a, theta) + 1.0 - a; };
    auto sigma = [&](double a) { return std::max((4.0 - 3.0 * a) / 3.0, sigma0(a)); };
    {
        double a = kA1;  // alpha = xi + 2 sigma
        out.push_back({"25/24", a, std::abs(a - (xi(a) + 2.0 * sigma(a)))});
    }
    {
        double a = alpha_range2_end(theta);  // 2(alpha-1) = sigma0
        out.push_back({"228/203", a, std::abs(2.0 * (a - 1.0) - sigma0(a))});
    }
    {
        double a = kA3;  // 2(alpha-1) = xi
        out.push_back({"7/6", a, std::abs(2.0 * (a - 1.0) - xi(a))});
    }
    {
        double a = alpha_range4_end(theta);  // alpha-1 = sigma0
        out.push_back({"139/114", a, std::abs((a - 1.0) - sigma0(a))});
    }
    {
        double a = 1.25;  // type-I branch crossing: 1/2 = 2(1-theta a)/(4-5theta)
        out.push_back(
            {"5/4", a, std::abs(kHalf - 2.0 * (1.0 - theta * a) / (4.0 - 5.0 * theta))});
    }
    return out;
}

namespace {

// adaptive midpoint refinement with Richardson acceptance
double adapt_mid(const std::function<double(double)>& f, double a, double b, double whole,
                 double tol, int depth) {
    double m = 0.5 * (a + b);
    double left = (m - a) * f(0.5 * (a + m));
    double right = (b - m) * f(0.5 * (m + b));
    double two = left + right;
    if (depth <= 0) return two;
    if (std::abs(two - whole) <= 3.0 * tol) return two + (two - whole) / 3.0;
    return adapt_mid(f, a, m, left, tol * 0.5, depth - 1) +
           adapt_mid(f, m, b, right, tol * 0.5, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    double whole = (b - a) * f(0.5 * (a + b));
    return adapt_mid(f, a, b, whole, tol, 48);
}

// int_lo^hi omega(alpha/beta - 1) dbeta / beta^2
double inner_loss(const SieveTable& tab, double alpha, double lo, double hi, double tol) {
    if (!(hi > lo)) return 0.0;
    return integrate([&](double b) { return tab.omega_ext(alpha / b - 1.0) / (b * b); }, lo,
                     hi, tol);
}

struct G4Sampler {
    const SieveTable& tab;
    double theta;

    double density(double alpha, double b1, double b2, double b3) const {
        HarmanParams p = make_params(alpha, theta);
        const double w = alpha - 1.0;
        double S = b1 + b2 + b3;
        if (S <= p.xi) return 0.0;
        for (double pair : {b1 + b2, b1 + b3, b2 + b3, S})
            if (pair >= w && pair <= p.sigma0) return 0.0;
        return alpha * tab.omega_ext((alpha - S) / b3) / (b1 * b2 * b3 * b3);
    }
};

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

IntegralResult g4_monte_carlo(const SieveTable& tab, const HarmanConfig& cfg) {
    const double a_lo = alpha_range2_end(cfg.theta), a_hi = kA3;
    const int S = std::max(cfg.strata, 1);
    const std::uint64_t per = std::max<std::uint64_t>(cfg.mc_samples / std::uint64_t(S), 1);
    G4Sampler sampler{tab, cfg.theta};
    double total = 0, var_total = 0;
    std::uint64_t used = 0;
    const double aw = (a_hi - a_lo) / double(S);
    for (int s = 0; s < S; ++s) {
        std::mt19937_64 rng(splitmix(cfg.seed ^ (0xd1b54a32d192ed03ull * std::uint64_t(s + 1))));
        std::uniform_real_distribution<double> U(0.0, 1.0);
        double sum = 0, sum2 = 0;
        for (std::uint64_t k = 0; k < per; ++k) {
            double alpha = a_lo + aw * (double(s) + U(rng));
            HarmanParams p = make_params(alpha, cfg.theta);
            const double w = alpha - 1.0;
            double f = 0;
            // importance floors implied by Sum > xi with b1 >= b2 >= b3
            double b1lo = p.xi / 3.0;
            if (b1lo < w) {
                double b1 = b1lo + (w - b1lo) * U(rng);
                double b2lo = std::max((p.xi - b1) / 2.0, 0.0);
                if (b2lo < b1) {
                    double b2 = b2lo + (b1 - b2lo) * U(rng);
                    double b3lo = std::max(p.xi - b1 - b2, 0.0);
                    if (b3lo < b2) {
                        double b3 = b3lo + (b2 - b3lo) * U(rng);
                        double vol = (w - b1lo) * (b1 - b2lo) * (b2 - b3lo);
                        f = sampler.density(alpha, b1, b2, b3) * vol;
                    }
                }
            }
            sum += f;
            sum2 += f * f;
        }
        double mean = sum / double(per);
        double var = std::max(sum2 / double(per) - mean * mean, 0.0);
        total += aw * mean;
        var_total += aw * aw * var / double(per);
        used += per;
    }
    IntegralResult r;
    r.value = total;
    r.abs_error = 3.0 * std::sqrt(var_total);
    r.method = IntegralResult::Method::monte_carlo;
    r.seed = cfg.seed;
    r.n_samples = used;
    return r;
}

}  // namespace

IntegralResult compute_G(int index, const SieveTable& tab, const HarmanConfig& cfg) {
    const double th = cfg.theta;
    const double tol = cfg.quad_tol;
    const double A2 = alpha_range2_end(th), A4 = alpha_range4_end(th);
    if (tab.u_max() < 10) throw std::domain_error("compute_G: table coverage insufficient");
    IntegralResult r;
    r.method = IntegralResult::Method::nested_adaptive;
    switch (index) {
        case 1: {
            auto f = [&](double a) {
                HarmanParams p = make_params(a, th);
                return a * (inner_loss(tab, a, p.sigma, a - 2.0 * p.sigma, tol) +
                            inner_loss(tab, a, p.xi, a / 2.0, tol));
            };
            r.value = integrate(f, 1.0, kA1, tol);
            r.abs_error = tol * 4.0;
            break;
        }
        case 2: {
            auto f = [&](double a) {
                HarmanParams p = make_params(a, th);
                return a * inner_loss(tab, a, p.sigma, a / 2.0, tol);
            };
            double cross = alpha_sigma_branch_cross(th);  // sigma kink
            r.value = integrate(f, kA1, std::min(cross, A2), tol) +
                      integrate(f, std::min(cross, A2), A2, tol);
            r.abs_error = tol * 4.0;
            break;
        }
        case 3: {
            auto f = [&](double a) {
                HarmanParams p = make_params(a, th);
                return a * inner_loss(tab, a, p.sigma0, a / 2.0, tol);
            };
            r.value = integrate(f, A2, kA3, tol);
            r.abs_error = tol * 4.0;
            break;
        }
        case 4:
            return g4_monte_carlo(tab, cfg);
        case 5:
            r.value = 2.0 * (A4 * A4 - kA3 * kA3);
            r.abs_error = 0.0;
            break;
        case 6: {
            auto f = [&](double a) {
                HarmanParams p = make_params(a, th);
                return a * inner_loss(tab, a, a - 1.0, p.sigma0, tol);
            };
            r.value = integrate(f, kA3, A4, tol);
            r.abs_error = tol * 4.0;
            break;
        }
        default:
            throw std::domain_error("compute_G: index must be 1..6");
    }
    return r;
}

double solve_omega_bar(double budget, double theta) {
    const double A4 = alpha_range4_end(theta);
    if (budget < 0) return A4;
    if (budget == 0) return 1.25;
    // antiderivative of alpha/(1 - theta alpha)
    auto prim = [theta](double a) {
        if (theta < 1e-9) return 0.5 * a * a;  // theta -> 0 limit of the integral form
        return -a / theta - std::log(1.0 - theta * a) / (theta * theta);
    };
    const double scale = 4.0 - 5.0 * theta;
    auto lhs = [&](double w) { return scale * (prim(w) - prim(1.25)); };
    double lo = 1.25, hi = std::min(2.5, theta > 1e-9 ? 0.999 / theta : 2.5);
    if (lhs(hi) < budget) return hi;  // saturated; not reachable in practice
    for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
        double mid = 0.5 * (lo + hi);
        (lhs(mid) < budget ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

HarmanReport harman_report(const SieveTable& tab, const HarmanConfig& cfg) {
    HarmanReport rep;
    rep.cfg = cfg;
    for (int i = 1; i <= 6; ++i) rep.G[size_t(i - 1)] = compute_G(i, tab, cfg);
    const double A4 = alpha_range4_end(cfg.theta);
    rep.deficit = (kA3 - 1.0) + rep.G[0].value + rep.G[1].value + rep.G[2].value +
                  rep.G[3].value + rep.G[4].value - rep.G[5].value;
    rep.budget = 1.0 - rep.deficit - 2.0 * (1.25 * 1.25 - A4 * A4);
    rep.omega_bar = solve_omega_bar(rep.budget, cfg.theta);
    return rep;
}

HarmanReport harman_report_from_paper_bounds(double theta) {
    HarmanReport rep;
    rep.cfg.theta = theta;
    const double bounds[6] = {0.02093, 0.10528, 0.07319, 0.00163, 0.25116, 0.02789};
    for (int i = 0; i < 6; ++i) {
        rep.G[size_t(i)].value = bounds[i];
        rep.G[size_t(i)].abs_error = 0;
    }
    const double A4 = alpha_range4_end(theta);
    rep.deficit = (kA3 - 1.0) + bounds[0] + bounds[1] + bounds[2] + bounds[3] + bounds[4] -
                  bounds[5];
    rep.budget = 1.0 - rep.deficit - 2.0 * (1.25 * 1.25 - A4 * A4);
    rep.omega_bar = solve_omega_bar(rep.budget, theta);
    return rep;
}

void report_to_json(const HarmanReport& rep, std::ostream& os) {
    nlohmann::json j;
    j["theta"] = round10(rep.cfg.theta);
    j["seed"] = rep.cfg.seed;
    j["mc_samples"] = rep.cfg.mc_samples;
    j["strata"] = rep.cfg.strata;
    for (int i = 0; i < 6; ++i) {
        nlohmann::json g;
        g["value"] = round10(rep.G[size_t(i)].value);
        g["abs_error"] = round10(rep.G[size_t(i)].abs_error);
        g["method"] = rep.G[size_t(i)].method == IntegralResult::Method::monte_carlo
                          ? "monte_carlo"
                          : "nested_adaptive";
        if (rep.G[size_t(i)].method == IntegralResult::Method::monte_carlo) {
            g["seed"] = rep.G[size_t(i)].seed;
            g["n_samples"] = rep.G[size_t(i)].n_samples;
        }
        j["G"][size_t(i)] = g;
    }
    j["deficit"] = round10(rep.deficit);
    j["budget"] = round10(rep.budget);
    j["omega_bar"] = round10(rep.omega_bar);
    os << j.dump(2) << "\n";
}

void fig2_boundaries(double theta, double alpha_lo, double alpha_hi, double step,
                     std::ostream& os) {
    os << "alpha,type1_ceiling,type2_upper_sf,type2_upper_pr,alpha_minus_1\n";
    char buf[160];
    for (double a = alpha_lo; a <= alpha_hi + 1e-12; a += step) {
        double t1 = type1_ceiling(a, theta);
        double sf = type2_window(a, theta, Type2Variant::squarefree).upper;
        double pr = type2_window(a, theta, Type2Variant::primes).upper;
        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g,%.10g,%.10g\n", a, t1, sf, pr,
                      a - 1.0);
        os << buf;
    }
}

}  // namespace wb
