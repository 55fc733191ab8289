#include "wb/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wb {

double dist_mod1(double x) {
    double f = x - std::floor(x);
    return std::min(f, 1.0 - f);
}

ApproxTarget::ApproxTarget(double M_, double N_, double alpha_, double beta_)
    : M(M_), N(N_), alpha(alpha_ - std::floor(alpha_)), beta(beta_ - std::floor(beta_)) {
    if (!(M > 0) || !(N > 0)) throw std::domain_error("ApproxTarget: M, N must be positive");
}

ApproxResult t_value(const ApproxTarget& tg) {
    ApproxResult best{1, 1.0 + tg.M * dist_mod1(tg.alpha) + tg.N * dist_mod1(tg.beta),
                      dist_mod1(tg.alpha), dist_mod1(tg.beta)};
    for (long long t = 2; double(t) <= best.value; ++t) {
        double da = dist_mod1(tg.alpha * double(t));
        double db = dist_mod1(tg.beta * double(t));
        double v = double(t) + tg.M * da + tg.N * db;
        if (v < best.value) best = {t, v, da, db};
    }
    return best;
}

DirichletWitness dirichlet_witness(double alpha, double beta, double A, double B) {
    if (!(A >= 1) || !(B >= 1)) throw std::domain_error("dirichlet_witness: A, B >= 1 required");
    alpha -= std::floor(alpha);
    beta -= std::floor(beta);
    const long long na = (long long)std::ceil(A);
    const long long nb = (long long)std::ceil(B);
    const long long boxes = na * nb;
    std::vector<long long> seen(size_t(boxes), -1);
    // t = 0 lands in box (0, 0)
    seen[0] = 0;
    for (long long t = 1; t <= boxes + 1; ++t) {
        double fa = alpha * double(t);
        fa -= std::floor(fa);
        double fb = beta * double(t);
        fb -= std::floor(fb);
        long long ia = std::min((long long)(fa * double(na)), na - 1);
        long long ib = std::min((long long)(fb * double(nb)), nb - 1);
        long long key = ia * nb + ib;
        if (seen[size_t(key)] >= 0) {
            long long d = t - seen[size_t(key)];
            return {d, dist_mod1(alpha * double(d)), dist_mod1(beta * double(d))};
        }
        seen[size_t(key)] = t;
    }
    throw std::logic_error("dirichlet_witness: pigeonhole failed");  // unreachable
}

}  // namespace wb
