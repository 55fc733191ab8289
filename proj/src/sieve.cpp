#include "wb/sieve.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace wb {

SieveTable::SieveTable(double step, double u_max) : step_(step), u_max_(u_max) {
    if (!(step > 0) || step > 1e-4 + 1e-15)
        throw std::domain_error("SieveTable: step must be <= 1e-4 (accuracy contract)");
    if (!(u_max >= 10)) throw std::domain_error("SieveTable: u_max must be >= 10");
    inv_ = std::size_t(std::llround(1.0 / step));
    if (std::abs(double(inv_) * step - 1.0) > 1e-9)
        throw std::domain_error("SieveTable: 1/step must be an integer");
    n_ = std::size_t(std::llround((u_max - 1.0) / step)) + 1;
    omega_.resize(n_);
    F_.resize(n_);
    f_.resize(n_);

    const double twoeg = 2.0 * std::exp(kEulerGamma);
    const double sF3 = twoeg;                          // 3 * F(3) = 2 e^gamma
    const double sf4 = twoeg * std::log(3.0);          // 4 * f(4)

    // running trapezoid integrals, one value per node:
    //   Iw[i] = int_1^{u_i} omega,  Jf[i] = int_2^{u_i} f,  JF[i] = int_3^{u_i} F
    std::vector<double> Iw(n_), Jf(n_), JF(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        const double u = 1.0 + double(i) * step_;
        if (u <= 2.0 + 1e-12)
            omega_[i] = 1.0 / u;
        else
            omega_[i] = (1.0 + Iw[i - inv_]) / u;
        if (u <= 3.0 + 1e-12)
            F_[i] = twoeg / u;
        else
            F_[i] = (sF3 + Jf[i - inv_]) / u;
        if (u <= 2.0 + 1e-12)
            f_[i] = 0.0;
        else if (u <= 4.0 + 1e-12)
            f_[i] = twoeg * std::log(u - 1.0) / u;
        else
            f_[i] = (sf4 + JF[i - inv_]) / u;
        if (i == 0) {
            Iw[0] = Jf[0] = JF[0] = 0.0;
        } else {
            Iw[i] = Iw[i - 1] + step_ * 0.5 * (omega_[i - 1] + omega_[i]);
            Jf[i] = Jf[i - 1] + ((u > 2.0 + 1e-12) ? step_ * 0.5 * (f_[i - 1] + f_[i]) : 0.0);
            JF[i] = JF[i - 1] + ((u > 3.0 + 1e-12) ? step_ * 0.5 * (F_[i - 1] + F_[i]) : 0.0);
        }
    }
}

double SieveTable::interp(const std::vector<double>& v, double x, const char* what) const {
    if (x < 1.0 - 1e-12 || x > u_max_ + 1e-12)
        throw std::domain_error(std::string(what) + ": argument outside [1, u_max]");
    double pos = (x - 1.0) / step_;
    std::size_t i = std::size_t(pos);
    if (i >= n_ - 1) return v[n_ - 1];
    double frac = pos - double(i);
    return v[i] * (1.0 - frac) + v[i + 1] * frac;
}

double SieveTable::omega_at(double u) const { return interp(omega_, u, "omega_at"); }
double SieveTable::F_at(double s) const { return interp(F_, s, "F_at"); }
double SieveTable::f_at(double s) const { return interp(f_, s, "f_at"); }

double SieveTable::omega_ext(double u) const {
    if (u < 1.0) return 0.0;
    if (u > u_max_) return std::exp(-kEulerGamma);
    return omega_at(u);
}

void SieveTable::to_csv(std::ostream& os, std::size_t stride) const {
    if (stride == 0) stride = 1;
    os << "u,omega,F,f\n";
    char buf[128];
    for (std::size_t i = 0; i < n_; i += stride) {
        double u = 1.0 + double(i) * step_;
        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g,%.10g\n", u, omega_[i], F_[i], f_[i]);
        os << buf;
    }
}

}  // namespace wb
