#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace wb {

inline constexpr double kEulerGamma = 0.57721566490153286;

// Gridded Buchstab omega(u) and linear-sieve F(s), f(s) on [1, u_max].
//
//   u omega(u) = 1 + int_1^{u-1} omega,   omega = 1/u on [1, 2]
//   F(s) = 2 e^gamma / s on [1, 3],       (s F)' = f(s-1) beyond
//   f = 0 on (0, 2], 2 e^gamma log(s-1)/s on [2, 4],  (s f)' = F(s-1) beyond
//
// Trapezoid integration on the fixed grid; values at the integer-delay knots
// sit exactly on grid nodes.
class SieveTable {
  public:
    SieveTable(double step, double u_max);

    double step() const { return step_; }
    double u_max() const { return u_max_; }

    double omega_at(double u) const;
    double F_at(double s) const;
    double f_at(double s) const;

    // omega extended for the Harman integrands: 0 below 1, e^{-gamma} above u_max
    double omega_ext(double u) const;

    void to_csv(std::ostream& os, std::size_t stride = 1) const;

  private:
    double step_, u_max_;
    std::size_t n_;       // number of nodes
    std::size_t inv_;     // nodes per unit length
    std::vector<double> omega_, F_, f_;

    double interp(const std::vector<double>& v, double x, const char* what) const;
};

}  // namespace wb
