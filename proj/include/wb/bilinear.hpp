#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "wb/arith.hpp"

namespace wb {

using cdouble = std::complex<double>;

// e(x) = exp(2 pi i x)
cdouble unit_phase(double x);

struct SmoothWindow {
    enum class Kind { bump, sharp } kind;
    double a, b;  // bump: center, halfwidth; sharp: lo, hi (oracle tests only)

    static SmoothWindow bump(double center, double halfwidth) {
        return {Kind::bump, center, halfwidth};
    }
    static SmoothWindow sharp(double lo, double hi) { return {Kind::sharp, lo, hi}; }

    // bump: exp(-u^2/(1-u^2)) with u = (t-center)/halfwidth, peak 1; else 0
    double operator()(double t) const;
    double support_lo() const { return kind == Kind::bump ? a - b : a; }
    double support_hi() const { return kind == Kind::bump ? a + b : b; }
    double integral() const;
    // continuous transform: int w(t) e(-y t) dt
    cdouble fourier(double y) const;
};

struct WindowedSequence {
    enum class Desc { phase, dispersion, custom };
    i64 lo = 0;                  // support is [lo, lo + values.size())
    std::vector<cdouble> values;
    Desc desc = Desc::custom;

    i64 hi() const { return lo + i64(values.size()); }  // one past the end
    cdouble at(i64 n) const {
        return (n >= lo && n < hi()) ? values[size_t(n - lo)] : cdouble(0);
    }
    double l2_sq() const;
};

// a_m = e(m alpha) for m in [lo, lo+len)
WindowedSequence phase_sequence(double alpha, i64 lo, i64 len);

struct DispersionSequence {
    double H;
    double L;
    u64 ell1, ell2;      // coprime, both ~ L
    double alpha1, alpha2;
    SmoothWindow w1, w2;

    DispersionSequence(double H_, double L_, u64 e1, u64 e2, double a1, double a2,
                       SmoothWindow win1, SmoothWindow win2);
};

// a_n = sum_{h1 ell1 - h2 ell2 = n} w1(h1/H) w2(h2/H) e(h1 a1 + h2 a2),
// direct double loop over the window supports.
WindowedSequence dispersion_values(const DispersionSequence& d);

struct FourierProfile {
    u64 grid_size = 0;
    std::vector<cdouble> values;   // a_hat(j / grid_size)
    double l1_norm = 0;
    double l2_norm = 0;
    double parseval_rel_err = 0;   // |l2^2 - sum|a_n|^2| / sum|a_n|^2
    struct IntervalMass {
        double lo, hi;   // subinterval of [0,1) (mod 1)
        double mass;     // L1 Riemann mass inside
    };
    std::vector<IntervalMass> concentration;  // only for dispersion input
    double inside_mass = 0;
    double outside_mass = 0;
    double total_mass = 0;
};

// Exact per-point sums of a_hat on a uniform grid (power of two,
// >= 2 |support|). For dispersion sequences also reports the L1 mass inside
// vs outside the union of ||ell_i xi - alpha_i|| <= H^{eps-1}, eps = 0.1.
FourierProfile fourier_profile(const WindowedSequence& seq, u64 grid_size,
                               const DispersionSequence* disp = nullptr);

// sum_m a_m sum_n b_n S(scalar m, scalar n; c); oracle scale |A||B| <= 1e6
cdouble bilinear_form_direct(const WindowedSequence& a, const WindowedSequence& b,
                             u64 scalar, const Modulus& c);

// sum over units x of a_hat(scalar x / c) b_hat(scalar xbar / c); equals the
// direct form exactly (Kloosterman-Fourier duality). Requires c <= 1e5.
cdouble bilinear_form_dual(const WindowedSequence& a, const WindowedSequence& b,
                           u64 scalar, const Modulus& c);

struct PoissonResult {
    double main_term;     // (N/q) int w
    double corrected_sum; // main + dual sum over 1 <= |h| <= H
    double H;
};

// Truncated Poisson for sum_{n = a (q)} w(n/N), dual length H = x^delta Q / N
// at x = qN, Q = q. Matches the direct sum to 1e-8 absolute for smooth w.
PoissonResult poisson_complete(const SmoothWindow& w, double N, const Modulus& q,
                               u64 a, double delta);

// the direct arithmetic-progression sum (reference path)
double progression_sum(const SmoothWindow& w, double N, const Modulus& q, u64 a);

// |bilinear| / (c T_{M,N}(alpha,beta) + gcd(scalar,c) M N) for phase sequences
double bound_ratio_prop35(double alpha, i64 mlo, i64 mlen, double beta, i64 nlo,
                          i64 nlen, u64 scalar, const Modulus& c);

}  // namespace wb
