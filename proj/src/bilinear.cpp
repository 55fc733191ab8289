#include "wb/bilinear.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "wb/rational.hpp"

namespace wb {

cdouble unit_phase(double x) {
    double t = 2.0 * M_PI * x;
    return {std::cos(t), std::sin(t)};
}

double SmoothWindow::operator()(double t) const {
    if (kind == Kind::sharp) return (t >= a && t <= b) ? 1.0 : 0.0;
    double u = (t - a) / b;
    double u2 = u * u;
    if (u2 >= 1.0) return 0.0;
    return std::exp(-u2 / (1.0 - u2));
}

namespace {
constexpr int kQuadPanels = 4096;
}

double SmoothWindow::integral() const {
    if (kind == Kind::sharp) return b - a;
    // trapezoid; all derivatives vanish at the endpoints, so this converges
    // faster than any power of the step
    double lo = support_lo(), hi = support_hi();
    double h = (hi - lo) / kQuadPanels;
    double s = 0;
    for (int i = 1; i < kQuadPanels; ++i) s += (*this)(lo + i * h);
    return s * h;
}

cdouble SmoothWindow::fourier(double y) const {
    if (kind == Kind::sharp) {
        if (y == 0) return b - a;
        // int_a^b e(-yt) dt
        return (unit_phase(-y * b) - unit_phase(-y * a)) / cdouble(0, -2.0 * M_PI * y);
    }
    double lo = support_lo(), hi = support_hi();
    double h = (hi - lo) / kQuadPanels;
    cdouble s = 0;
    for (int i = 1; i < kQuadPanels; ++i) {
        double t = lo + i * h;
        s += (*this)(t)*unit_phase(-y * t);
    }
    return s * h;
}

double WindowedSequence::l2_sq() const {
    double s = 0;
    for (const auto& v : values) s += std::norm(v);
    return s;
}

WindowedSequence phase_sequence(double alpha, i64 lo, i64 len) {
    WindowedSequence s;
    s.lo = lo;
    s.desc = WindowedSequence::Desc::phase;
    s.values.resize(size_t(std::max<i64>(len, 0)));
    for (i64 i = 0; i < len; ++i) s.values[size_t(i)] = unit_phase(alpha * double(lo + i));
    return s;
}

DispersionSequence::DispersionSequence(double H_, double L_, u64 e1, u64 e2, double a1,
                                       double a2, SmoothWindow win1, SmoothWindow win2)
    : H(H_), L(L_), ell1(e1), ell2(e2), alpha1(a1), alpha2(a2), w1(win1), w2(win2) {
    if (e1 == 0 || e2 == 0 || std::gcd(e1, e2) != 1)
        throw std::invalid_argument("DispersionSequence: ell1, ell2 must be coprime positive");
}

WindowedSequence dispersion_values(const DispersionSequence& d) {
    WindowedSequence out;
    out.desc = WindowedSequence::Desc::dispersion;
    i64 h1_lo = i64(std::ceil(d.H * d.w1.support_lo()));
    i64 h1_hi = i64(std::floor(d.H * d.w1.support_hi()));
    i64 h2_lo = i64(std::ceil(d.H * d.w2.support_lo()));
    i64 h2_hi = i64(std::floor(d.H * d.w2.support_hi()));
    if (h1_lo > h1_hi || h2_lo > h2_hi) return out;  // empty support
    i64 n_min = h1_lo * i64(d.ell1) - h2_hi * i64(d.ell2);
    i64 n_max = h1_hi * i64(d.ell1) - h2_lo * i64(d.ell2);
    out.lo = n_min;
    out.values.assign(size_t(n_max - n_min + 1), cdouble(0));
    for (i64 h1 = h1_lo; h1 <= h1_hi; ++h1) {
        double v1 = d.w1(double(h1) / d.H);
        if (v1 == 0) continue;
        for (i64 h2 = h2_lo; h2 <= h2_hi; ++h2) {
            double v2 = d.w2(double(h2) / d.H);
            if (v2 == 0) continue;
            i64 n = h1 * i64(d.ell1) - h2 * i64(d.ell2);
            out.values[size_t(n - n_min)] +=
                v1 * v2 * unit_phase(d.alpha1 * double(h1) + d.alpha2 * double(h2));
        }
    }
    return out;
}

FourierProfile fourier_profile(const WindowedSequence& seq, u64 grid_size,
                               const DispersionSequence* disp) {
    if (grid_size == 0 || (grid_size & (grid_size - 1)) != 0)
        throw std::domain_error("fourier_profile: grid_size must be a power of two");
    if (grid_size < 2 * seq.values.size())
        throw std::domain_error("fourier_profile: grid_size must be >= 2 |support|");
    FourierProfile p;
    p.grid_size = grid_size;
    p.values.resize(grid_size);
    // nonzero entries only; per entry, sweep the grid with a phase rotation
    // (re-synced every 4096 steps to hold rounding drift well below tolerance)
    for (size_t i = 0; i < seq.values.size(); ++i) {
        if (seq.values[i] == cdouble(0)) continue;
        const i64 n = seq.lo + i64(i);
        const cdouble rot = unit_phase(-double(n) / double(grid_size));
        cdouble w = seq.values[i];
        for (u64 j = 0; j < grid_size; ++j) {
            if ((j & 4095) == 0)
                w = seq.values[i] * unit_phase(-double(n) * double(j) / double(grid_size));
            p.values[j] += w;
            w *= rot;
        }
    }
    double l1 = 0, l2sq = 0;
    for (auto& v : p.values) {
        l1 += std::abs(v);
        l2sq += std::norm(v);
    }
    l1 /= double(grid_size);
    l2sq /= double(grid_size);
    p.l1_norm = l1;
    p.l2_norm = std::sqrt(l2sq);
    double ref = seq.l2_sq();
    p.parseval_rel_err = ref > 0 ? std::abs(l2sq - ref) / ref : 0.0;
    if (p.parseval_rel_err > 0.01)
        throw std::logic_error("fourier_profile: Parseval check failed (grid too coarse)");

    if (disp && seq.desc == WindowedSequence::Desc::dispersion) {
        const double eps = 0.1;
        const double delta = std::pow(disp->H, eps - 1.0);
        std::vector<char> inside(grid_size, 0);
        // a_hat(xi) = W1(alpha1 - ell1 xi) W2(alpha2 + ell2 xi) under the
        // h1 l1 - h2 l2 = n convention, so the second spike family sits at
        // ||ell2 xi + alpha2|| <= delta
        auto mark = [&](u64 ell, double alpha) {
            double halfw = delta / double(ell);
            for (u64 k = 0; k < ell; ++k) {
                double center = (alpha + double(k)) / double(ell);
                center -= std::floor(center);
                FourierProfile::IntervalMass im{center - halfw, center + halfw, 0.0};
                for (u64 j = 0; j < grid_size; ++j) {
                    double xi = double(j) / double(grid_size);
                    double d1 = std::abs(xi - center);
                    double dist = std::min(d1, 1.0 - d1);
                    if (dist <= halfw) {
                        im.mass += std::abs(p.values[j]) / double(grid_size);
                        inside[j] = 1;
                    }
                }
                p.concentration.push_back(im);
            }
        };
        mark(disp->ell1, disp->alpha1);
        mark(disp->ell2, -disp->alpha2);
        for (u64 j = 0; j < grid_size; ++j) {
            double m = std::abs(p.values[j]) / double(grid_size);
            p.total_mass += m;
            if (inside[j])
                p.inside_mass += m;
            else
                p.outside_mass += m;
        }
    }
    return p;
}

cdouble bilinear_form_direct(const WindowedSequence& a, const WindowedSequence& b,
                             u64 scalar, const Modulus& cm) {
    if (a.values.size() * b.values.size() > 1000000)
        throw std::domain_error("bilinear_form_direct: oracle scale exceeded, use the dual path");
    const u64 c = cm.value();
    // memoize on residue pairs
    std::unordered_map<u64, double> memo;
    cdouble total = 0;
    for (size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i] == cdouble(0)) continue;
        i64 m = a.lo + i64(i);
        u64 mr = u64(((i64(scalar) * m) % i64(c) + i64(c)) % i64(c));
        for (size_t j = 0; j < b.values.size(); ++j) {
            if (b.values[j] == cdouble(0)) continue;
            i64 n = b.lo + i64(j);
            u64 nr = u64(((i64(scalar) * n) % i64(c) + i64(c)) % i64(c));
            u64 key = mr * c + nr;
            auto it = memo.find(key);
            double s;
            if (it == memo.end()) {
                s = kloosterman_sum(i64(mr), i64(nr), cm);
                memo.emplace(key, s);
            } else {
                s = it->second;
            }
            total += a.values[i] * b.values[j] * s;
        }
    }
    return total;
}

namespace {

cdouble hat_at(const WindowedSequence& s, double xi) {
    cdouble r = 0;
    for (size_t i = 0; i < s.values.size(); ++i)
        if (s.values[i] != cdouble(0))
            r += s.values[i] * unit_phase(-double(s.lo + i64(i)) * xi);
    return r;
}

}  // namespace

cdouble bilinear_form_dual(const WindowedSequence& a, const WindowedSequence& b,
                           u64 scalar, const Modulus& cm) {
    const u64 c = cm.value();
    if (c > 100000) throw std::domain_error("bilinear_form_dual: c <= 1e5 required");
    if (c == 1) {
        // single unit x = 0
        return hat_at(a, 0.0) * hat_at(b, 0.0);
    }
    cdouble total = 0;
    for (u64 x = 1; x < c; ++x) {
        if (std::gcd(x, c) != 1) continue;
        u64 xb = inverse_mod(x, c);
        double xia = double(mulmod(scalar % c, x, c)) / double(c);
        double xib = double(mulmod(scalar % c, xb, c)) / double(c);
        total += hat_at(a, xia) * hat_at(b, xib);
    }
    return total;
}

double progression_sum(const SmoothWindow& w, double N, const Modulus& qm, u64 a) {
    const u64 q = qm.value();
    double lo = w.support_lo() * N, hi = w.support_hi() * N;
    i64 first = i64(std::ceil(lo));
    i64 rem = first % i64(q);
    if (rem < 0) rem += i64(q);
    i64 shift = (i64(a % q) - rem) % i64(q);
    if (shift < 0) shift += i64(q);
    double s = 0;
    for (i64 n = first + shift; double(n) <= hi; n += i64(q)) s += w(double(n) / N);
    return s;
}

PoissonResult poisson_complete(const SmoothWindow& w, double N, const Modulus& qm, u64 a,
                               double delta) {
    if (w.kind != SmoothWindow::Kind::bump)
        throw std::domain_error("poisson_complete: smooth window required");
    const u64 q = qm.value();
    const double x = double(q) * N;
    const double H = std::pow(x, delta) * double(q) / N;
    const double main = N / double(q) * w.integral();
    cdouble dual = 0;
    for (i64 h = 1; double(h) <= H; ++h) {
        cdouble term = w.fourier(double(h) * N / double(q)) *
                       unit_phase(double(a % q) * double(h) / double(q));
        dual += term + std::conj(term);  // h and -h
    }
    return {main, main + dual.real() * N / double(q), H};
}

double bound_ratio_prop35(double alpha, i64 mlo, i64 mlen, double beta, i64 nlo, i64 nlen,
                          u64 scalar, const Modulus& cm) {
    const u64 c = cm.value();
    const double M = double(mlen), N = double(nlen);
    if (M < 1 || N < 1 || M > 4.0 * double(c) || N > 4.0 * double(c))
        throw std::domain_error("bound_ratio_prop35: 1 <= M, N <= 4c required");
    WindowedSequence a = phase_sequence(alpha, mlo, mlen);
    WindowedSequence b = phase_sequence(beta, nlo, nlen);
    cdouble form = (M * N * double(cm.phi()) <= 4e6)
                       ? bilinear_form_direct(a, b, scalar, cm)
                       : bilinear_form_dual(a, b, scalar, cm);
    double T = t_value(ApproxTarget(M, N, alpha, beta)).value;
    u64 g = scalar % c == 0 ? c : std::gcd(scalar % c, c);
    double denom = double(c) * T + double(g) * M * N;
    return std::abs(form) / denom;
}

}  // namespace wb
