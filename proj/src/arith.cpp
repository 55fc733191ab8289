#include "wb/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wb {

u64 powmod(u64 base, u64 exp, u64 mod) {
    if (mod == 1) return 0;
    u64 r = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // deterministic for n < 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

u64 pollard_brent(u64 n) {
    // n composite, odd, not a prime power of small primes
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        const u64 m = 128;
        u64 ys = y, r = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            d = 1;
            do {
                ys = f(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

Factorization factorize(u64 n) {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    Factorization f;
    f.n = n;
    if (n == 1) return f;
    std::vector<u64> primes;
    u64 m = n;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
        while (m % p == 0) {
            primes.push_back(p);
            m /= p;
        }
    }
    for (u64 p = 37; p * p <= m && p < 100000; p += 2) {
        while (m % p == 0) {
            primes.push_back(p);
            m /= p;
        }
    }
    factor_rec(m, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            f.factors.back().second++;
        else
            f.factors.push_back({p, 1});
    }
    f.gpf = f.factors.back().first;
    return f;
}

u64 Modulus::phi() const {
    u64 r = 1;
    for (auto [p, k] : fac_.factors) {
        r *= p - 1;
        for (int i = 1; i < k; ++i) r *= p;
    }
    return r;
}

u64 Modulus::tau() const {
    u64 r = 1;
    for (auto [p, k] : fac_.factors) r *= u64(k + 1);
    return r;
}

double kloosterman_sum(i64 m, i64 n, const Modulus& cm) {
    const u64 c = cm.value();
    if (c == 1) return 1.0;  // (Z/1Z)^x has the single element 0
    const u64 mr = u64(((m % i64(c)) + i64(c)) % i64(c));
    const u64 nr = u64(((n % i64(c)) + i64(c)) % i64(c));
    double re = 0, im = 0, cre = 0, cim = 0;  // Kahan
    const double w = 2.0 * M_PI / double(c);
    u64 units = 0;
    for (u64 x = 1; x < c; ++x) {
        if (std::gcd(x, c) != 1) continue;
        ++units;
        u64 xb = inverse_mod(x, c);
        u64 arg = (mulmod(mr, x, c) + mulmod(nr, xb, c)) % c;
        double t = w * double(arg);
        double yr = std::cos(t) - cre;
        double tr = re + yr;
        cre = (tr - re) - yr;
        re = tr;
        double yi = std::sin(t) - cim;
        double ti = im + yi;
        cim = (ti - im) - yi;
        im = ti;
    }
    if (std::abs(im) > 1e-9 * double(units) + 1e-12)
        throw std::logic_error("kloosterman_sum: imaginary part failed to cancel");
    return re;
}

u64 inverse_mod(u64 a, u64 m) {
    if (m == 1) return 0;
    i64 t = 0, newt = 1;
    i64 r = i64(m), newr = i64(a % m);
    while (newr != 0) {
        i64 q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw std::domain_error("inverse_mod: not invertible");
    return u64(t < 0 ? t + i64(m) : t);
}

u64 tonelli_shanks(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) throw std::domain_error("tonelli_shanks: nonresidue");
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) q >>= 1, ++s;
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = u64(s), cc = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        u64 b = cc;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        cc = mulmod(b, b, p);
        t = mulmod(t, cc, p);
        r = mulmod(r, b, p);
    }
    return r;
}

namespace {

// roots of x^2 = -1 mod p^k for odd p = 1 (mod 4), by Hensel lifting
std::vector<u64> roots_prime_power(u64 p, int k) {
    u64 r = tonelli_shanks(p - 1, p);
    u64 pk = p;
    for (int j = 1; j < k; ++j) {
        u64 next = pk * p;
        // r' = r - (r^2+1) * inv(2r)  (mod p^{j+1})
        u64 r2p1 = (mulmod(r, r, next) + 1) % next;
        u64 inv2r = inverse_mod(mulmod(2 % next, r, next), next);
        u64 corr = mulmod(r2p1, inv2r, next);
        r = (r + next - corr) % next;
        pk = next;
    }
    u64 other = pk - r;
    if (r > other) std::swap(r, other);
    return {r, other};
}

}  // namespace

std::vector<u64> sqrt_minus_one_mod(const Modulus& q) {
    const u64 n = q.value();
    if (n == 1) return {0};
    std::vector<u64> res = {0};
    u64 mod_so_far = 1;
    for (auto [p, k] : q.factors()) {
        std::vector<u64> local;
        if (p == 2) {
            if (k >= 2) return {};
            local = {1};
        } else if (p % 4 == 3) {
            return {};
        } else {
            local = roots_prime_power(p, k);
        }
        u64 pk = 1;
        for (int j = 0; j < k; ++j) pk *= p;
        // CRT: combine res (mod mod_so_far) with local (mod pk)
        std::vector<u64> next;
        u64 newmod = mod_so_far * pk;
        u64 m1_inv = inverse_mod(mod_so_far % pk, pk);
        for (u64 a : res)
            for (u64 b : local) {
                u64 diff = (b + pk - a % pk) % pk;
                u64 t = mulmod(diff, m1_inv, pk);
                next.push_back(a + mod_so_far * t);
            }
        res = std::move(next);
        mod_so_far = newmod;
    }
    std::sort(res.begin(), res.end());
    return res;
}

u64 rho(const Modulus& q) {
    if (q.value() == 1) return 1;
    u64 count = 1;
    for (auto [p, k] : q.factors()) {
        if (p == 2) {
            if (k >= 2) return 0;
        } else if (p % 4 == 3) {
            return 0;
        } else {
            count *= 2;
        }
    }
    return count;
}

WeilMargin weil_bound_margin(i64 m, i64 n, const Modulus& c) {
    const u64 cv = c.value();
    const u64 mr = u64(((m % i64(cv)) + i64(cv)) % i64(cv));
    const u64 nr = u64(((n % i64(cv)) + i64(cv)) % i64(cv));
    double s = std::abs(kloosterman_sum(m, n, c));
    auto g = [cv](u64 a) { return a == 0 ? cv : std::gcd(a, cv); };
    double bound;
    if (mr == 0)
        bound = double(g(nr));
    else if (nr == 0)
        bound = double(g(mr));
    else {
        u64 g3 = std::gcd(std::gcd(mr, nr), cv);
        bound = double(c.tau()) * std::sqrt(double(g3)) * std::sqrt(double(cv));
    }
    return {s, bound};
}

}  // namespace wb
