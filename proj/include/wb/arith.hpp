#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wb {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 mod);
u64 gcd_u64(u64 a, u64 b);
bool is_prime(u64 n);

// x^2 = a (mod p), p an odd prime, a a quadratic residue. Deterministic
// (nonresidue found by increment).
u64 tonelli_shanks(u64 a, u64 p);

u64 inverse_mod(u64 a, u64 m);

struct Factorization {
    u64 n = 1;
    std::vector<std::pair<u64, int>> factors;  // primes strictly increasing
    u64 gpf = 1;                               // gpf(1) = 1
};

// Trial division + Pollard-Brent rho; deterministic for the full 64-bit range.
Factorization factorize(u64 n);

class Modulus {
  public:
    explicit Modulus(u64 c) : fac_(check_and_factor(c)) {}

    u64 value() const { return fac_.n; }
    const std::vector<std::pair<u64, int>>& factors() const { return fac_.factors; }

    u64 phi() const;
    u64 tau() const;

  private:
    static Factorization check_and_factor(u64 c) {
        if (c == 0) throw std::domain_error("Modulus: c must be positive");
        return factorize(c);
    }
    Factorization fac_;
};

// S(m, n; c) = sum over units x mod c of e((m x + n xbar)/c). Real by the
// x <-> -x pairing; the imaginary accumulation must vanish to 1e-9 * phi(c).
double kloosterman_sum(i64 m, i64 n, const Modulus& c);

// All nu in [0, q) with nu^2 = -1 (mod q); Tonelli-Shanks mod p, Hensel
// lifting to p^k, CRT across prime powers. Sorted.
std::vector<u64> sqrt_minus_one_mod(const Modulus& q);

// #{nu : nu^2 = -1 mod q}; multiplicative, computed per prime power.
u64 rho(const Modulus& q);

struct WeilMargin {
    double abs_s;
    double bound;
};

// |S| together with tau(c) gcd(m,n,c)^{1/2} c^{1/2} (gcd(n,c) when m = 0,
// by the Ramanujan bound; gcd(0, c) = c throughout).
WeilMargin weil_bound_margin(i64 m, i64 n, const Modulus& c);

}  // namespace wb
