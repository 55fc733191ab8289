#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wb/arith.hpp"
#include "wb/bilinear.hpp"

namespace wb {

struct ScanRecord {
    u64 n;
    u64 value;     // n^2 + 1
    u64 gpf;
    double exponent;  // log(gpf)/log(n); undefined (0) for n = 1
    bool exponent_defined;
};

struct ScanSummary {
    u64 lo, hi;
    std::vector<ScanRecord> records;
    u64 counted;  // records with a defined exponent
    // fraction with exponent > c for c in {1.0, 1.1, 1.2, 1.3}
    double frac[4];
};

// Factorize n^2+1 for n in [lo, hi]; hi <= 1e7 (64-bit factorization budget).
ScanSummary scan(u64 lo, u64 hi, int threads = 1);

void scan_to_csv(const ScanSummary& s, std::ostream& os);
void scan_summary_json(const ScanSummary& s, std::ostream& os);

struct ChebyshevResult {
    double lhs;        // sum_{x<n<=2x} sum_{d | n^2+1} Lambda(d)
    double rhs;        // sum_{x<n<=2x} log(n^2+1)
    double integral;   // int_x^{2x} log(t^2+1) dt, closed form
};

// Exact identity lhs = rhs (factorization-correctness oracle); x <= 1e5.
ChebyshevResult chebyshev_identity(u64 x);

struct AqCount {
    double a_q;        // sum over roots of -1 mod q of sum_{n = nu (q)} w(n/x)
    double main_term;  // x * int(w) * rho(q) / q
};

// Progression-stepping count of |A_q|; q <= 1e6, x <= 1e7.
AqCount count_Aq(const Modulus& q, double x, const SmoothWindow& w);

}  // namespace wb
