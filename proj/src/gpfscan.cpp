#include "wb/gpfscan.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace wb {

ScanSummary scan(u64 lo, u64 hi, int threads) {
    if (hi > 10000000) throw std::domain_error("scan: hi <= 1e7 (factorization budget)");
    if (lo < 1) lo = 1;
    ScanSummary s{};
    s.lo = lo;
    s.hi = hi;
    if (hi < lo) return s;
    s.records.resize(size_t(hi - lo + 1));
    auto work = [&](u64 a, u64 b) {
        for (u64 n = a; n <= b; ++n) {
            u64 v = n * n + 1;
            Factorization f = factorize(v);
            ScanRecord& r = s.records[size_t(n - lo)];
            r.n = n;
            r.value = v;
            r.gpf = f.gpf;
            r.exponent_defined = n > 1;
            r.exponent = n > 1 ? std::log(double(f.gpf)) / std::log(double(n)) : 0.0;
        }
    };
    if (threads <= 1 || hi - lo < 1000) {
        work(lo, hi);
    } else {
        std::vector<std::future<void>> fs;
        u64 chunk = (hi - lo) / u64(threads) + 1;
        for (int t = 0; t < threads; ++t) {
            u64 a = lo + chunk * u64(t);
            if (a > hi) break;
            u64 b = std::min(hi, a + chunk - 1);
            fs.push_back(std::async(std::launch::async, work, a, b));
        }
        for (auto& f : fs) f.get();
    }
    const double cs[4] = {1.0, 1.1, 1.2, 1.3};
    u64 over[4] = {0, 0, 0, 0};
    for (const auto& r : s.records) {
        if (!r.exponent_defined) continue;
        ++s.counted;
        for (int i = 0; i < 4; ++i)
            if (r.exponent > cs[i]) ++over[i];
    }
    for (int i = 0; i < 4; ++i)
        s.frac[i] = s.counted ? double(over[i]) / double(s.counted) : 0.0;
    return s;
}

void scan_to_csv(const ScanSummary& s, std::ostream& os) {
    os << "n,value,gpf,exponent\n";
    char buf[128];
    for (const auto& r : s.records) {
        if (r.exponent_defined)
            std::snprintf(buf, sizeof buf, "%llu,%llu,%llu,%.10g\n",
                          (unsigned long long)r.n, (unsigned long long)r.value,
                          (unsigned long long)r.gpf, r.exponent);
        else
            std::snprintf(buf, sizeof buf, "%llu,%llu,%llu,\n", (unsigned long long)r.n,
                          (unsigned long long)r.value, (unsigned long long)r.gpf);
        os << buf;
    }
}

void scan_summary_json(const ScanSummary& s, std::ostream& os) {
    nlohmann::json j;
    j["lo"] = s.lo;
    j["hi"] = s.hi;
    j["counted"] = s.counted;
    j["frac_exponent_gt"] = {{"1.0", s.frac[0]}, {"1.1", s.frac[1]}, {"1.2", s.frac[2]},
                             {"1.3", s.frac[3]}};
    os << j.dump(2) << "\n";
}

ChebyshevResult chebyshev_identity(u64 x) {
    if (x > 100000) throw std::domain_error("chebyshev_identity: x <= 1e5 required");
    double lhs = 0, rhs = 0;
    for (u64 n = x + 1; n <= 2 * x; ++n) {
        u64 v = n * n + 1;
        Factorization f = factorize(v);
        for (auto [p, k] : f.factors) lhs += double(k) * std::log(double(p));
        rhs += std::log(double(v));
    }
    auto prim = [](double t) {
        return t * std::log(t * t + 1.0) - 2.0 * t + 2.0 * std::atan(t);
    };
    return {lhs, rhs, prim(2.0 * double(x)) - prim(double(x))};
}

AqCount count_Aq(const Modulus& q, double x, const SmoothWindow& w) {
    if (q.value() > 1000000) throw std::domain_error("count_Aq: q <= 1e6 required");
    if (x > 10000000) throw std::domain_error("count_Aq: x <= 1e7 required");
    double a_q = 0;
    for (u64 nu : sqrt_minus_one_mod(q)) a_q += progression_sum(w, x, q, nu);
    double main = x * w.integral() * double(rho(q)) / double(q.value());
    return {a_q, main};
}

}  // namespace wb
