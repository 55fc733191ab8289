// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "wb/verify.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    wb::VerifyOptions opt;
    opt.harman_samples = 10000000;
    opt.seed = 1;
    wb::Verifier v(opt);

    static const char* kNames[11] = {
        "Harman pipeline G1..G6 bands (theta = 7/32)",
        "deficit 0.59097 and budget floor 0.257406",
        "omega_bar in [1.2995, 1.3005]; paper-pinned 1.30008 +- 5e-4",
        "thresholds 228/203, 139/114, 5/4 and the (64-14a)/93 identity",
        "Weil bound exhaustive, c <= 500",
        "Kloosterman-Fourier duality, 200 random instances",
        "hyperbola oracle (c <= 200) and CG ratio ceiling",
        "sieve table closed forms, asymptote, Richardson",
        "dispersion concentration and norm ceilings (H = L = 64)",
        "truncated Poisson vs direct summation, 100 instances",
        "GPF scan: Chebyshev identity and 1 mod 4 factors",
    };

    int failed = 0;
    auto t0 = clock::now();
    for (int k = 1; k <= 11; ++k) {
        auto tks = clock::now();
        std::vector<wb::CheckResult> rs = v.criterion(k);
        bool pass = true;
        for (const auto& r : rs) pass = pass && r.pass;
        double secs = std::chrono::duration<double>(clock::now() - tks).count();
        std::printf("[%s] criterion %2d: %s  (%.1fs)\n", pass ? "PASS" : "FAIL", k, kNames[k - 1],
                    secs);
        for (const auto& r : rs) {
            if (!r.pass || !r.detail.empty())
                std::printf("    %s %s%s%s\n", r.pass ? "ok  " : "FAIL", r.name.c_str(),
                            r.detail.empty() ? "" : " -- ", r.detail.c_str());
        }
        if (!pass) ++failed;
    }
    double total = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("%d/11 criteria passed in %.1fs\n", 11 - failed, total);
    return failed == 0 ? 0 : 1;
}
