#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wb/harman.hpp"
#include "wb/sieve.hpp"

namespace wb {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // observed constants, max ratios, etc.
};

struct VerifyOptions {
    std::uint64_t harman_samples = 10000000;
    std::uint64_t seed = 1;
    int threads = 1;
    bool quick = false;  // reduced scales for interactive runs
};

// Shared state (sieve table + Harman report) for the criterion runners.
class Verifier {
  public:
    explicit Verifier(VerifyOptions opt = {});

    const SieveTable& table();
    const HarmanReport& report();

    // acceptance criteria 1..11, each a list of pass/fail sub-checks
    std::vector<CheckResult> criterion(int k);

    // spec invariants not covered by a numbered criterion
    std::vector<CheckResult> properties();

  private:
    VerifyOptions opt_;
    std::unique_ptr<SieveTable> table_;
    std::unique_ptr<HarmanReport> report_;
};

}  // namespace wb
