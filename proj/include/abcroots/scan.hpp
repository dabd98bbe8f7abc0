#pragma once

#include "abcroots/cf.hpp"
#include "abcroots/factor.hpp"
#include "abcroots/records.hpp"

namespace abcroots {

struct ScanOptions {
    unsigned s = 3;
    long k_min = 2;
    long k_max = 2;
    int depth = 10;
    int jobs = 1;
    ExpandOptions expand{};
    FactorBudget budget{};
};

// Records for every resulting equation of every admissible k in range,
// sorted by (k, n).  Keys in `skip` are omitted (resume support).  Perfect
// s-th powers are skipped silently; factorization-budget misses produce a
// flagged record instead of aborting the scan.
std::vector<ScanRecord> run_scan(const ScanOptions& options,
                                 const std::set<std::tuple<long, int, int>>& skip = {});

} // namespace abcroots
