#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kk/family.hpp"

namespace kk {

/// All size-m families over binom([n], k), colex-canonical member order.
std::vector<KSetFamily> enumerate_families(int n, int k, std::uint64_t m,
                                           std::uint64_t budget = 20'000'000);

/// All extremal size-m families, optionally deduplicated up to isomorphism.
std::vector<KSetFamily> enumerate_extremal(int n, int k, std::uint64_t m, bool up_to_iso,
                                           std::uint64_t budget = 20'000'000);

/// Labelled counts: all extremal families, and those whose shadow is the
/// labelled colex initial segment.
std::pair<BigInt, BigInt> count_extremal_labelled(int n, int k,
                                                  std::uint64_t budget = 20'000'000);

struct DepthCensus {
    std::map<int, std::uint64_t> extremal_by_depth;
    std::uint64_t extremal_total = 0;
    std::uint64_t m_values = 0;           // cardinalities admitting an extremal family
    std::uint64_t m_all_depth_le3 = 0;    // all extremal families of that size have depth <= 3
    std::uint64_t m_all_depth_le4 = 0;
};

DepthCensus depth_census(int n, int k, std::uint64_t budget = 20'000'000);

/// Brute-force: does some extremal family of size m have depth exactly t?
bool exists_extremal_with_depth(int n, int k, std::uint64_t m, int t,
                                std::uint64_t budget = 20'000'000);

struct CheckResult {
    std::string name;
    bool pass = true;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> counterexamples;  // family text, first few
    double seconds = 0.0;
};

struct VerifyReport {
    int n = 0;
    int k = 0;
    bool sampled = false;
    bool all_pass = true;
    double seconds = 0.0;
    std::vector<CheckResult> checks;
};

struct VerifyOptions {
    std::uint64_t budget = 20'000'000;  // max families enumerated per call
    int threads = 1;
    std::uint64_t seed = 12345;
    std::uint64_t sample = 20'000;      // families sampled when beyond budget
};

/// Runs every cross-module invariant over all (or sampled) non-empty
/// families of k-sets over [n].
VerifyReport verify_all(int n, int k, const VerifyOptions& options = {});

std::string report_to_json(const VerifyReport& report);

}  // namespace kk
