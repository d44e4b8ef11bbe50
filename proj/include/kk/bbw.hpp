#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "kk/decomposition.hpp"
#include "kk/hypergraph.hpp"

namespace kk {

// Bins-balls-wall configuration. Balls are multiplicities keyed by
// (position, delay); the wall advances by one per processed ball, so its
// value (and the multiplicities) need arbitrary precision in general.
// Positions stay machine integers behind a span guard.
template <class Count>
struct BasicBbwConfig {
    std::map<std::pair<std::int64_t, std::int64_t>, Count> balls;
    Count wall{0};
    std::int64_t iteration = 0;
};

using BbwConfig = BasicBbwConfig<BigInt>;
using LeanBbwConfig = BasicBbwConfig<std::int64_t>;

template <class Count>
struct BasicRunResult {
    std::vector<Count> trace;  // trace[j] = wall at the beginning of iteration j
    BasicBbwConfig<Count> final;
    bool abrupt = false;
};

using RunResult = BasicRunResult<BigInt>;

/// One full iteration; processes every ball whose delay does not exceed the
/// iteration counter (including descendants that become eligible mid-way),
/// ascending by (position, delay). Returns true if the process terminated
/// abruptly.
bool bbw_step(BbwConfig& config, std::uint64_t span_guard = 4'000'000);
bool bbw_step(LeanBbwConfig& config, std::uint64_t span_guard = 4'000'000);

RunResult bbw_run(BbwConfig config, std::int64_t iterations,
                  std::uint64_t span_guard = 4'000'000);
BasicRunResult<std::int64_t> bbw_run(LeanBbwConfig config, std::int64_t iterations,
                                     std::uint64_t span_guard = 4'000'000);

BbwConfig init_from_hypergraph(const Hypergraph& h, const std::vector<int>& order);
LeanBbwConfig lean_init_from_hypergraph(const Hypergraph& h, const std::vector<int>& order);

/// Shadow decomposition from the end-of-iteration wall positions w_1..w_k.
Decomposition beta_from_walls(int n, int k, const std::vector<BigInt>& end_walls);

/// End-of-iteration walls w_1..w_k of the process attached to a family.
std::vector<BigInt> family_walls(const KSetFamily& s);

/// Shadow decomposition through the process (hypergraph, trees, walls).
Decomposition shadow_decomposition_wall(const KSetFamily& s);

/// Shadow decomposition from the iterated shadow cardinalities.
Decomposition shadow_decomposition_direct(const KSetFamily& s);

/// First `count` hypotenusal numbers from the compressed occupancy process
/// (piecewise polynomial bins, exact).
std::vector<BigInt> hypotenusal_numbers(std::size_t count);

/// Hamilton numbers h[1..count] from their alternating binomial recurrence.
std::vector<BigInt> hamilton_numbers(std::size_t count);

/// Hypotenusal numbers through the Hamilton recurrence (differences).
std::vector<BigInt> hypotenusal_from_hamilton(std::size_t count);

/// Hypotenusal numbers read off the triangle table recurrence. Materializes
/// the table row by row, so it is gated to count <= 8 (the 9th value would
/// need ~10^11 rows).
std::vector<BigInt> hypotenusal_from_table(std::size_t count);

/// Growth facts for index i of the given sequence prefix: the quadratic lower
/// recurrence for i >= 2, the squared upper bound for i >= 4, and the double
/// exponential envelope for i >= 4.
bool verify_growth(const std::vector<BigInt>& seq, std::size_t i);

}  // namespace kk
