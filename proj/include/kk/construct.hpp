#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kk/bbw.hpp"
#include "kk/family.hpp"
#include "kk/hypergraph.hpp"

namespace kk {

// Near-colex hypergraph constructions. `counts[i-1]` is the number of edges
// of size i; the modification happens at level j+1 (the encoded family then
// has depth k-j when the counts make the construction non-degenerate).
Hypergraph construction_B(int j, const std::vector<long long>& counts, int n);
Hypergraph construction_A(int j, const std::vector<long long>& counts, int n);
Hypergraph construction_A_prime(int j, long long r, const std::vector<long long>& counts, int n);
Hypergraph construction_B_prime(int j, long long r, const std::vector<long long>& counts, int n);

struct ConstructionId {
    char tag = 'C';  // 'C' colex, 'A', 'B', 'a' = A', 'b' = B'
    int j = 0;
    long long r = 0;  // primed variants only
    std::vector<long long> counts;
};

/// Identifies which construction produced H (by rebuilding candidates).
std::optional<ConstructionId> recognize_construction(const Hypergraph& h);

/// Vertex lists of the construction's edges, usable for any ground set size
/// (mask-based Hypergraph objects stop at 63 vertices).
std::vector<std::vector<long long>> construction_vertex_edges(const ConstructionId& id, int n);

/// Closed-form ball positions/delays of a recognized construction; throws
/// std::invalid_argument when H is not one.
BallMultiset ball_profile_of_construction(const Hypergraph& h);

/// Same closed form, straight from the identification.
BallMultiset construction_ball_profile(const ConstructionId& id, int n);

struct DecideResult {
    bool found = false;
    char construction = '?';             // 'C', 'A' or 'B'
    int j = 0;                           // modification level is j+1 (unused for 'C')
    int n = 0;
    int k = 0;
    std::vector<long long> counts;       // per-size edge counts
    Hypergraph hypergraph;               // materialized only when n <= 63
    bool hypergraph_materialized = false;

    std::vector<std::vector<long long>> edge_lists() const;

    /// Materializes the family; feasible only at desk scale.
    KSetFamily family(std::uint64_t budget = 20'000'000) const;
};

/// Does an extremal family of size m over [n] with depth exactly t exist?
/// Builds one when it does. Runs in O(n k) ball-arithmetic steps.
/// `only` restricts the attempted constructions ('\0' tries A then B).
std::optional<DecideResult> decide_extremal_with_depth(int n, int k, const BigInt& m, int t,
                                                       char only = '\0');

}  // namespace kk
