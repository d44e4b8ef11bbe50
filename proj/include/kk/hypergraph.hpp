#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kk/family.hpp"

namespace kk {

// Antichain of edges over [n] encoding a k-set family through its minimal
// non-faces. The edge vector order is the ordering used by downstream
// operations; helpers below produce comfortable / supercomfortable orders.
struct Hypergraph {
    int n = 0;
    std::vector<SetMask> edges;

    bool operator==(const Hypergraph&) const = default;
    std::size_t edge_count() const { return edges.size(); }
};

/// Position/delay pair of a ball contributed by one extension-tree leaf; the
/// leaf counts binom(n - pos - delay, k - delay) sets.
struct BallSpec {
    std::int64_t pos = 0;
    std::int64_t delay = 0;
    auto operator<=>(const BallSpec&) const = default;
};

using BallMultiset = std::map<BallSpec, std::uint64_t>;

struct BlockingSetFamily {
    int edge_index_1based = 0;
    std::vector<SetMask> sets;  // shortest first, then lexicographic
};

struct TreeNode {
    int parent = -1;             // -1 for the root
    bool leaf = false;
    int counter = 0;             // odd for internal vertices, even for leaves
    int block = -1;              // index into the blocking family (internal + its leaf)
    SetMask vertex_label = 0;    // internal: label from the construction rule
    SetMask edge_label = 0;      // label of the edge towards the parent
    SetMask ell_v = 0;           // leaves: union of vertex labels on the parent path
    SetMask ell_e = 0;           // leaves: union of edge labels on the parent path
};

struct ExtensionTree {
    int edge_index_1based = 0;
    SetMask edge = 0;
    std::vector<SetMask> blocking;
    std::vector<TreeNode> nodes;  // nodes[0] is the root when present
    std::vector<BallSpec> leaf_balls() const;
};

/// Minimal non-face encoding of a non-empty family (all levels k down to 1).
Hypergraph hypergraph_of_family(const KSetFamily& s, std::uint64_t budget = 20'000'000);

/// Inverse map: all k-subsets of [n] that contain no edge. `validate` checks
/// the antichain property and that the encoding round-trips.
KSetFamily family_of_hypergraph(const Hypergraph& h, int k, bool validate = true,
                                std::uint64_t budget = 20'000'000);

/// Keeps edges of size <= k_prime.
Hypergraph truncate(const Hypergraph& h, int k_prime);

/// Permutation of edge indices sorted by (size, colex of masks).
std::vector<int> comfortable_order(const Hypergraph& h);

Hypergraph apply_order(const Hypergraph& h, const std::vector<int>& order);

/// Comfortable ordering maximizing the longest prefix isomorphic to the
/// hypergraph of a colex initial segment; returns that prefix length sc.
std::pair<std::vector<int>, int> supercomfortable_order(const Hypergraph& h);

/// Minimal dominating sets of the first j-1 edges avoiding edge j (1-based,
/// with respect to `order`), shortest first then lexicographic.
BlockingSetFamily blocking_sets(const Hypergraph& h, const std::vector<int>& order, int j);

ExtensionTree build_extension_tree(const Hypergraph& h, const std::vector<int>& order, int j);

BallMultiset tree_ball_specs(const Hypergraph& h, const std::vector<int>& order);

/// Criterion: in a comfortable ordering every edge has exactly one blocking
/// set, of size index-1. Holds iff the encoded family is (isomorphic to) a
/// colex initial segment.
bool is_colex_hypergraph(const Hypergraph& h);

/// Hypergraph of the colex initial segment with counts[i-1] edges of size i.
Hypergraph colex_hypergraph(int n, const std::vector<long long>& counts);

/// Edge counts per size (1-based level -> count) implied by the k-binomial
/// decomposition of m; colex_hypergraph of these equals
/// hypergraph_of_family(initial_segment(n, k, m)).
std::vector<long long> colex_counts_for(int n, int k, const BigInt& m);

// Text format: header "n", then one edge per line as comma separated vertices.
std::string hypergraph_to_text(const Hypergraph& h);
Hypergraph hypergraph_from_text(const std::string& text);
Hypergraph read_hypergraph_file(const std::string& path);

std::string trees_to_json(const Hypergraph& h, const std::vector<int>& order, int k);

}  // namespace kk
