#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "kk/bigint.hpp"

namespace kk {

// A k-subset of [n] is a 64-bit mask, bit i-1 <=> element i. Colex order on
// k-sets coincides with numeric order of the masks, so families are kept as
// ascending mask vectors.
using SetMask = std::uint64_t;

constexpr int kMaxGroundSet = 63;

inline SetMask full_mask(int n) { return (n == 64) ? ~0ull : ((1ull << n) - 1); }

SetMask mask_of(std::span<const int> elements_1based, int n);
std::vector<int> elements_of(SetMask s);

/// -1, 0, +1 for x before / equal / after y in colex order.
int colex_compare(SetMask x, SetMask y);

/// Lexicographic order on sorted vertex lists (used for blocking sets).
bool lex_vertex_less(SetMask a, SetMask b);

struct KSetFamily {
    int n = 0;
    int k = 0;
    std::vector<SetMask> sets;  // ascending == colex order, duplicate free

    bool operator==(const KSetFamily&) const = default;
    std::size_t size() const { return sets.size(); }
    bool empty() const { return sets.empty(); }
    SetMask support() const;
};

/// Builds a family from masks; validates ground set, uniform popcount k,
/// sorts and rejects duplicates.
KSetFamily make_family(int n, int k, std::vector<SetMask> sets);

/// First m k-subsets of [n] in colex order.
KSetFamily initial_segment(int n, int k, const BigInt& m,
                           std::uint64_t budget = 20'000'000);

KSetFamily shadow(const KSetFamily& s);
KSetFamily iterated_shadow(const KSetFamily& s, int i);

bool is_initial_segment(const KSetFamily& s, bool up_to_iso);

/// Lexicographically minimal relabeling; equal canonical forms <=> isomorphic.
KSetFamily canonical_form(const KSetFamily& s);

// Text format: header "n k", then one set per line as comma separated
// 1-based elements.
std::string family_to_text(const KSetFamily& s);
KSetFamily family_from_text(const std::string& text);
KSetFamily read_family_file(const std::string& path);

/// Enumerates all k-subsets of [n] in colex order.
std::vector<SetMask> all_ksubsets(int n, int k, std::uint64_t budget = 20'000'000);

}  // namespace kk
