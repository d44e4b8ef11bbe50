#pragma once

#include <cstdint>
#include <vector>

#include "kk/family.hpp"

namespace kk {

/// Lexicographically minimal relabeling of a set system under permutations of
/// its support (support is always mapped onto the lowest labels). The edge
/// list is returned sorted by (size, mask). Exponential in the worst case;
/// vertex-invariant refinement keeps the search tiny on real inputs, and a
/// budget guards the rest.
std::vector<SetMask> canonical_edges(const std::vector<SetMask>& edges, int n,
                                     std::uint64_t budget = 2'000'000);

bool are_isomorphic(const std::vector<SetMask>& a, const std::vector<SetMask>& b, int n);

}  // namespace kk
