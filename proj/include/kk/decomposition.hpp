#pragma once

#include <vector>

#include "kk/bigint.hpp"

namespace kk {

// Binomial decomposition of an integer with respect to k, in one of three
// flavours: the strictly decreasing greedy one (length <= k), the full one
// (length exactly k, last two entries may coincide, all entries >= 1), and
// the shadow one attached to a specific set family (length exactly k,
// entries may be non-positive).
struct Decomposition {
    enum class Kind { KBinomial, Full, Shadow };

    Kind kind = Kind::KBinomial;
    int k = 0;
    std::vector<BigInt> coeffs;

    bool operator==(const Decomposition&) const = default;
};

/// Sum of binom(coeffs[i], k - i).
BigInt eval_decomposition(const Decomposition& d);

/// Checks the ordering/positivity invariants of the given kind.
bool decomposition_valid(const Decomposition& d);

/// Unique greedy representation m = sum binom(a_i, k-i), a_0 > a_1 > ... >= 1.
Decomposition k_binomial_decomposition(const BigInt& m, int k);

/// Length-k variant; equals the greedy one when that already has k terms.
Decomposition full_k_binomial_decomposition(const BigInt& m, int k);

/// Evaluates the k-binomial decomposition of m with denominators lowered by i;
/// lower bound for the size of the i-th iterated shadow of any m-set family.
BigInt kk_lower_bound(const BigInt& m, int k, int i);

std::string decomposition_kind_name(Decomposition::Kind kind);

}  // namespace kk
