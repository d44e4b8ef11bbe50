#pragma once

#include <utility>

#include "kk/bbw.hpp"
#include "kk/family.hpp"
#include "kk/hypergraph.hpp"

namespace kk {

/// Shadow size meets the Kruskal-Katona lower bound.
bool is_extremal_direct(const KSetFamily& s);

/// Last shadow-decomposition coefficient is >= 1.
bool is_extremal_beta(const KSetFamily& s);

/// Wall after k iterations of the attached process is <= n-k.
bool is_extremal_wall(const KSetFamily& s);

/// Least j such that the j-th iterated shadow is an initial segment up to
/// isomorphism; always <= k-1.
int depth(const KSetFamily& s);

/// max(floor(log2(log2(n))) + 4, 5); upper bound for the depth of any
/// extremal family over [n].
int depth_bound(const BigInt& n);

/// Necessary gap conditions on the k-binomial decomposition of |S| when the
/// t-th shadow of the extremal family S is not yet an initial segment,
/// expressed through the hypotenusal numbers.
bool hn_necessary(const KSetFamily& s, int t);

/// True iff the initial colex segment is the unique extremal family of size
/// m in binom([n], k), up to isomorphism.
bool unique_colex_predicate(const BigInt& m, int k, int n);

struct EmbedResult {
    int r0 = 0;
    KSetFamily extended;
};

/// Smallest r restoring a positive last shadow coefficient, and the extremal
/// extension on [n + max(r0, 1)] built from the iterated shadows joined with
/// fresh vertices.
EmbedResult embed_extremal(const KSetFamily& s);

enum class Verdict { StaysExtremal, BreaksExtremal };

/// Whether adding the k-set s keeps an extremal family extremal.
Verdict add_set_verdict(const KSetFamily& fam, SetMask s);

/// Whether removing the member s keeps an extremal family extremal.
Verdict remove_set_verdict(const KSetFamily& fam, SetMask s);

/// True iff the family can be grown one k-set at a time to the full
/// binom([n], k) with every intermediate family extremal.
bool maximal_chain_up(const KSetFamily& s);

}  // namespace kk
