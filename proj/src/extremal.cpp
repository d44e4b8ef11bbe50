#include "kk/extremal.hpp"

#include <algorithm>
#include <bit>

namespace kk {

bool is_extremal_direct(const KSetFamily& s) {
    if (s.empty()) throw std::invalid_argument("empty family");
    if (s.k == 1) return true;  // shadow is the single empty set, bound is 1
    return BigInt(shadow(s).size()) == kk_lower_bound(BigInt(s.size()), s.k, 1);
}

bool is_extremal_beta(const KSetFamily& s) {
    if (s.empty()) throw std::invalid_argument("empty family");
    return shadow_decomposition_direct(s).coeffs.back() >= 1;
}

bool is_extremal_wall(const KSetFamily& s) {
    if (s.empty()) throw std::invalid_argument("empty family");
    std::vector<BigInt> walls = family_walls(s);
    return walls[s.k - 1] <= s.n - s.k;
}

int depth(const KSetFamily& s) {
    if (s.empty()) throw std::invalid_argument("empty family");
    KSetFamily cur = s;
    for (int j = 0; j < s.k; ++j) {
        if (is_initial_segment(cur, /*up_to_iso=*/true)) return j;
        cur = shadow(cur);
    }
    throw std::logic_error("depth: singleton level must be an initial segment");
}

int depth_bound(const BigInt& n) {
    if (n < 2) throw std::invalid_argument("depth_bound needs n >= 2");
    int inner = ilog2(n);
    int value = (inner >= 1 ? ilog2(BigInt(inner)) : 0) + 4;
    return std::max(value, 5);
}

bool hn_necessary(const KSetFamily& s, int t) {
    if (t < 0) throw std::invalid_argument("hn_necessary: t must be >= 0");
    if (!is_extremal_direct(s)) throw std::invalid_argument("hn_necessary: family not extremal");
    if (t > s.k - 1 || is_initial_segment(iterated_shadow(s, t), true))
        throw std::invalid_argument("hn_necessary: t-th shadow is an initial segment");
    Decomposition d = k_binomial_decomposition(BigInt(s.size()), s.k);
    if (static_cast<int>(d.coeffs.size()) != s.k)
        throw std::invalid_argument("hn_necessary: decomposition shorter than k");
    const int k = s.k;
    std::vector<BigInt> hyp = hypotenusal_numbers(std::max(t, 1));
    auto hyp_at = [&](int idx) { return idx < 0 ? BigInt(1) : hyp[idx]; };
    auto coeff = [&](int idx) { return d.coeffs[idx]; };
    for (int i = 1; i < t; ++i)
        if (coeff(k - 2 - t + i) - coeff(k - 1 - t + i) < hyp_at(i - 1) + 1) return false;
    return coeff(k - 2) - coeff(k - 1) >= hyp_at(t - 1);
}

bool unique_colex_predicate(const BigInt& m, int k, int n) {
    if (m < 1 || m > binom(n, k)) throw std::invalid_argument("m out of range");
    Decomposition d = k_binomial_decomposition(m, k);
    if (static_cast<int>(d.coeffs.size()) < k) return true;
    // m = binom(q, k) - 1 <=> the coefficients are the run q-1, q-2, ..., q-k
    for (int i = 0; i + 1 < k; ++i)
        if (d.coeffs[i] - d.coeffs[i + 1] != 1) return false;
    return d.coeffs[0] + 1 <= n;  // q <= n (q > k always holds)
}

EmbedResult embed_extremal(const KSetFamily& s) {
    if (s.empty()) throw std::invalid_argument("empty family");
    if (s.k < 2) throw std::invalid_argument("embed_extremal needs k >= 2");
    Decomposition beta = shadow_decomposition_direct(s);
    BigInt deficit = 1 - beta.coeffs.back();
    if (deficit > kMaxGroundSet) throw CapacityError("embedding exceeds the 63-vertex cap");
    int r0 = deficit > 0 ? static_cast<int>(deficit) : 0;
    int r = std::max(r0, 1);
    if (s.n + r > kMaxGroundSet) throw CapacityError("embedding exceeds the 63-vertex cap");
    const int n2 = s.n + r;
    // Union of the iterated shadows joined with fresh vertices, from the
    // family itself (i = 0) down to the all-fresh sets (i = k). This is
    // exactly the family whose hypergraph is the old one plus r isolated
    // vertices, so the whole shadow decomposition shifts up by r.
    std::vector<SetMask> out;
    KSetFamily level = s;
    for (int i = 0; i <= s.k; ++i) {
        if (i > 0 && i < s.k) level = shadow(level);
        const auto& members =
            (i == s.k) ? std::vector<SetMask>{0} : level.sets;
        for (SetMask fresh : all_ksubsets(r, i))
            for (SetMask x : members) out.push_back(x | (fresh << s.n));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return EmbedResult{r0, KSetFamily{n2, s.k, std::move(out)}};
}

Verdict add_set_verdict(const KSetFamily& fam, SetMask s) {
    if (!is_extremal_direct(fam)) throw std::invalid_argument("add_set_verdict: not extremal");
    if (std::popcount(s) != fam.k || (s & ~full_mask(fam.n)))
        throw std::invalid_argument("add_set_verdict: bad set");
    if (std::binary_search(fam.sets.begin(), fam.sets.end(), s))
        throw std::invalid_argument("add_set_verdict: set already present");
    Hypergraph h = hypergraph_of_family(fam);
    std::vector<SetMask> contained;
    int max_size = 0;
    bool has_k_edge = false;
    for (SetMask e : h.edges) {
        max_size = std::max(max_size, std::popcount(e));
        if (std::popcount(e) == fam.k) has_k_edge = true;
        if ((s & e) == e) contained.push_back(e);
    }
    for (SetMask e : contained)
        if (std::popcount(e) == fam.k) return Verdict::StaysExtremal;  // e == s
    if (contained.size() != 1) return Verdict::BreaksExtremal;
    if (has_k_edge || std::popcount(contained[0]) != max_size) return Verdict::BreaksExtremal;
    if (!is_initial_segment(fam, true)) return Verdict::BreaksExtremal;
    std::vector<SetMask> grown = fam.sets;
    grown.push_back(s);
    KSetFamily bigger = make_family(fam.n, fam.k, std::move(grown));
    if (!is_initial_segment(bigger, true)) return Verdict::BreaksExtremal;
    return Verdict::StaysExtremal;
}

Verdict remove_set_verdict(const KSetFamily& fam, SetMask s) {
    if (!is_extremal_direct(fam)) throw std::invalid_argument("remove_set_verdict: not extremal");
    if (!std::binary_search(fam.sets.begin(), fam.sets.end(), s))
        throw std::invalid_argument("remove_set_verdict: set not present");
    if (fam.size() == 1) throw std::invalid_argument("remove_set_verdict: family of one set");
    // Removal keeps extremality exactly when the removed set owns as many
    // private shadow elements as the bound gives up.
    BigInt drop = kk_lower_bound(BigInt(fam.size()), fam.k, 1) -
                  kk_lower_bound(BigInt(fam.size()) - 1, fam.k, 1);
    std::vector<SetMask> rest;
    rest.reserve(fam.sets.size() - 1);
    for (SetMask x : fam.sets)
        if (x != s) rest.push_back(x);
    int private_count = 0;
    SetMask bits = s;
    while (bits) {
        SetMask b = bits & -bits;
        bits &= bits - 1;
        SetMask sub = s ^ b;
        bool covered = false;
        for (SetMask y : rest)
            if ((sub & y) == sub) {
                covered = true;
                break;
            }
        if (!covered) ++private_count;
    }
    return BigInt(private_count) == drop ? Verdict::StaysExtremal : Verdict::BreaksExtremal;
}

bool maximal_chain_up(const KSetFamily& s) {
    if (!is_extremal_direct(s)) throw std::invalid_argument("maximal_chain_up: not extremal");
    Hypergraph h = hypergraph_of_family(s);
    return is_colex_hypergraph(truncate(h, s.k - 1));
}

}  // namespace kk
