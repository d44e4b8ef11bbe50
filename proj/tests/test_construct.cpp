#include <chrono>
#include <numeric>

#include "doctest.h"

#include "kk/construct.hpp"
#include "kk/extremal.hpp"
#include "kk/oracle.hpp"

using kk::BigInt;
using kk::Hypergraph;
using kk::KSetFamily;
using kk::SetMask;

namespace {

std::vector<int> identity_order(const Hypergraph& h) {
    std::vector<int> order(h.edges.size());
    std::iota(order.begin(), order.end(), 0);
    return order;
}

// every vector of counts with the right support for a level-(j+1) modification
std::vector<std::vector<long long>> small_count_vectors(int k, long long per_level) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(k, 0);
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == k) {
            out.push_back(cur);
            return;
        }
        for (long long c = 0; c <= per_level; ++c) {
            cur[idx] = c;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

TEST_CASE("construction B pinned instance") {
    // counts (0,0,2) on [5]: colex edges {3,4,5},{2,4,5}; B swaps the spine
    Hypergraph b = kk::construction_B(2, {0, 0, 2}, 5);
    std::vector<SetMask> expect = {kk::mask_of(std::vector<int>{3, 4, 5}, 5),
                                   kk::mask_of(std::vector<int>{1, 2, 5}, 5)};
    CHECK(b.edges == expect);

    KSetFamily fam = kk::family_of_hypergraph(b, 3);
    CHECK(fam.size() == 8);
    CHECK(kk::is_extremal_direct(fam));
    CHECK(kk::depth(fam) == 1);  // depth k - j
    CHECK_FALSE(kk::is_colex_hypergraph(b));
    CHECK(kk::is_colex_hypergraph(kk::truncate(b, 2)));
}

TEST_CASE("constructions are never colex and break exactly at level j+1") {
    for (int n = 6; n <= 7; ++n)
        for (const auto& counts : small_count_vectors(3, 2)) {
            const int k = 3;
            // skip count vectors that do not even encode a family as a plain
            // colex hypergraph at this k (non-minimal or empty encodings)
            try {
                kk::family_of_hypergraph(kk::colex_hypergraph(n, counts), k);
            } catch (const std::exception&) {
                continue;
            }
            for (int j = 1; j <= 2; ++j) {
                if (static_cast<int>(counts.size()) < j + 1 || counts[j] < 1) continue;
                for (bool a_kind : {false, true}) {
                    Hypergraph h;
                    try {
                        h = a_kind ? kk::construction_A(j, counts, n)
                                   : kk::construction_B(j, counts, n);
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    // encodes a family, truncation at j is colex
                    KSetFamily fam(kk::family_of_hypergraph(h, k));
                    CHECK(kk::is_colex_hypergraph(kk::truncate(h, j)));
                    bool breaking = !kk::is_colex_hypergraph(kk::truncate(h, j + 1));
                    // A degenerates to a colex when only two edges share the spine
                    long long suffix = 0;
                    for (int s = j; s >= 1; --s) {
                        suffix += counts[s];
                        if (suffix >= 2) break;
                    }
                    if (!a_kind || suffix >= 3) {
                        CHECK(breaking);
                        CHECK(kk::depth(fam) == k - j);
                        CHECK(kk::is_extremal_direct(fam) ==
                              (kk::shadow_decomposition_direct(fam).coeffs.back() >= 1));
                    }
                }
            }
        }
}

TEST_CASE("primed constructions coincide with the plain ones at maximal r") {
    std::vector<long long> counts{1, 2, 2};
    const int n = 9, j = 2;
    long long hi = counts[0] + counts[1] + counts[2];
    CHECK(kk::construction_B_prime(j, hi - 1, counts, n) == kk::construction_B(j, counts, n));
    CHECK(kk::construction_A_prime(j, hi - 1, counts, n) == kk::construction_A(j, counts, n));
    CHECK(kk::construction_B_prime(j, hi - 2, counts, n) != kk::construction_B(j, counts, n));
    CHECK_THROWS_AS(kk::construction_B_prime(j, counts[0] + counts[1] - 1, counts, n),
                    std::invalid_argument);
}

TEST_CASE("closed-form ball profiles match the generic tree pipeline") {
    for (int n = 6; n <= 8; ++n)
        for (const auto& counts : small_count_vectors(3, 2)) {
            // the plain colex
            try {
                Hypergraph c = kk::colex_hypergraph(n, counts);
                auto profile = kk::ball_profile_of_construction(c);
                CHECK(profile == kk::tree_ball_specs(c, identity_order(c)));
                // one ball per edge at position index-1
                std::size_t idx = 0;
                for (const auto& [spec, cnt] : profile)
                    for (std::uint64_t c2 = 0; c2 < cnt; ++c2) {
                        CHECK(spec.pos == static_cast<std::int64_t>(idx));
                        ++idx;
                    }
            } catch (const std::invalid_argument&) {
            }
            for (int j = 1; j <= 2; ++j) {
                if (static_cast<int>(counts.size()) < j + 1 || counts[j] < 1) continue;
                long long lo = 0;
                for (int i = 0; i < j; ++i) lo += counts[i];
                long long hi = lo + counts[j];
                for (long long r1 = lo + 1; r1 <= hi; ++r1)
                    for (bool a_kind : {false, true}) {
                        Hypergraph h;
                        try {
                            h = a_kind ? kk::construction_A_prime(j, r1 - 1, counts, n)
                                       : kk::construction_B_prime(j, r1 - 1, counts, n);
                        } catch (const std::invalid_argument&) {
                            continue;
                        }
                        auto id = kk::recognize_construction(h);
                        REQUIRE(id.has_value());
                        auto profile = kk::construction_ball_profile(*id, n);
                        CHECK(profile == kk::tree_ball_specs(h, identity_order(h)));
                    }
            }
        }
}

TEST_CASE("recognition distinguishes the construction kinds") {
    std::vector<long long> counts{0, 2, 2};
    Hypergraph b = kk::construction_B(2, counts, 8);
    auto idb = kk::recognize_construction(b);
    REQUIRE(idb.has_value());
    CHECK(idb->tag == 'B');
    Hypergraph a = kk::construction_A(2, counts, 8);
    auto ida = kk::recognize_construction(a);
    REQUIRE(ida.has_value());
    CHECK(ida->tag == 'A');
    Hypergraph c = kk::colex_hypergraph(8, counts);
    auto idc = kk::recognize_construction(c);
    REQUIRE(idc.has_value());
    CHECK(idc->tag == 'C');
    CHECK_FALSE(kk::recognize_construction(
                    Hypergraph{6, {kk::mask_of(std::vector<int>{1, 2}, 6),
                                   kk::mask_of(std::vector<int>{3, 4}, 6)}})
                    .has_value());
}

TEST_CASE("decide agrees with brute force at desk scale") {
    for (int n = 4; n <= 5; ++n)
        for (int k = 2; k <= std::min(n, 4); ++k) {
            std::uint64_t total = static_cast<std::uint64_t>(kk::binom(n, k));
            for (std::uint64_t m = 1; m <= total; ++m)
                for (int t = 0; t <= k - 1; ++t) {
                    bool brute = kk::exists_extremal_with_depth(n, k, m, t);
                    auto res = kk::decide_extremal_with_depth(n, k, BigInt(m), t);
                    CHECK(res.has_value() == brute);
                    if (res) {
                        KSetFamily fam = res->family();
                        CHECK(fam.size() == m);
                        CHECK(kk::is_extremal_direct(fam));
                        CHECK(kk::depth(fam) == t);
                    }
                }
        }
}

TEST_CASE("decide pinned cases") {
    // short decompositions force the colex, so no deeper family exists
    CHECK_FALSE(kk::decide_extremal_with_depth(6, 3, 10, 1).has_value());
    // depth 0 always exists
    auto res0 = kk::decide_extremal_with_depth(6, 3, 10, 0);
    REQUIRE(res0.has_value());
    CHECK(res0->construction == 'C');
    // the {(1,2),(3,4,5)}-type family: k=3, depth 1 at suitable size
    auto res1 = kk::decide_extremal_with_depth(5, 3, 8, 1);
    REQUIRE(res1.has_value());
    KSetFamily fam = res1->family();
    CHECK(kk::is_extremal_direct(fam));
    CHECK(kk::depth(fam) == 1);
}

TEST_CASE("decide smoke run at n = 10^4") {
    const int n = 10'000, k = 20;
    // a size with a full-length decomposition and room at every level
    kk::Decomposition d;
    d.kind = kk::Decomposition::Kind::KBinomial;
    d.k = k;
    for (int i = 0; i < k; ++i) d.coeffs.push_back(n - 3 * i - 5);
    BigInt m = kk::eval_decomposition(d);
    auto start = std::chrono::steady_clock::now();
    auto res = kk::decide_extremal_with_depth(n, k, m, 3);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(res.has_value());
    CHECK(secs < 10.0);
    if (res) {
        CHECK_FALSE(res->hypergraph_materialized);
        auto edges = res->edge_lists();
        CHECK(std::accumulate(res->counts.begin(), res->counts.end(), 0ll) ==
              static_cast<long long>(edges.size()));
        // every vertex stays inside the ground set
        for (const auto& e : edges)
            for (long long v : e) {
                CHECK(v >= 1);
                CHECK(v <= n);
            }
    }
}
