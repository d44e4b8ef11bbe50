#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "kk/canonical.hpp"
#include "kk/decomposition.hpp"
#include "kk/hypergraph.hpp"

using kk::BallMultiset;
using kk::BallSpec;
using kk::Hypergraph;
using kk::KSetFamily;
using kk::SetMask;

namespace {

SetMask ms(std::initializer_list<int> elems) {
    std::vector<int> v(elems);
    return kk::mask_of(v, 63);
}

KSetFamily fam(int n, int k, std::initializer_list<SetMask> sets) {
    return kk::make_family(n, k, std::vector<SetMask>(sets));
}

std::vector<int> identity_order(const Hypergraph& h) {
    std::vector<int> order(h.edges.size());
    std::iota(order.begin(), order.end(), 0);
    return order;
}

std::vector<SetMask> sorted_edges(std::vector<SetMask> edges) {
    std::sort(edges.begin(), edges.end());
    return edges;
}

// The five-edge hypergraph over [10] with its published edge order.
Hypergraph example_hypergraph() {
    return Hypergraph{10,
                      {ms({6, 7}), ms({7, 8}), ms({1, 2}), ms({2, 3, 4}), ms({5, 9, 10})}};
}

}  // namespace

TEST_CASE("hypergraph of pinned families") {
    KSetFamily full = kk::initial_segment(5, 3, 10);
    CHECK(kk::hypergraph_of_family(full).edges.empty());

    KSetFamily two = fam(5, 3, {ms({1, 2, 3}), ms({1, 4, 5})});
    Hypergraph h = kk::hypergraph_of_family(two);
    CHECK(sorted_edges(h.edges) ==
          sorted_edges({ms({2, 4}), ms({2, 5}), ms({3, 4}), ms({3, 5})}));

    // non-support elements appear as 1-edges
    KSetFamily small = fam(6, 3, {ms({1, 2, 3})});
    Hypergraph hs = kk::hypergraph_of_family(small);
    bool has4 = false, has5 = false, has6 = false;
    for (SetMask e : hs.edges) {
        if (e == ms({4})) has4 = true;
        if (e == ms({5})) has5 = true;
        if (e == ms({6})) has6 = true;
    }
    CHECK(has4);
    CHECK(has5);
    CHECK(has6);
}

TEST_CASE("family of hypergraph and round trips") {
    Hypergraph none{5, {}};
    CHECK(kk::family_of_hypergraph(none, 3).size() == 10);

    Hypergraph h{5, {ms({2, 4}), ms({2, 5}), ms({3, 4}), ms({3, 5})}};
    KSetFamily back = kk::family_of_hypergraph(h, 3);
    CHECK(back == fam(5, 3, {ms({1, 2, 3}), ms({1, 4, 5})}));

    CHECK_THROWS_AS(kk::family_of_hypergraph(Hypergraph{5, {ms({1, 2, 3, 4})}}, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(kk::family_of_hypergraph(Hypergraph{5, {ms({1}), ms({1, 2})}}, 3),
                    kk::InvalidHypergraph);
    // all 2-sets over {1,2,3} containing {}: a star that is not minimal
    CHECK_THROWS_AS(
        kk::family_of_hypergraph(Hypergraph{4, {ms({1, 2}), ms({1, 3}), ms({1, 4})}}, 3),
        kk::InvalidHypergraph);

    // exhaustive round trip at n <= 5
    for (int n = 3; n <= 5; ++n)
        for (int k = 2; k <= 3 && k <= n; ++k) {
            auto universe = kk::all_ksubsets(n, k);
            for (std::uint64_t mask = 1; mask < (1ull << universe.size()); mask += 3) {
                std::vector<SetMask> sets;
                for (std::size_t i = 0; i < universe.size(); ++i)
                    if (mask & (1ull << i)) sets.push_back(universe[i]);
                KSetFamily f{n, k, sets};
                Hypergraph hf = kk::hypergraph_of_family(f);
                CHECK(kk::family_of_hypergraph(hf, k, false) == f);
            }
        }
}

TEST_CASE("truncation gives the hypergraph of the shadow") {
    Hypergraph ex = example_hypergraph();
    Hypergraph t2 = kk::truncate(ex, 2);
    CHECK(sorted_edges(t2.edges) == sorted_edges({ms({6, 7}), ms({7, 8}), ms({1, 2})}));
    CHECK(kk::truncate(ex, 3) == ex);

    for (int n = 4; n <= 5; ++n) {
        auto universe = kk::all_ksubsets(n, 3);
        for (std::uint64_t mask = 1; mask < (1ull << universe.size()); mask += 5) {
            std::vector<SetMask> sets;
            for (std::size_t i = 0; i < universe.size(); ++i)
                if (mask & (1ull << i)) sets.push_back(universe[i]);
            KSetFamily f{n, 3, sets};
            Hypergraph hf = kk::hypergraph_of_family(f);
            for (int i = 1; i <= 2; ++i) {
                Hypergraph hs = kk::hypergraph_of_family(kk::iterated_shadow(f, i));
                CHECK(sorted_edges(hs.edges) == sorted_edges(kk::truncate(hf, 3 - i).edges));
            }
        }
    }
}

TEST_CASE("blocking sets of the published example") {
    Hypergraph ex = example_hypergraph();
    auto order = identity_order(ex);

    auto bs = [&](int j) { return kk::blocking_sets(ex, order, j).sets; };
    CHECK(bs(1) == std::vector<SetMask>{0});
    CHECK(bs(2) == std::vector<SetMask>{ms({6})});
    CHECK(sorted_edges(bs(3)) == sorted_edges({ms({7}), ms({6, 8})}));
    CHECK(sorted_edges(bs(4)) == sorted_edges({ms({1, 7}), ms({1, 6, 8})}));
    CHECK(sorted_edges(bs(5)) ==
          sorted_edges({ms({2, 7}), ms({1, 3, 7}), ms({2, 6, 8}), ms({1, 3, 6, 8}),
                        ms({1, 4, 7}), ms({1, 4, 6, 8})}));

    // shortest-first lexicographic ordering inside each family
    auto b5 = bs(5);
    CHECK(b5.front() == ms({2, 7}));
    for (std::size_t i = 0; i + 1 < b5.size(); ++i)
        CHECK(kk::lex_vertex_less(b5[i], b5[i + 1]));
}

TEST_CASE("extension trees of the published example") {
    Hypergraph ex = example_hypergraph();
    auto order = identity_order(ex);

    // T of the first edge: a root and one leaf counting binom(10-2, k-2)
    kk::ExtensionTree t1 = kk::build_extension_tree(ex, order, 1);
    REQUIRE(t1.nodes.size() == 2);
    CHECK(t1.leaf_balls() == std::vector<BallSpec>{{0, 2}});

    kk::ExtensionTree t4 = kk::build_extension_tree(ex, order, 4);
    auto b4 = t4.leaf_balls();
    std::sort(b4.begin(), b4.end());
    CHECK(b4 == std::vector<BallSpec>{{2, 3}, {3, 4}});

    kk::ExtensionTree t5 = kk::build_extension_tree(ex, order, 5);
    auto b5 = t5.leaf_balls();
    std::sort(b5.begin(), b5.end());
    CHECK(b5 == std::vector<BallSpec>{{2, 3}, {3, 4}, {3, 4}, {3, 5}, {4, 5}, {4, 6}});

    // full ball multiset of the example
    BallMultiset balls = kk::tree_ball_specs(ex, order);
    BallMultiset expect;
    expect[{0, 2}] = 1;
    expect[{1, 2}] = 2;
    expect[{2, 3}] = 3;
    expect[{3, 4}] = 3;
    expect[{3, 5}] = 1;
    expect[{4, 5}] = 1;
    expect[{4, 6}] = 1;
    CHECK(balls == expect);

    // the leaf blocks partition the complement: sizes add up to binom(10,4)-|S|
    kk::KSetFamily fam10 = kk::family_of_hypergraph(ex, 4);
    kk::BigInt complement = 0;
    for (const auto& [spec, cnt] : balls)
        complement += kk::BigInt(cnt) * kk::binom(10 - spec.pos - spec.delay, 4 - spec.delay);
    CHECK(complement == kk::binom(10, 4) - fam10.size());
}

TEST_CASE("ball specs of the four-edge graph over five vertices") {
    Hypergraph h{5, {ms({2, 4}), ms({3, 4}), ms({2, 5}), ms({3, 5})}};
    auto order = identity_order(h);
    auto bs = [&](int j) { return kk::blocking_sets(h, order, j).sets; };
    CHECK(bs(1) == std::vector<SetMask>{0});
    CHECK(bs(2) == std::vector<SetMask>{ms({2})});
    CHECK(bs(3) == std::vector<SetMask>{ms({4})});
    CHECK(bs(4) == std::vector<SetMask>{ms({2, 4})});

    BallMultiset balls = kk::tree_ball_specs(h, order);
    BallMultiset expect;
    expect[{0, 2}] = 1;
    expect[{1, 2}] = 2;
    expect[{2, 2}] = 1;
    CHECK(balls == expect);
}

TEST_CASE("comfortable and supercomfortable orderings") {
    Hypergraph h{6, {ms({3, 4, 5}), ms({1, 2})}};
    auto order = kk::comfortable_order(h);
    CHECK(h.edges[order[0]] == ms({1, 2}));

    auto [sc_order, sc] = kk::supercomfortable_order(h);
    CHECK(sc == 1);

    Hypergraph single{6, {ms({2, 3})}};
    CHECK(kk::supercomfortable_order(single).second == 1);

    Hypergraph colex = kk::colex_hypergraph(10, {2, 1});
    CHECK(kk::supercomfortable_order(colex).second == 3);
}

TEST_CASE("colex hypergraph construction and recognition") {
    Hypergraph h = kk::colex_hypergraph(10, {2, 1});
    CHECK(sorted_edges(h.edges) == sorted_edges({ms({10}), ms({9}), ms({7, 8})}));

    CHECK(kk::colex_hypergraph(8, {0, 0, 0}).edges.empty());
    CHECK_THROWS_AS(kk::colex_hypergraph(4, {4, 1}), std::invalid_argument);

    CHECK(kk::is_colex_hypergraph(h));
    CHECK_FALSE(kk::is_colex_hypergraph(Hypergraph{6, {ms({1, 2}), ms({3, 4, 5})}}));
    CHECK_FALSE(
        kk::is_colex_hypergraph(Hypergraph{6, {ms({1, 2}), ms({1, 3}), ms({2, 3, 4})}}));

    // hypergraph of an initial segment equals the colex hypergraph built from
    // the counts implied by the decomposition
    for (int n = 4; n <= 6; ++n)
        for (int k = 2; k <= 4 && k <= n; ++k)
            for (std::uint64_t m = 1; m <= static_cast<std::uint64_t>(kk::binom(n, k)); ++m) {
                KSetFamily seg = kk::initial_segment(n, k, m);
                Hypergraph hs = kk::hypergraph_of_family(seg);
                Hypergraph hc = kk::colex_hypergraph(n, kk::colex_counts_for(n, k, m));
                CHECK(sorted_edges(hs.edges) == sorted_edges(hc.edges));
                CHECK(kk::is_colex_hypergraph(hs));
            }
}

TEST_CASE("hypergraph text format") {
    Hypergraph ex = example_hypergraph();
    Hypergraph back = kk::hypergraph_from_text(kk::hypergraph_to_text(ex));
    CHECK(back == ex);
    CHECK_THROWS_AS(kk::hypergraph_from_text("5\n1,9\n"), kk::ParseError);
}
