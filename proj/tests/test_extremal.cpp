#include "doctest.h"

#include "kk/extremal.hpp"
#include "kk/oracle.hpp"

using kk::BigInt;
using kk::KSetFamily;
using kk::SetMask;
using kk::Verdict;

namespace {

SetMask ms(std::initializer_list<int> elems) {
    std::vector<int> v(elems);
    return kk::mask_of(v, 63);
}

KSetFamily fam(int n, int k, std::initializer_list<SetMask> sets) {
    return kk::make_family(n, k, std::vector<SetMask>(sets));
}

template <class Fn>
void for_each_family(int n, int k, std::uint64_t stride, Fn&& fn) {
    auto universe = kk::all_ksubsets(n, k);
    for (std::uint64_t mask = 1; mask < (1ull << universe.size()); mask += stride) {
        std::vector<SetMask> sets;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (mask & (1ull << i)) sets.push_back(universe[i]);
        fn(KSetFamily{n, k, std::move(sets)});
    }
}

}  // namespace

TEST_CASE("three extremality tests on pinned families") {
    KSetFamily colex = kk::initial_segment(6, 3, 12);
    CHECK(kk::is_extremal_direct(colex));
    CHECK(kk::is_extremal_beta(colex));
    CHECK(kk::is_extremal_wall(colex));

    KSetFamily two = fam(5, 3, {ms({1, 2, 3}), ms({1, 4, 5})});
    CHECK_FALSE(kk::is_extremal_direct(two));
    CHECK_FALSE(kk::is_extremal_beta(two));
    CHECK_FALSE(kk::is_extremal_wall(two));

    // colex minus a few sets from the last block stays extremal
    KSetFamily perturbed = fam(6, 3, {ms({1, 2, 3}), ms({1, 2, 4}), ms({1, 3, 4}),
                                      ms({2, 3, 4}), ms({1, 2, 5}), ms({1, 4, 5})});
    // |S|=6=binom(4,3)+binom(2,2)+binom(1,1): removing inside the last block
    CHECK(kk::is_extremal_direct(perturbed) == kk::is_extremal_beta(perturbed));
}

TEST_CASE("three-way agreement over all families at n <= 5") {
    for (int n = 3; n <= 5; ++n)
        for (int k = 2; k <= 4 && k <= n; ++k)
            for_each_family(n, k, 1, [&](const KSetFamily& f) {
                bool d = kk::is_extremal_direct(f);
                CHECK(d == kk::is_extremal_beta(f));
                CHECK(d == kk::is_extremal_wall(f));
            });
}

TEST_CASE("depth of pinned families") {
    CHECK(kk::depth(kk::initial_segment(6, 3, 9)) == 0);
    CHECK(kk::depth(fam(6, 1, {ms({2}), ms({5})})) == 0);

    // hypergraph {(1,2),(3,4,5)} has depth k-2
    kk::Hypergraph h{8, {ms({1, 2}), ms({3, 4, 5})}};
    for (int k = 3; k <= 4; ++k) {
        KSetFamily f = kk::family_of_hypergraph(h, k);
        CHECK(kk::depth(f) == k - 2);
    }
}

TEST_CASE("depth bound values") {
    CHECK(kk::depth_bound(4) == 5);
    CHECK(kk::depth_bound(16) == 6);
    CHECK(kk::depth_bound(2) == 5);
    CHECK(kk::depth_bound(256) == 7);
    CHECK_THROWS_AS(kk::depth_bound(1), std::invalid_argument);
    for (int n = 3; n <= 5; ++n)
        for (int k = 2; k <= 3; ++k)
            for_each_family(n, k, 3, [&](const KSetFamily& f) {
                if (kk::is_extremal_direct(f)) CHECK(kk::depth(f) <= kk::depth_bound(f.n));
            });
}

TEST_CASE("hypotenusal gap conditions") {
    // the family of {(1,2),(3,4,5)} attains the bounds with equality
    kk::Hypergraph h{9, {ms({1, 2}), ms({3, 4, 5})}};
    KSetFamily f = kk::family_of_hypergraph(h, 4);
    REQUIRE(kk::is_extremal_direct(f));
    REQUIRE(kk::depth(f) == 2);
    CHECK(kk::hn_necessary(f, 1));
    auto d = kk::k_binomial_decomposition(BigInt(f.size()), 4);
    CHECK(d.coeffs[2] - d.coeffs[3] == 1);  // equality against a[0] = 1

    CHECK_THROWS_AS(kk::hn_necessary(f, 2), std::invalid_argument);  // shadow is initial
    CHECK_THROWS_AS(kk::hn_necessary(kk::initial_segment(6, 3, 9), 1),
                    std::invalid_argument);

    for (int n = 4; n <= 5; ++n)
        for_each_family(n, 3, 1, [&](const KSetFamily& f2) {
            if (!kk::is_extremal_direct(f2)) return;
            int dep = kk::depth(f2);
            for (int t = 1; t < dep; ++t) CHECK(kk::hn_necessary(f2, t));
        });
}

TEST_CASE("uniqueness predicate") {
    CHECK(kk::unique_colex_predicate(9, 3, 5));
    CHECK(kk::unique_colex_predicate(9, 3, 7));
    CHECK(kk::unique_colex_predicate(10, 3, 6));
    CHECK_FALSE(kk::unique_colex_predicate(12, 3, 6));
    CHECK_THROWS_AS(kk::unique_colex_predicate(40, 3, 5), std::invalid_argument);

    // exhaustive agreement with iso-class counts at a small scale
    for (int n = 4; n <= 5; ++n)
        for (int k = 2; k <= 3; ++k)
            for (std::uint64_t m = 1; m <= static_cast<std::uint64_t>(kk::binom(n, k)); ++m) {
                auto classes = kk::enumerate_extremal(n, k, m, true);
                CHECK((classes.size() == 1) == kk::unique_colex_predicate(BigInt(m), k, n));
            }
}

TEST_CASE("embedding into an extremal family") {
    KSetFamily two = fam(5, 3, {ms({1, 2, 3}), ms({1, 4, 5})});
    kk::EmbedResult er = kk::embed_extremal(two);
    CHECK(er.r0 == 4);
    CHECK(er.extended.n == 9);
    CHECK(kk::is_extremal_direct(er.extended));

    KSetFamily colex = kk::initial_segment(6, 3, 9);
    kk::EmbedResult er2 = kk::embed_extremal(colex);
    CHECK(er2.r0 == 0);
    CHECK(kk::is_extremal_direct(er2.extended));

    for (int n = 4; n <= 5; ++n)
        for (int k = 2; k <= 3; ++k)
            for_each_family(n, k, 5, [&](const KSetFamily& f) {
                kk::EmbedResult er3 = kk::embed_extremal(f);
                BigInt beta_last = kk::shadow_decomposition_direct(f).coeffs.back();
                if (beta_last < 1) CHECK(BigInt(er3.r0) == 1 - beta_last);
                CHECK(kk::is_extremal_direct(er3.extended));
            });
}

TEST_CASE("add and remove verdicts against recomputation") {
    for (int n = 4; n <= 5; ++n)
        for (int k = 2; k <= 3; ++k) {
            auto universe = kk::all_ksubsets(n, k);
            for_each_family(n, k, 1, [&](const KSetFamily& f) {
                if (!kk::is_extremal_direct(f)) return;
                for (SetMask s : universe) {
                    if (std::binary_search(f.sets.begin(), f.sets.end(), s)) continue;
                    std::vector<SetMask> grown = f.sets;
                    grown.push_back(s);
                    KSetFamily bigger = kk::make_family(n, k, grown);
                    bool truth = kk::is_extremal_direct(bigger);
                    CHECK((kk::add_set_verdict(f, s) == Verdict::StaysExtremal) == truth);
                }
                if (f.size() >= 2)
                    for (SetMask s : f.sets) {
                        std::vector<SetMask> rest;
                        for (SetMask x : f.sets)
                            if (x != s) rest.push_back(x);
                        KSetFamily smaller{n, k, rest};
                        bool truth = kk::is_extremal_direct(smaller);
                        CHECK((kk::remove_set_verdict(f, s) == Verdict::StaysExtremal) ==
                              truth);
                    }
            });
        }
}

TEST_CASE("upward chains of extremal families") {
    // a colex segment can always be grown to the full level
    KSetFamily colex = kk::initial_segment(5, 3, 7);
    CHECK(kk::maximal_chain_up(colex));

    // brute-force comparison at a small scale
    for (int n = 4; n <= 5; ++n) {
        const int k = 3;
        if (k > n) continue;
        auto universe = kk::all_ksubsets(n, k);
        const std::uint64_t all = (1ull << universe.size()) - 1;
        std::map<std::uint64_t, bool> memo;
        auto extremal_mask = [&](std::uint64_t m2) {
            std::vector<SetMask> sets;
            for (std::size_t i = 0; i < universe.size(); ++i)
                if (m2 & (1ull << i)) sets.push_back(universe[i]);
            return kk::is_extremal_direct(KSetFamily{n, k, std::move(sets)});
        };
        std::function<bool(std::uint64_t)> chain = [&](std::uint64_t m2) -> bool {
            auto it = memo.find(m2);
            if (it != memo.end()) return it->second;
            bool ok = m2 == all;
            std::uint64_t rest = all & ~m2;
            while (rest && !ok) {
                std::uint64_t bit = rest & -rest;
                rest &= rest - 1;
                if (extremal_mask(m2 | bit) && chain(m2 | bit)) ok = true;
            }
            memo[m2] = ok;
            return ok;
        };
        for_each_family(n, k, 1, [&](const KSetFamily& f) {
            if (!kk::is_extremal_direct(f)) return;
            std::uint64_t m2 = 0;
            for (SetMask s : f.sets) {
                std::size_t idx = std::lower_bound(universe.begin(), universe.end(), s) -
                                  universe.begin();
                m2 |= 1ull << idx;
            }
            CHECK(kk::maximal_chain_up(f) == chain(m2));
        });
    }
}
