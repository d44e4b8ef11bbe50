#include <algorithm>

#include "doctest.h"

#include "kk/canonical.hpp"
#include "kk/decomposition.hpp"
#include "kk/family.hpp"

using kk::BigInt;
using kk::KSetFamily;
using kk::SetMask;

namespace {

SetMask ms(std::initializer_list<int> elems, int n = 63) {
    std::vector<int> v(elems);
    return kk::mask_of(v, n);
}

KSetFamily fam(int n, int k, std::initializer_list<SetMask> sets) {
    return kk::make_family(n, k, std::vector<SetMask>(sets));
}

}  // namespace

TEST_CASE("colex compare follows the symmetric-difference rule") {
    CHECK(kk::colex_compare(ms({1, 2, 3}), ms({1, 2, 4})) < 0);
    CHECK(kk::colex_compare(ms({2, 3, 4}), ms({1, 2, 5})) < 0);
    CHECK(kk::colex_compare(ms({1, 2, 3}), ms({1, 2, 3})) == 0);
    CHECK(kk::colex_compare(ms({1, 2, 4}), ms({1, 2, 3})) > 0);
}

TEST_CASE("initial segments in colex order") {
    KSetFamily s = kk::initial_segment(5, 3, 10);
    CHECK(s.size() == 10);
    CHECK(s.sets == kk::all_ksubsets(5, 3));

    s = kk::initial_segment(6, 3, 1);
    CHECK(s.sets == std::vector<SetMask>{ms({1, 2, 3})});

    // block structure for m = 12, decomposition (5, 2, 1)
    s = kk::initial_segment(6, 3, 12);
    std::vector<SetMask> expect = kk::all_ksubsets(5, 3);
    expect.push_back(ms({1, 2, 6}));
    expect.push_back(ms({1, 3, 6}));
    std::sort(expect.begin(), expect.end());
    CHECK(s.sets == expect);

    CHECK_THROWS_AS(kk::initial_segment(5, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(kk::initial_segment(5, 3, 11), std::invalid_argument);
}

TEST_CASE("shadow of pinned families") {
    KSetFamily s = fam(3, 3, {ms({1, 2, 3})});
    KSetFamily d = kk::shadow(s);
    CHECK(d.sets == std::vector<SetMask>{ms({1, 2}), ms({1, 3}), ms({2, 3})});

    KSetFamily colex = kk::initial_segment(5, 3, 10);
    CHECK(kk::shadow(colex).sets == kk::all_ksubsets(5, 2));

    KSetFamily two = fam(5, 3, {ms({1, 2, 3}), ms({1, 4, 5})});
    KSetFamily sh = kk::shadow(two);
    CHECK(sh.size() == 6);
    std::vector<SetMask> expect{ms({1, 2}), ms({1, 3}), ms({2, 3}),
                                ms({1, 4}), ms({1, 5}), ms({4, 5})};
    std::sort(expect.begin(), expect.end());
    CHECK(sh.sets == expect);
}

TEST_CASE("iterated shadow") {
    KSetFamily two = fam(5, 3, {ms({1, 2, 3}), ms({1, 4, 5})});
    CHECK(kk::iterated_shadow(two, 0) == two);
    KSetFamily d2 = kk::iterated_shadow(two, 2);
    CHECK(d2.size() == 5);
    CHECK(d2.k == 1);
    CHECK_THROWS_AS(kk::iterated_shadow(two, 3), std::invalid_argument);

    // iterated shadow of an initial segment is the initial segment of the
    // bound cardinality
    for (int n = 4; n <= 6; ++n)
        for (int k = 2; k <= 4 && k <= n; ++k)
            for (std::uint64_t m = 1; m <= static_cast<std::uint64_t>(kk::binom(n, k)); ++m)
                for (int i = 1; i <= k - 1; ++i) {
                    KSetFamily seg = kk::initial_segment(n, k, m);
                    KSetFamily lhs = kk::iterated_shadow(seg, i);
                    KSetFamily rhs = kk::initial_segment(
                        n, k - i, kk::kk_lower_bound(BigInt(m), k, i));
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("shadow size respects the lower bound (exhaustive small)") {
    for (int n = 3; n <= 5; ++n)
        for (int k = 2; k <= 3 && k <= n; ++k) {
            auto universe = kk::all_ksubsets(n, k);
            const std::uint64_t total = 1ull << universe.size();
            for (std::uint64_t mask = 1; mask < total; ++mask) {
                std::vector<SetMask> sets;
                for (std::size_t i = 0; i < universe.size(); ++i)
                    if (mask & (1ull << i)) sets.push_back(universe[i]);
                KSetFamily f{n, k, sets};
                CHECK(BigInt(kk::shadow(f).size()) >=
                      kk::kk_lower_bound(BigInt(f.size()), k, 1));
            }
        }
}

TEST_CASE("iterated shadow composes") {
    for (int n = 4; n <= 6; ++n) {
        auto universe = kk::all_ksubsets(n, 4);
        if (universe.empty()) continue;
        for (std::uint64_t mask = 1; mask < (1ull << universe.size()); mask += 11) {
            std::vector<SetMask> sets;
            for (std::size_t i = 0; i < universe.size(); ++i)
                if (mask & (1ull << i)) sets.push_back(universe[i]);
            KSetFamily f{n, 4, sets};
            for (int i = 0; i <= 2; ++i)
                for (int j = 0; i + j <= 3; ++j)
                    CHECK(kk::iterated_shadow(f, i + j) ==
                          kk::iterated_shadow(kk::iterated_shadow(f, i), j));
        }
    }
}

TEST_CASE("is_initial_segment in both modes") {
    KSetFamily seg = kk::initial_segment(6, 3, 7);
    CHECK(kk::is_initial_segment(seg, false));
    CHECK(kk::is_initial_segment(seg, true));

    KSetFamily single = fam(4, 3, {ms({1, 2, 4})});
    CHECK_FALSE(kk::is_initial_segment(single, false));
    CHECK(kk::is_initial_segment(single, true));

    KSetFamily two = fam(5, 3, {ms({1, 2, 3}), ms({1, 4, 5})});
    CHECK_FALSE(kk::is_initial_segment(two, false));
    CHECK_FALSE(kk::is_initial_segment(two, true));
}

TEST_CASE("canonical form properties") {
    KSetFamily a = fam(5, 3, {ms({2, 3, 5})});
    KSetFamily b = fam(5, 3, {ms({1, 2, 4})});
    CHECK(kk::canonical_form(a) == kk::canonical_form(b));

    KSetFamily two = fam(5, 3, {ms({1, 2, 3}), ms({1, 4, 5})});
    KSetFamily relabeled = fam(5, 3, {ms({2, 4, 5}), ms({1, 3, 4})});  // 1->4, 2->5, 3->2, 4->1, 5->3
    CHECK(kk::canonical_form(two) == kk::canonical_form(relabeled));
    CHECK(kk::canonical_form(kk::canonical_form(two)) == kk::canonical_form(two));
}

TEST_CASE("family text format round trip") {
    KSetFamily two = fam(5, 3, {ms({1, 4, 5}), ms({1, 2, 3})});
    std::string text = kk::family_to_text(two);
    KSetFamily back = kk::family_from_text(text);
    CHECK(back == two);

    CHECK_THROWS_AS(kk::family_from_text("5 3\n1,2\n"), kk::ParseError);
    CHECK_THROWS_AS(kk::family_from_text("5 3\n1,2,9\n"), kk::ParseError);
    CHECK_THROWS_AS(kk::family_from_text("5 3\n1,2,3\n1,2,3\n"), kk::ParseError);
    CHECK_THROWS_AS(kk::family_from_text("nonsense\n"), kk::ParseError);
}
