#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "permstat/enumeration.hpp"
#include "permstat/permutation.hpp"
#include "permstat/stats.hpp"

using namespace permstat;

namespace {
const Permutation kExample = Permutation::parse("4,7,3,6,2,1,5");
}

TEST_CASE("Permutation parsing and validation") {
    CHECK(kExample.n() == 7);
    CHECK(kExample(2) == 7);
    CHECK(kExample.to_string() == "4,7,3,6,2,1,5");
    CHECK(Permutation::parse("").n() == 0);
    CHECK(Permutation::identity(4).to_string() == "1,2,3,4");
    CHECK(Permutation::parse("2,1").inverse() == Permutation::parse("2,1"));
    CHECK(kExample.inverse()(4) == 1);
    CHECK_THROWS_AS(Permutation::parse("0,1"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1,1"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1,3"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1,"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("a"), std::invalid_argument);
}

TEST_CASE("weak exceedances") {
    CHECK(weak_exceedances(kExample) == 4);  // positions 1,2,3,4
    for (int n = 0; n <= 6; ++n) CHECK(weak_exceedances(Permutation::identity(n)) == n);
    CHECK(weak_exceedances(Permutation::parse("2,1")) == 1);
}

TEST_CASE("crossings") {
    CHECK(crossings(kExample) == 3);  // two upper crossings, one lower
    CHECK(crossings(Permutation::identity(5)) == 0);
    CHECK(crossings(Permutation::parse("4,1,5,6,2,3")) == 4);
}

TEST_CASE("nestings") {
    CHECK(nestings(kExample) == 4);  // three upper, one lower
    CHECK(nestings(Permutation::identity(5)) == 0);
    CHECK(nestings(Permutation::parse("3,2,1")) == 1);  // arcs (1,3) over (2,2)
}

TEST_CASE("alignments") {
    CHECK(alignments(kExample) == 6);
    CHECK(alignments(Permutation::identity(5)) == 0);
    // crossings + alignments == (k-1)(n-k), exhaustive at small n
    for (int n = 0; n <= 6; ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
            int k = weak_exceedances(p);
            CHECK(crossings(p) + alignments(p) == (k - 1) * (n - k));
        });
    }
}

TEST_CASE("descents") {
    CHECK(descents(Permutation::parse("5,1,7,4,3,6,8,2")) == 4);  // positions 1,3,4,7
    CHECK(descents(Permutation::identity(6)) == 0);
    CHECK(descents(Permutation::parse("6,5,4,3,2,1")) == 5);
    CHECK(descents(Permutation()) == 0);
}

TEST_CASE("vincular pattern counts") {
    // occurrences 73-6, 73-5 and 62-5
    CHECK(pattern_count(kExample, Pattern::P31_2) == 3);
    // occurrences 62-5, 62-3, 62-4, 53-4
    CHECK(pattern_count(Permutation::parse("6,2,1,5,3,4"), Pattern::P31_2) == 4);
    CHECK(pattern_count(kExample, Pattern::P2_31) == 3);
    for (Pattern pat : {Pattern::P31_2, Pattern::P2_31, Pattern::P13_2, Pattern::P2_13})
        CHECK(pattern_count(Permutation::identity(7), pat) == 0);
}

TEST_CASE("per-value pattern arrays") {
    PerValuePatterns pv = per_value_patterns(Permutation::parse("5,1,7,4,3,6,8,2"));
    CHECK(pv.p31_2 == std::vector<int>{0, 1, 1, 1, 0, 1, 0, 0});
    CHECK(pv.p2_31 == std::vector<int>{0, 0, 1, 1, 2, 1, 1, 0});

    PerValuePatterns id = per_value_patterns(Permutation::identity(5));
    CHECK(id.p31_2 == std::vector<int>(5, 0));
    CHECK(id.p2_31 == std::vector<int>(5, 0));

    PerValuePatterns six = per_value_patterns(Permutation::parse("6,2,1,5,3,4"));
    CHECK(six.p31_2 == std::vector<int>{0, 0, 1, 2, 1, 0});
}

TEST_CASE("per-value sums equal total pattern counts on random permutations") {
    std::mt19937_64 rng(123);
    for (int n = 0; n <= 10; ++n) {
        for (int rep = 0; rep < 30; ++rep) {
            std::vector<int> v(static_cast<std::size_t>(n));
            std::iota(v.begin(), v.end(), 1);
            std::shuffle(v.begin(), v.end(), rng);
            Permutation p(v);
            PerValuePatterns pv = per_value_patterns(p);
            int s31 = 0, s231 = 0;
            for (int x : pv.p31_2) s31 += x;
            for (int x : pv.p2_31) s231 += x;
            CHECK(s31 == pattern_count(p, Pattern::P31_2));
            CHECK(s231 == pattern_count(p, Pattern::P2_31));
        }
    }
}

TEST_CASE("stat_profile aggregates and invariants") {
    StatProfile prof = stat_profile(kExample);
    int cp = 0, cm = 0, ap = 0, am = 0, pm = 0;
    for (int i = 0; i < 7; ++i) {
        cp += prof.c_plus[i];
        cm += prof.c_minus[i];
        ap += prof.a_plus[i];
        am += prof.a_minus[i];
        pm += prof.a_pm[i];
    }
    CHECK(cp == 2);
    CHECK(cm == 1);
    CHECK(ap == 3);
    CHECK(am == 1);
    CHECK(pm == 2);

    StatProfile id = stat_profile(Permutation::identity(4));
    CHECK(id.wex == 4);
    CHECK(id.crossings() == 0);
    CHECK(id.alignments() == 0);
    CHECK(id.h == std::vector<int>{0, 0, 0, 0});

    for_each_permutation(5, [&](const Permutation& p) {
        StatProfile pr = stat_profile(p);
        CHECK(pr.crossings() == crossings(p));
        CHECK(pr.nestings() == nestings(p));
        CHECK(pr.alignments() == alignments(p));
        CHECK(pr.wex == weak_exceedances(p));
        CHECK(pr.des == descents(p));
        for (int i = 1; i <= 5; ++i) {
            std::size_t ix = static_cast<std::size_t>(i) - 1;
            // h_i counts j < i with sigma(j) >= i
            int h = 0;
            for (int j = 1; j < i; ++j)
                if (p(j) >= i) ++h;
            CHECK(pr.h[ix] == h);
            // per-index sets are empty on the wrong side of the diagonal
            if (p(i) < i) {
                CHECK(pr.c_plus[ix] == 0);
                CHECK(pr.a_plus[ix] == 0);
            } else {
                CHECK(pr.c_minus[ix] == 0);
                CHECK(pr.a_minus[ix] == 0);
            }
            CHECK(pr.c_plus[ix] >= 0);
            CHECK(pr.c_minus[ix] >= 0);
        }
    });
}

TEST_CASE("decorated permutation parsing and validation") {
    DecoratedPermutation d = DecoratedPermutation::parse("1+,3,2,4-");
    CHECK(d.n() == 4);
    CHECK(d.color(1) == Color::plus);
    CHECK(d.color(4) == Color::minus);
    CHECK(d.to_string() == "1+,3,2,4-");
    CHECK_THROWS_AS(DecoratedPermutation::parse("1,3,2,4-"), std::invalid_argument);   // 1 uncolored
    CHECK_THROWS_AS(DecoratedPermutation::parse("1+,3-,2,4-"), std::invalid_argument);  // 3 not fixed
    CHECK_THROWS_AS(DecoratedPermutation::parse("+"), std::invalid_argument);
}

TEST_CASE("decorated statistics") {
    // all-plus identity: n weak exceedances, everything else zero
    for (int n = 0; n <= 5; ++n) {
        std::map<int, Color> colors;
        for (int i = 1; i <= n; ++i) colors[i] = Color::plus;
        DecoratedStats s = decorated_stats(DecoratedPermutation(Permutation::identity(n), colors));
        CHECK(s.wex == n);
        CHECK(s.nonexc == 0);
        CHECK(s.crossings == 0);
        CHECK(s.nestings == 0);
        CHECK(s.alignments == 0);
    }
    // both minus on [2]: no weak exceedances; the minus points do not align
    // with each other (their partners must carry a plus-side arc)
    DecoratedStats mm = decorated_stats(DecoratedPermutation::parse("1-,2-"));
    CHECK(mm.wex == 0);
    CHECK(mm.nonexc == 2);
    CHECK(mm.alignments == 0);
    DecoratedStats pm = decorated_stats(DecoratedPermutation::parse("1+,2-"));
    CHECK(pm.wex == 1);
    CHECK(pm.alignments == 1);

    // no fixed points: decorated statistics reduce to the plain ones
    for_each_permutation(5, [&](const Permutation& p) {
        bool has_fixed = false;
        for (int i = 1; i <= 5; ++i)
            if (p(i) == i) has_fixed = true;
        if (has_fixed) return;
        DecoratedStats s = decorated_stats(DecoratedPermutation(p, {}));
        CHECK(s.wex == weak_exceedances(p));
        CHECK(s.crossings == crossings(p));
        CHECK(s.nestings == nestings(p));
        CHECK(s.alignments == alignments(p));
    });
}

TEST_CASE("decorated sum rule: ne + cr + apm + #strict-nonexc == (n-k)k") {
    for (int n = 0; n <= 5; ++n) {
        for_each_decorated_permutation(n, [&](const DecoratedPermutation& d) {
            DecoratedStats s = decorated_stats(d);
            int apm = s.alignments - s.nestings;
            CHECK(s.nestings + s.crossings + apm + strict_nonexceedances(d.perm()) ==
                  (n - s.wex) * s.wex);
        });
    }
}

TEST_CASE("B table small values") {
    StatTable b2 = enumerate_B_table(2);
    StatTable expect2;
    expect2.add({2, 2, 0, 0}, BigInt(1));
    expect2.add({2, 1, 0, 0}, BigInt(1));
    CHECK(b2 == expect2);

    StatTable b3 = enumerate_B_table(3);
    CHECK(b3.entries.at({3, 2, 1, 0}) == BigInt(1));  // witness 2,3,1
    CHECK(b3.total() == BigInt(6));

    StatTable b0 = enumerate_B_table(0);
    StatTable expect0;
    expect0.add({0, 0, 0, 0}, BigInt(1));
    CHECK(b0 == expect0);
}

TEST_CASE("D table small values and equality with B") {
    CHECK(enumerate_D_table(2) == enumerate_B_table(2));
    StatTable d0 = enumerate_D_table(0);
    CHECK(d0.entries.at({0, 0, 0, 0}) == BigInt(1));
    for (int n = 0; n <= 6; ++n) CHECK(enumerate_B_table(n) == enumerate_D_table(n));
}

TEST_CASE("B table symmetry in the last two indices") {
    for (int n = 0; n <= 6; ++n) {
        StatTable b = enumerate_B_table(n);
        for (const auto& [key, count] : b.entries) {
            auto it = b.entries.find({key[0], key[1], key[3], key[2]});
            REQUIRE(it != b.entries.end());
            CHECK(it->second == count);
        }
    }
}

TEST_CASE("enumeration cap is enforced and can be raised explicitly") {
    CHECK_THROWS_WITH_AS(enumerate_B_table(10), doctest::Contains("limit"),
                         std::invalid_argument);
    CHECK_NOTHROW(enumerate_B_table(4, 4));
    CHECK_THROWS_AS(enumerate_B_table(5, 4), std::invalid_argument);
}

TEST_CASE("partitioned enumeration merges to the same table") {
    CHECK(enumerate_B_table(5, 9, 4) == enumerate_B_table(5));
    CHECK(enumerate_D_table(5, 9, 4) == enumerate_D_table(5));
}

TEST_CASE("StatTable JSON golden") {
    CHECK(enumerate_B_table(2).to_json().dump() ==
          R"([{"n":2,"k":1,"l":0,"m":0,"count":"1"},{"n":2,"k":2,"l":0,"m":0,"count":"1"}])");
}

TEST_CASE("decorated table total counts 2^fix over the symmetric group") {
    StatTable dec = enumerate_decorated_table(3);
    CHECK(dec.total() == BigInt(16));
    StatTable dec0 = enumerate_decorated_table(0);
    CHECK(dec0.total() == BigInt(1));
}
