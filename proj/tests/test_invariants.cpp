#include <doctest.h>

#include "milnor/invariants.hpp"
#include "support/gen.hpp"

using namespace milnor;

namespace {

TangleRep string_link(PureBraid b) {
    const int n = b.strands();
    return TangleRep::make(TangleKind::string_link, n, std::move(b), {});
}

TangleRep borromean_bottom_tangle() {
    GroupWord c = commutator(GroupWord::generator(3, 1),
                             GroupWord::generator(3, 2));
    return TangleRep::make(TangleKind::bottom_tangle, 3,
                           realize_longitude(3, c, 3), {});
}

}  // namespace

TEST_CASE("longitudes of simple tangles") {
    // trivial: all identity
    for (const GroupWord &w :
         longitude_words(TangleRep::trivial(TangleKind::string_link, 3)))
        CHECK(w.is_identity());

    // A_12: lambda_2 = x1, lambda_1 has X2-coefficient 1
    TangleRep hopf = string_link(pure_generator(1, 2, 2));
    auto words = longitude_words(hopf);
    CHECK(words[1] == GroupWord::generator(2, 1));
    CHECK(expand(words[0], 2).coefficient(Monomial{{2}}) == 1);

    // Borromean realization: lambda_3 agrees with the commutator expansion
    // through its weight
    auto lambda = longitudes(to_string_link(borromean_bottom_tangle()), 3);
    GroupWord c = commutator(GroupWord::generator(3, 1),
                             GroupWord::generator(3, 2));
    TruncatedSeries expected = expand(c, 3);
    for (const SequenceIndex &I : enumerate_sequences(3, 2, false))
        CHECK(lambda[2].coefficient(Monomial{I.entries}) ==
              expected.coefficient(Monomial{I.entries}));
}

TEST_CASE("longitude words reject doubled encodings") {
    TangleRep triv = TangleRep::trivial(TangleKind::bottom_tangle, 2);
    TangleRep pat = string_link(pure_generator(1, 2, 2));
    TangleRep moved = sl_move(triv, SLMoveData{pat, {}});
    CHECK_THROWS_AS(longitude_words(moved), WordCapError);
}

TEST_CASE("calibration pins") {
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                TangleRep t = string_link(pure_generator(i, j, n));
                CHECK(mu(t, SequenceIndex{{i, j}}, 3) == 1);
                CHECK(mu(t, SequenceIndex{{j, i}}, 3) == 1);
            }
}

TEST_CASE("mu of single indices vanishes by definition") {
    testgen::Rng rng(41);
    for (int t = 0; t < 20; ++t) {
        TangleRep a = string_link(testgen::random_pure_braid(3, 3, rng));
        for (int j = 1; j <= 3; ++j)
            CHECK(mu(a, SequenceIndex{{j}}, 3) == 0);
    }
}

TEST_CASE("mu rejects closures; representative_mu allows them") {
    TangleRep l =
        close(TangleRep::trivial(TangleKind::bottom_tangle, 2));
    CHECK_THROWS_AS(mu(l, SequenceIndex{{1, 2}}, 3), KindError);
    CHECK(representative_mu(l, SequenceIndex{{1, 2}}, 3) == 0);
}

TEST_CASE("mu errors") {
    TangleRep h = string_link(pure_generator(1, 2, 2));
    CHECK_THROWS_AS(mu(h, SequenceIndex{{1, 2, 1, 2}}, 3), TruncationError);
    CHECK_THROWS_AS(mu(h, SequenceIndex{{1, 7}}, 3), IndexError);
    CHECK_THROWS_AS(mu(h, SequenceIndex{}, 3), IndexError);
}

TEST_CASE("delta on the worked examples") {
    CHECK(delta(close(borromean_bottom_tangle()), SequenceIndex{{1, 2, 3}}, 4) ==
          0);

    // Hopf on {1,2} next to a free strand: only length-1 subsequences
    BraidWord h12 = pure_generator(1, 2, 3).word();
    TangleRep hopf3 = close(TangleRep::make(TangleKind::bottom_tangle, 3,
                                            PureBraid(h12), {}));
    CHECK(delta(hopf3, SequenceIndex{{1, 2}}, 3) == 0);

    // product of Hopf(1,2) and Hopf(1,3): Delta(123) = gcd of its
    // length-2 values = 1
    TangleRep prod = product(string_link(pure_generator(1, 2, 3)),
                             string_link(pure_generator(1, 3, 3)));
    TangleRep l = close(to_bottom_tangle(prod));
    CHECK(delta(l, SequenceIndex{{1, 2, 3}}, 4) == 1);
}

TEST_CASE("mu_bar on the worked examples") {
    CHECK(mu_bar(close(borromean_bottom_tangle()), SequenceIndex{{1, 2, 3}},
                 4) == ResidueValue{0, 1});
    TangleRep unlink = close(TangleRep::trivial(TangleKind::bottom_tangle, 3));
    for (const SequenceIndex &I : enumerate_sequences(3, 3, false))
        CHECK(mu_bar(unlink, I, 4) == ResidueValue{0, 0});
    for (int j = 1; j <= 3; ++j)
        CHECK(mu_bar(unlink, SequenceIndex{{j}}, 4) == ResidueValue{0, 0});
    // canonical range: residues live in [0, delta)
    TangleRep prod = product(string_link(pure_generator(1, 2, 3)),
                             string_link(pure_generator(1, 3, 3)));
    ResidueValue r = mu_bar(close(to_bottom_tangle(prod)),
                            SequenceIndex{{1, 2, 3}}, 4);
    CHECK(r.delta == 1);
    CHECK(r.value == 0);
}

TEST_CASE("sequence enumeration") {
    CHECK(enumerate_sequences(3, 3, true).size() == 15);
    CHECK(enumerate_sequences(2, 2, false).size() == 6);
    auto one = enumerate_sequences(1, 1, true);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == SequenceIndex{{1}});
    // deterministic (length, lex) order
    auto seqs = enumerate_sequences(2, 2, false);
    CHECK(seqs[0].to_text() == "1");
    CHECK(seqs[1].to_text() == "2");
    CHECK(seqs[2].to_text() == "11");
    CHECK(seqs[3].to_text() == "12");
    CHECK(seqs[4].to_text() == "21");
    CHECK(seqs[5].to_text() == "22");
}

TEST_CASE("vanishing depth") {
    TangleRep unlink = close(TangleRep::trivial(TangleKind::bottom_tangle, 3));
    CHECK(vanishing_depth(unlink, 4) == VanishingDepth{4, true});

    TangleRep hopf =
        close(TangleRep::make(TangleKind::bottom_tangle, 2,
                              pure_generator(1, 2, 2), {}));
    CHECK(vanishing_depth(hopf, 4) == VanishingDepth{1, false});

    CHECK(vanishing_depth(close(borromean_bottom_tangle()), 4) ==
          VanishingDepth{2, false});

    CHECK_THROWS_AS(
        vanishing_depth(TangleRep::trivial(TangleKind::bottom_tangle, 2), 3),
        KindError);
}

TEST_CASE("framing independence of mu") {
    testgen::Rng rng(42);
    for (int t = 0; t < 100; ++t) {
        TangleRep a = string_link(testgen::random_pure_braid(3, 3, rng));
        TangleRep b = a.with_framings(testgen::random_framings(3, rng));
        MilnorTable ta = MilnorTable::compute(a, 4);
        MilnorTable tb = MilnorTable::compute(b, 4);
        for (const SequenceIndex &I : enumerate_sequences(3, 3, false))
            CHECK(ta.mu(I) == tb.mu(I));
    }
    // ... and under trivial-pattern SL-moves with arbitrary twists
    for (int t = 0; t < 100; ++t) {
        TangleRep g = to_bottom_tangle(
            string_link(testgen::random_pure_braid(3, 3, rng)));
        TangleRep moved = sl_move(
            g, SLMoveData{TangleRep::trivial(TangleKind::string_link, 3),
                          testgen::random_framings(3, rng)});
        MilnorTable ta = MilnorTable::compute(g, 4);
        MilnorTable tb = MilnorTable::compute(moved, 4);
        for (const SequenceIndex &I : enumerate_sequences(3, 3, false))
            CHECK(ta.mu(I) == tb.mu(I));
    }
}

TEST_CASE("stacking additivity at the first non-vanishing length") {
    testgen::Rng rng(43);
    for (int t = 0; t < 120; ++t) {
        const int n = 4;
        const int m = 2 + t % 2;  // both factors vanish below length m
        TangleRep a = testgen::random_vanishing_string_link(n, m - 1, 2, rng);
        TangleRep b = testgen::random_vanishing_string_link(n, m - 1, 2, rng);
        TangleRep ab = product(a, b);
        MilnorTable ta = MilnorTable::compute(a, m + 1);
        MilnorTable tb = MilnorTable::compute(b, m + 1);
        MilnorTable tab = MilnorTable::compute(ab, m + 1);
        for (const SequenceIndex &I : enumerate_sequences(n, m, false)) {
            if (static_cast<int>(I.length()) != m) continue;
            CHECK(tab.mu(I) == ta.mu(I) + tb.mu(I));
        }
    }
}

TEST_CASE("exact and series longitudes agree after normalization") {
    testgen::Rng rng(44);
    for (int t = 0; t < 100; ++t) {
        TangleRep a = string_link(testgen::random_pure_braid(4, 3, rng));
        auto words = longitude_words(a);
        auto series = longitudes(a, 4);
        for (int i = 0; i < 4; ++i) CHECK(expand(words[i], 4) == series[i]);
    }
}

TEST_CASE("MILNOR_WORD_CAP forces the series fallback with identical values") {
    testgen::Rng rng(46);
    TangleRep a = string_link(testgen::random_pure_braid(3, 4, rng));
    MilnorTable exact = MilnorTable::compute(a, 4);
    CHECK(exact.exact_mode());

    setenv("MILNOR_WORD_CAP", "4", 1);
    CHECK(effective_word_cap() == 4);
    CHECK_THROWS_AS(longitude_words(a), WordCapError);
    MilnorTable fallback = MilnorTable::compute(a, 4);
    CHECK_FALSE(fallback.exact_mode());
    unsetenv("MILNOR_WORD_CAP");
    CHECK(effective_word_cap() == 1'000'000);

    for (const SequenceIndex &I : enumerate_sequences(3, 3, false))
        CHECK(exact.mu(I) == fallback.mu(I));
}

TEST_CASE("SL-moves preserve mu through twice the vanishing depth plus one") {
    testgen::Rng rng(45);
    std::uniform_int_distribution<std::int64_t> twist(-2, 2);
    for (int k : {1, 2}) {
        for (int t = 0; t < 10; ++t) {
            const int n = k == 1 ? 3 : 4;
            TangleRep g = to_bottom_tangle(
                testgen::random_vanishing_string_link(n, k, 2, rng));
            int j = 0;
            GroupWord w = testgen::random_commutator_avoiding(n, k + 1, j, rng);
            TangleRep pat = string_link(realize_longitude(j, w, n));
            std::vector<std::int64_t> tw(n);
            for (auto &x : tw) x = twist(rng);
            TangleRep moved = sl_move(g, SLMoveData{pat, tw});
            const int L = 2 * k + 1;
            MilnorTable tg = MilnorTable::compute(g, L + 1);
            MilnorTable tm = MilnorTable::compute(moved, L + 1);
            for (const SequenceIndex &I : enumerate_sequences(n, L, false))
                CHECK(tg.mu(I) == tm.mu(I));
        }
    }
}
