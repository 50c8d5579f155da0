#include <doctest.h>

#include "milnor/invariants.hpp"
#include "milnor/tangle.hpp"
#include "support/gen.hpp"

using namespace milnor;

namespace {

TangleRep hopf_string_link() {
    return TangleRep::make(TangleKind::string_link, 2, pure_generator(1, 2, 2),
                           {});
}

bool mu_tables_equal(const TangleRep &a, const TangleRep &b, int maxlen) {
    MilnorTable ta = MilnorTable::compute(a, maxlen + 1);
    MilnorTable tb = MilnorTable::compute(b, maxlen + 1);
    for (const SequenceIndex &I :
         enumerate_sequences(a.components(), maxlen, false))
        if (ta.mu(I) != tb.mu(I)) return false;
    return true;
}

}  // namespace

TEST_CASE("string link / bottom tangle conversions are inverse tag flips") {
    testgen::Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        TangleRep s = TangleRep::make(TangleKind::string_link, 3,
                                      testgen::random_pure_braid(3, 3, rng),
                                      testgen::random_framings(3, rng));
        TangleRep b = to_bottom_tangle(s);
        CHECK(b.kind() == TangleKind::bottom_tangle);
        CHECK(b.braid() == s.braid());
        CHECK(to_string_link(b) == s);
    }
    CHECK(to_bottom_tangle(TangleRep::trivial(TangleKind::string_link, 2)) ==
          TangleRep::trivial(TangleKind::bottom_tangle, 2));
    CHECK_THROWS_AS(
        to_bottom_tangle(TangleRep::trivial(TangleKind::bottom_tangle, 2)),
        KindError);
    CHECK_THROWS_AS(
        to_string_link(TangleRep::trivial(TangleKind::string_link, 2)),
        KindError);
}

TEST_CASE("mu is unchanged by the conversion, all sequences") {
    testgen::Rng rng(32);
    for (int t = 0; t < 50; ++t) {
        TangleRep s = TangleRep::make(TangleKind::string_link, 3,
                                      testgen::random_pure_braid(3, 3, rng), {});
        CHECK(mu_tables_equal(s, to_bottom_tangle(s), 3));
    }
}

TEST_CASE("product of string links") {
    TangleRep triv = TangleRep::trivial(TangleKind::string_link, 2);
    TangleRep h = hopf_string_link();
    CHECK(product(triv, h) == h);
    CHECK(product(h, triv) == h);

    CHECK(mu(product(h, h), SequenceIndex{{1, 2}}, 3) == 2);
}

TEST_CASE("product is associative and adds framings") {
    testgen::Rng rng(34);
    for (int t = 0; t < 50; ++t) {
        TangleRep a = TangleRep::make(TangleKind::string_link, 3,
                                      testgen::random_pure_braid(3, 2, rng),
                                      testgen::random_framings(3, rng));
        TangleRep b = TangleRep::make(TangleKind::string_link, 3,
                                      testgen::random_pure_braid(3, 2, rng),
                                      testgen::random_framings(3, rng));
        TangleRep c = TangleRep::make(TangleKind::string_link, 3,
                                      testgen::random_pure_braid(3, 2, rng),
                                      testgen::random_framings(3, rng));
        CHECK(product(product(a, b), c) == product(a, product(b, c)));
        for (int i = 0; i < 3; ++i)
            CHECK(product(a, b).framings()[i] ==
                  a.framings()[i] + b.framings()[i]);
    }
    CHECK_THROWS_AS(product(TangleRep::trivial(TangleKind::string_link, 2),
                            TangleRep::trivial(TangleKind::string_link, 3)),
                    MismatchError);
    CHECK_THROWS_AS(product(TangleRep::trivial(TangleKind::bottom_tangle, 2),
                            TangleRep::trivial(TangleKind::string_link, 2)),
                    KindError);
}

TEST_CASE("closure is a tag, not invertible") {
    TangleRep b = TangleRep::trivial(TangleKind::bottom_tangle, 3);
    TangleRep l = close(b);
    CHECK(l.kind() == TangleKind::link_closure);
    CHECK(l.braid() == b.braid());
    CHECK_THROWS_AS(close(l), KindError);
    CHECK_THROWS_AS(close(TangleRep::trivial(TangleKind::string_link, 3)),
                    KindError);

    // unlink: every mu-bar vanishes
    for (const SequenceIndex &I : enumerate_sequences(3, 3, false))
        CHECK(mu_bar(l, I, 4) == ResidueValue{0, 0});
}

TEST_CASE("Borromean closure") {
    GroupWord c = commutator(GroupWord::generator(3, 1),
                             GroupWord::generator(3, 2));
    TangleRep borro = TangleRep::make(TangleKind::bottom_tangle, 3,
                                      realize_longitude(3, c, 3), {});
    TangleRep l = close(borro);
    CHECK(delta(l, SequenceIndex{{1, 2, 3}}, 4) == 0);
    CHECK(mu_bar(l, SequenceIndex{{1, 2, 3}}, 4) == ResidueValue{0, 1});
}

TEST_CASE("sl_move degenerate cases") {
    TangleRep g = TangleRep::make(TangleKind::bottom_tangle, 2,
                                  pure_generator(1, 2, 2), {});
    TangleRep triv_pat = TangleRep::trivial(TangleKind::string_link, 2);

    // trivial pattern, zero twists: identity
    CHECK(sl_move(g, SLMoveData{triv_pat, {0, 0}}) == g);
    CHECK(sl_move(g, SLMoveData{triv_pat, {}}) == g);

    // trivial pattern, twists: only framings change
    TangleRep twisted = sl_move(g, SLMoveData{triv_pat, {3, -1}});
    CHECK(twisted.braid() == g.braid());
    CHECK_FALSE(twisted.doubled());
    CHECK(twisted.framings() == std::vector<std::int64_t>{3, -1});

    CHECK_THROWS_AS(
        sl_move(g, SLMoveData{TangleRep::trivial(TangleKind::string_link, 3), {}}),
        MismatchError);
    CHECK_THROWS_AS(
        sl_move(to_string_link(g), SLMoveData{triv_pat, {}}), KindError);
}

TEST_CASE("antiparallel doubling cancels the Hopf pattern") {
    TangleRep triv = TangleRep::trivial(TangleKind::bottom_tangle, 2);
    TangleRep pat = hopf_string_link();
    TangleRep moved = sl_move(triv, SLMoveData{pat, {0, 0}});
    CHECK(moved.doubled());
    MilnorTable t = MilnorTable::compute(moved, 4);
    CHECK(t.mu(SequenceIndex{{1, 2}}) == 0);
    CHECK(t.mu(SequenceIndex{{2, 1}}) == 0);
}

TEST_CASE("sl_move composes: stacked moves equal the composed pattern") {
    testgen::Rng rng(35);
    for (int t = 0; t < 30; ++t) {
        TangleRep g = TangleRep::make(TangleKind::bottom_tangle, 3,
                                      testgen::random_pure_braid(3, 2, rng), {});
        TangleRep u = TangleRep::make(TangleKind::string_link, 3,
                                      testgen::random_pure_braid(3, 1, rng), {});
        TangleRep up = TangleRep::make(TangleKind::string_link, 3,
                                       testgen::random_pure_braid(3, 1, rng), {});
        if (u.braid().word().letters().empty() ||
            up.braid().word().letters().empty())
            continue;
        TangleRep two_moves =
            sl_move(sl_move(g, SLMoveData{u, {}}), SLMoveData{up, {}});
        TangleRep one_move = sl_move(g, SLMoveData{product(up, u), {}});
        // exact braid-level equality with zero twists
        CHECK(two_moves.braid() == one_move.braid());
    }
}

TEST_CASE("closure residues are invariant under SL-moves") {
    // the closures of SL-move-related bottom tangles are the same link,
    // so every mu-bar residue must agree exactly
    testgen::Rng rng(37);
    std::uniform_int_distribution<std::int64_t> twist(-1, 1);
    for (int t = 0; t < 30; ++t) {
        const int n = 3 + t % 2;
        TangleRep g = TangleRep::make(TangleKind::bottom_tangle, n,
                                      testgen::random_pure_braid(n, 2, rng), {});
        TangleRep u = TangleRep::make(TangleKind::string_link, n,
                                      testgen::random_pure_braid(n, 2, rng), {});
        std::vector<std::int64_t> tw(n);
        for (auto &x : tw) x = twist(rng);
        TangleRep moved = sl_move(g, SLMoveData{u, tw});
        MilnorTable ta = MilnorTable::compute(close(g), n + 1);
        MilnorTable tb = MilnorTable::compute(close(moved), n + 1);
        for (const SequenceIndex &I : enumerate_sequences(n, n, false))
            CHECK(mu_bar(ta, I) == mu_bar(tb, I));
    }
}

TEST_CASE("twists never change mu, even on the doubled path") {
    testgen::Rng rng(36);
    for (int t = 0; t < 20; ++t) {
        TangleRep g = TangleRep::make(TangleKind::bottom_tangle, 3,
                                      testgen::random_pure_braid(3, 2, rng), {});
        TangleRep u = TangleRep::make(TangleKind::string_link, 3,
                                      testgen::random_pure_braid(3, 2, rng), {});
        if (u.braid().word().letters().empty()) continue;
        TangleRep a = sl_move(g, SLMoveData{u, {0, 0, 0}});
        TangleRep b = sl_move(g, SLMoveData{u, {2, -1, 1}});
        CHECK(mu_tables_equal(a, b, 3));
    }
}
