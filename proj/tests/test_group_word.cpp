#include <doctest.h>

#include "milnor/group_word.hpp"
#include "support/gen.hpp"

using namespace milnor;

namespace {

GroupWord w(int rank, const std::string &text) {
    return GroupWord::from_text(rank, text);
}

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
    std::vector<Letter> raw{{1, 1}, {2, 1}, {2, -1}};
    CHECK(GroupWord::reduce(2, raw) == w(2, "x1"));

    CHECK(GroupWord::reduce(2, {}) == GroupWord(2));

    std::vector<Letter> full{{1, 1}, {1, -1}, {1, 1}, {1, -1}};
    CHECK(GroupWord::reduce(2, full).is_identity());

    std::vector<Letter> bad{{3, 1}};
    CHECK_THROWS_AS(GroupWord::reduce(2, bad), IndexError);
}

TEST_CASE("reduce is idempotent on random words") {
    testgen::Rng rng(1);
    for (int t = 0; t < 500; ++t) {
        GroupWord a = testgen::random_reduced_word(3, 20, rng);
        CHECK(GroupWord::reduce(3, a.letters()) == a);
    }
}

TEST_CASE("group operations match the fixed conventions") {
    GroupWord x1 = GroupWord::generator(2, 1);
    GroupWord x2 = GroupWord::generator(2, 2);
    CHECK(commutator(x1, x2) == w(2, "x1^-1 x2^-1 x1 x2"));
    CHECK(conjugate(x2, x1) == w(2, "x1 x2 x1^-1"));
    CHECK(w(2, "x1 x2") * w(2, "x2^-1 x1") == w(2, "x1 x1"));
    CHECK_THROWS_AS(x1 * GroupWord::generator(3, 1), MismatchError);
}

TEST_CASE("group laws hold on random words") {
    testgen::Rng rng(2);
    for (int t = 0; t < 500; ++t) {
        GroupWord a = testgen::random_reduced_word(3, 12, rng);
        GroupWord b = testgen::random_reduced_word(3, 12, rng);
        GroupWord c = testgen::random_reduced_word(3, 12, rng);
        CHECK((a * b).inverse() == b.inverse() * a.inverse());
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * a.inverse()).is_identity());
    }
}

TEST_CASE("exponent_sum") {
    CHECK(w(2, "x1 x2 x1^-1").exponent_sum(1) == 0);
    CHECK(w(2, "x1 x1").exponent_sum(1) == 2);
    GroupWord comm = commutator(GroupWord::generator(2, 1),
                                GroupWord::generator(2, 2));
    CHECK(comm.exponent_sum(2) == 0);
    CHECK_THROWS_AS(comm.exponent_sum(5), IndexError);
}

TEST_CASE("exponent_sum is additive over products") {
    testgen::Rng rng(3);
    for (int t = 0; t < 500; ++t) {
        GroupWord a = testgen::random_reduced_word(4, 15, rng);
        GroupWord b = testgen::random_reduced_word(4, 15, rng);
        for (int i = 1; i <= 4; ++i)
            CHECK((a * b).exponent_sum(i) ==
                  a.exponent_sum(i) + b.exponent_sum(i));
    }
}

TEST_CASE("strip_conjugator on the fixed examples") {
    CHECK(w(2, "x1 x2 x1 x2^-1 x1^-1").strip_conjugator(1) == w(2, "x1 x2"));
    CHECK(w(2, "x1").strip_conjugator(1).is_identity());
    CHECK_THROWS_AS(w(2, "x2 x1 x2^-1").strip_conjugator(2),
                    NotConjugateError);
    // conjugates of the inverse generator are rejected too
    CHECK_THROWS_AS(w(2, "x2 x1^-1 x2^-1").strip_conjugator(1),
                    NotConjugateError);
    CHECK_THROWS_AS(GroupWord(2).strip_conjugator(1), NotConjugateError);
}

TEST_CASE("strip_conjugator round-trips on random conjugates") {
    testgen::Rng rng(4);
    for (int t = 0; t < 500; ++t) {
        const int i = 1 + t % 3;
        GroupWord c = testgen::random_reduced_word(3, 10, rng);
        // absorb trailing x_i^{±1} so the conjugator is canonical
        while (!c.letters().empty() && c.letters().back().gen == i)
            c = c * GroupWord::generator(3, i, -c.letters().back().sign);
        GroupWord x = GroupWord::generator(3, i);
        GroupWord conj = conjugate(x, c);
        GroupWord back = conj.strip_conjugator(i);
        CHECK(back == c);
        CHECK(conjugate(x, back) == conj);
    }
}

TEST_CASE("left-normed commutators") {
    std::vector<int> idx{1, 2};
    CHECK(left_normed_commutator(3, idx) == w(3, "x1^-1 x2^-1 x1 x2"));
    std::vector<int> single{2};
    CHECK(left_normed_commutator(3, single) == GroupWord::generator(3, 2));
}

TEST_CASE("word text round trip") {
    testgen::Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        GroupWord a = testgen::random_reduced_word(4, 12, rng);
        CHECK(GroupWord::from_text(4, a.to_text()) == a);
    }
    CHECK(GroupWord(3).to_text() == "1");
    CHECK_THROWS_AS(GroupWord::from_text(2, "y1"), ParseError);
}
