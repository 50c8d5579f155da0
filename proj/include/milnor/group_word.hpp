#ifndef MILNOR_GROUP_WORD_HPP
#define MILNOR_GROUP_WORD_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "milnor/errors.hpp"

namespace milnor {

// One letter x_i^{±1} of a free-group word over generators x_1..x_n.
struct Letter {
    int gen;   // 1..rank
    int sign;  // +1 or -1

    friend bool operator==(const Letter &, const Letter &) = default;
};

inline Letter inverse(Letter l) { return {l.gen, -l.sign}; }

// Freely reduced word over x_1..x_rank. The empty word is the identity.
// Every constructor and operation keeps the word reduced; there is no way
// to observe an unreduced state.
class GroupWord {
  public:
    explicit GroupWord(int rank) : rank_(rank) {
        if (rank < 0) throw IndexError("GroupWord: negative rank");
    }

    // Free reduction of an arbitrary letter sequence. Idempotent.
    static GroupWord reduce(int rank, std::span<const Letter> raw);

    static GroupWord generator(int rank, int i, int sign = +1);

    int rank() const { return rank_; }
    const std::vector<Letter> &letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    GroupWord operator*(const GroupWord &rhs) const;
    GroupWord inverse() const;

    std::int64_t exponent_sum(int i) const;

    // For w = c·x_i·c⁻¹ (reduced), returns c; c never ends in x_i^{±1}.
    // Throws NotConjugateError otherwise.
    GroupWord strip_conjugator(int i) const;

    // Text form: `x1 x2^-1 x1`; identity prints as `1`.
    std::string to_text() const;
    static GroupWord from_text(int rank, const std::string &text);

    friend bool operator==(const GroupWord &, const GroupWord &) = default;

  private:
    int rank_ = 0;
    std::vector<Letter> letters_;

    void check_rank(const GroupWord &other) const {
        if (rank_ != other.rank_)
            throw MismatchError("GroupWord: rank mismatch");
    }
};

// by·a·by⁻¹
GroupWord conjugate(const GroupWord &a, const GroupWord &by);

// a⁻¹b⁻¹ab
GroupWord commutator(const GroupWord &a, const GroupWord &b);

// Left-normed commutator [[…[x_{i1},x_{i2}],…],x_{ik}] over the given
// generator indices; a single index yields that generator.
GroupWord left_normed_commutator(int rank, std::span<const int> indices);

}  // namespace milnor

#endif
