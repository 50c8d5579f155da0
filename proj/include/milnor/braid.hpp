#ifndef MILNOR_BRAID_HPP
#define MILNOR_BRAID_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "milnor/group_word.hpp"
#include "milnor/series.hpp"

namespace milnor {

// One braid letter. Ordinary letters are the standard generators
// σ_pos^{±1} acting on adjacent strand positions (pos, pos+1).
//
// Letters with `base` set only appear inside doubled (plat-form) tangle
// encodings: they replay a letter of an n-strand braid on the odd
// positions (2·pos−1, 2·pos+1) of a 2n-strand layout, leaving the even
// return strands untouched. They are never produced by braid-level
// operations here.
struct BraidLetter {
    int pos;       // 1..strands-1 (ordinary) or 1..n-1 (base)
    int sign;      // +1 or -1
    bool base = false;

    friend bool operator==(const BraidLetter &, const BraidLetter &) = default;
};

class BraidWord {
  public:
    explicit BraidWord(int strands) : strands_(strands) {
        if (strands < 1) throw IndexError("BraidWord: strands must be >= 1");
    }
    BraidWord(int strands, std::vector<BraidLetter> letters);

    int strands() const { return strands_; }
    const std::vector<BraidLetter> &letters() const { return letters_; }
    bool has_base_letters() const;

    void append(BraidLetter l);
    BraidWord operator*(const BraidWord &rhs) const;  // concatenation
    BraidWord inverse() const;
    BraidWord power(std::int64_t e) const;

    friend bool operator==(const BraidWord &, const BraidWord &) = default;

  private:
    int strands_;
    std::vector<BraidLetter> letters_;

    void check_letter(const BraidLetter &l) const;
};

// Position map induced by the word: result[i-1] is the top position of the
// strand entering at bottom position i (transpositions composed in word
// order).
std::vector<int> permutation(const BraidWord &b);
bool is_pure(const BraidWord &b);

// A braid word whose induced permutation is the identity.
class PureBraid {
  public:
    explicit PureBraid(BraidWord w);
    static PureBraid trivial(int strands) { return PureBraid(BraidWord(strands)); }

    const BraidWord &word() const { return word_; }
    int strands() const { return word_.strands(); }

    PureBraid operator*(const PureBraid &rhs) const {
        return PureBraid(word_ * rhs.word_);
    }
    PureBraid inverse() const { return PureBraid(word_.inverse()); }
    PureBraid power(std::int64_t e) const { return PureBraid(word_.power(e)); }

    friend bool operator==(const PureBraid &, const PureBraid &) = default;

  private:
    BraidWord word_;
};

// Image of x_i under the automorphism of the composed word, letters applied
// left to right: σ_k sends x_k ↦ x_k x_{k+1} x_k⁻¹, x_{k+1} ↦ x_k;
// σ_k⁻¹ sends x_k ↦ x_{k+1}, x_{k+1} ↦ x_{k+1}⁻¹ x_k x_{k+1}.
// Throws WordCapError once the images exceed word_cap letters in total.
GroupWord artin_image_word(const BraidWord &b, int i, std::size_t word_cap);

// Same image, computed directly in the truncated series ring. Agrees with
// expand(artin_image_word(b, i), degree) whenever the word is computable.
TruncatedSeries artin_image_series(const BraidWord &b, int i, int degree);

// Standard pure-braid generator A_{ij} = (σ_{j−1}⋯σ_{i+1}) σ_i²
// (σ_{i+1}⁻¹⋯σ_{j−1}⁻¹), 1 ≤ i < j ≤ n.
PureBraid pure_generator(int i, int j, int n);

// 2-cabling: every σ_k^{±1} becomes the 4-letter block crossing exchanging
// the doubled pairs {2k−1,2k} and {2k+1,2k+2}; then twists[i] full twists
// (σ_{2i−1}^{±2} each) are appended on the doubled pair of strand i.
BraidWord cable2(const BraidWord &b, std::span<const std::int64_t> twists);

// Pure braid on n strands whose strand-j longitude has Magnus expansion
// equal to expand(w) through degree weight(w), built by successively
// encircling strand m for each letter x_m^{±1} of w. w must not mention x_j.
PureBraid realize_longitude(int j, const GroupWord &w, int n);

// Braid text form: `s1 S2 s1` (lowercase positive, uppercase negative);
// pure generators as `A[i,j]` / `A[i,j]^-1`, expanded on parse; `b2`/`B2`
// are the doubled-encoding base letters.
std::string braid_to_text(const BraidWord &b);
BraidWord braid_from_text(int strands, const std::string &text);

}  // namespace milnor

#endif
