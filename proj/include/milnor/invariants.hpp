#ifndef MILNOR_INVARIANTS_HPP
#define MILNOR_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "milnor/series.hpp"
#include "milnor/tangle.hpp"

namespace milnor {

// A finite sequence I = i_1 i_2 … i_k of component indices in 1..n.
struct SequenceIndex {
    std::vector<int> entries;

    std::size_t length() const { return entries.size(); }
    bool non_repeated() const;
    // "123" for indices ≤ 9, comma-separated otherwise.
    std::string to_text() const;
    static SequenceIndex from_text(const std::string &text);

    friend bool operator==(const SequenceIndex &, const SequenceIndex &) = default;
};

// μ̄ as a residue: value is canonicalized to [0, delta) when delta > 0 and
// is the raw Milnor number when delta = 0.
struct ResidueValue {
    std::int64_t delta = 0;
    std::int64_t value = 0;

    bool is_zero() const { return value == 0; }
    friend bool operator==(const ResidueValue &, const ResidueValue &) = default;
};

struct VanishingDepth {
    int depth = 1;
    bool saturated = false;

    friend bool operator==(const VanishingDepth &, const VanishingDepth &) = default;
};

// Normalized longitudes of one tangle at one truncation degree, with μ
// reads. Building the table costs one longitude computation; every μ read
// is then a coefficient lookup.
class MilnorTable {
  public:
    static MilnorTable compute(const TangleRep &t, int q);

    int components() const { return static_cast<int>(lambda_.size()); }
    int truncation() const { return q_; }
    bool exact_mode() const { return exact_mode_; }
    const TruncatedSeries &longitude(int i) const;

    std::int64_t mu(const SequenceIndex &I) const;

  private:
    MilnorTable(int q, std::vector<TruncatedSeries> lambda, bool exact)
        : q_(q), lambda_(std::move(lambda)), exact_mode_(exact) {}

    int q_;
    std::vector<TruncatedSeries> lambda_;
    bool exact_mode_;
};

// Normalized longitude series λ_1..λ_n at truncation degree q. Coefficient
// reads are valid for monomials of length ≤ q−1.
std::vector<TruncatedSeries> longitudes(const TangleRep &t, int q);

// Exact normalized longitude words (plain encodings only): for each i,
// strip_conjugator(artin_image(braid, i), i) right-multiplied by x_i^{−e}
// so the self-exponent vanishes.
std::vector<GroupWord> longitude_words(const TangleRep &t,
                                       std::optional<std::size_t> word_cap = {});

// Milnor number μ_t(I): the coefficient of X_{i1}⋯X_{i_{k−1}} in E(λ_{i_k});
// μ(j) = 0 for single indices. Rejects link closures — those are read
// through mu_bar, or explicitly as representative_mu.
std::int64_t mu(const TangleRep &t, const SequenceIndex &I, int q);

// μ of the underlying braid representative, allowing link closures. For a
// closure this value is representative-dependent beyond the certified
// range; callers own that caveat.
std::int64_t representative_mu(const TangleRep &t, const SequenceIndex &I, int q);

// Δ_L(I): gcd of μ over all sequences obtained from proper subsequences of
// I by cyclic rotation; 0 when every such μ vanishes.
std::int64_t delta(const TangleRep &closure, const SequenceIndex &I, int q);

// μ̄_L(I) = μ(I) mod Δ(I), with the Δ = 0 convention above.
ResidueValue mu_bar(const TangleRep &closure, const SequenceIndex &I, int q);

// All sequences over 1..n of length 1..maxlen in (length, lex) order.
std::vector<SequenceIndex> enumerate_sequences(int n, int maxlen,
                                               bool non_repeated);

// Largest k ≤ bound such that μ̄(J) = 0 for every sequence J with |J| ≤ k.
// Always ≥ 1; saturated marks "≥ bound".
VanishingDepth vanishing_depth(const TangleRep &closure, int bound);

// Same reads against a prebuilt table (used by bulk callers).
std::int64_t delta(const MilnorTable &table, const SequenceIndex &I);
ResidueValue mu_bar(const MilnorTable &table, const SequenceIndex &I);
VanishingDepth vanishing_depth(const MilnorTable &table, int bound);

// Effective exact-word blowup cap: MILNOR_WORD_CAP from the environment,
// else 10^6 letters.
std::size_t effective_word_cap();

}  // namespace milnor

#endif
