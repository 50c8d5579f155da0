#ifndef MILNOR_TANGLE_HPP
#define MILNOR_TANGLE_HPP

#include <cstdint>
#include <vector>

#include "milnor/braid.hpp"

namespace milnor {

enum class TangleKind { string_link, bottom_tangle, link_closure };

// Oriented ordered n-component tangle encoded through a pure braid.
//
// Plain tangles carry an n-strand braid; component i is strand i. After a
// nontrivial SL-move the encoding switches to the doubled (plat) form: a
// 2n-strand pure braid where component i enters ascending on strand 2i−1
// and returns descending on strand 2i, with the two capped together at the
// top. Base letters (BraidLetter::base) replay the original n-strand braid
// on the odd strands of that layout. The framings field is bookkeeping
// only; Milnor invariants never read it.
class TangleRep {
  public:
    static TangleRep make(TangleKind kind, int components, PureBraid braid,
                          std::vector<std::int64_t> framings, bool doubled = false);
    static TangleRep trivial(TangleKind kind, int components);

    TangleKind kind() const { return kind_; }
    int components() const { return components_; }
    const PureBraid &braid() const { return braid_; }
    const std::vector<std::int64_t> &framings() const { return framings_; }
    bool doubled() const { return doubled_; }

    TangleRep with_kind(TangleKind k) const;
    TangleRep with_framings(std::vector<std::int64_t> f) const;

    friend bool operator==(const TangleRep &, const TangleRep &) = default;

  private:
    TangleRep(TangleKind kind, int components, PureBraid braid,
              std::vector<std::int64_t> framings, bool doubled)
        : kind_(kind), components_(components), braid_(std::move(braid)),
          framings_(std::move(framings)), doubled_(doubled) {}

    TangleKind kind_;
    int components_;
    PureBraid braid_;
    std::vector<std::int64_t> framings_;
    bool doubled_;
};

// An SL-move: a pattern string link to double and stack below the target,
// plus full twists per component.
struct SLMoveData {
    TangleRep pattern;  // kind string_link, same component count as target
    std::vector<std::int64_t> twists;
};

// The mutually inverse string link ↔ bottom tangle correspondence. The
// underlying braid is unchanged; only the kind tag flips.
TangleRep to_bottom_tangle(const TangleRep &s);
TangleRep to_string_link(const TangleRep &b);

// Stacking product of string links: braid concatenation (a below b),
// framings added componentwise. Defined for plain encodings.
TangleRep product(const TangleRep &a, const TangleRep &b);

// Closure tagging; not invertible.
TangleRep close(const TangleRep &b);

// SL-move on a bottom tangle. A trivial pattern only adds the twists to
// the framings; a nontrivial pattern produces the doubled encoding
// cable2(pattern, twists) stacked below g.
TangleRep sl_move(const TangleRep &g, const SLMoveData &m);

}  // namespace milnor

#endif
