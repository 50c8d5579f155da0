#include "milnor/tangle.hpp"

namespace milnor {

TangleRep TangleRep::make(TangleKind kind, int components, PureBraid braid,
                          std::vector<std::int64_t> framings, bool doubled) {
    if (components < 1)
        throw IndexError("TangleRep: components must be >= 1");
    const int expected = doubled ? 2 * components : components;
    if (braid.strands() != expected)
        throw MismatchError("TangleRep: braid strand count does not match");
    if (!doubled && braid.word().has_base_letters())
        throw MismatchError("TangleRep: base letters require the doubled form");
    if (framings.empty()) framings.assign(components, 0);
    if (static_cast<int>(framings.size()) != components)
        throw MismatchError("TangleRep: framings length must equal components");
    return TangleRep(kind, components, std::move(braid), std::move(framings),
                     doubled);
}

TangleRep TangleRep::trivial(TangleKind kind, int components) {
    return make(kind, components, PureBraid::trivial(components), {});
}

TangleRep TangleRep::with_kind(TangleKind k) const {
    TangleRep out = *this;
    out.kind_ = k;
    return out;
}

TangleRep TangleRep::with_framings(std::vector<std::int64_t> f) const {
    if (static_cast<int>(f.size()) != components_)
        throw MismatchError("TangleRep: framings length must equal components");
    TangleRep out = *this;
    out.framings_ = std::move(f);
    return out;
}

TangleRep to_bottom_tangle(const TangleRep &s) {
    if (s.kind() != TangleKind::string_link)
        throw KindError("to_bottom_tangle: expected a string link");
    return s.with_kind(TangleKind::bottom_tangle);
}

TangleRep to_string_link(const TangleRep &b) {
    if (b.kind() != TangleKind::bottom_tangle)
        throw KindError("to_string_link: expected a bottom tangle");
    return b.with_kind(TangleKind::string_link);
}

TangleRep product(const TangleRep &a, const TangleRep &b) {
    if (a.kind() != TangleKind::string_link ||
        b.kind() != TangleKind::string_link)
        throw KindError("product: both operands must be string links");
    if (a.components() != b.components())
        throw MismatchError("product: component count mismatch");
    if (a.doubled() || b.doubled())
        throw KindError("product: doubled encodings cannot be stacked");
    std::vector<std::int64_t> framings(a.components());
    for (int i = 0; i < a.components(); ++i)
        framings[i] = a.framings()[i] + b.framings()[i];
    return TangleRep::make(TangleKind::string_link, a.components(),
                           a.braid() * b.braid(), std::move(framings));
}

TangleRep close(const TangleRep &b) {
    if (b.kind() != TangleKind::bottom_tangle)
        throw KindError("close: expected a bottom tangle");
    return b.with_kind(TangleKind::link_closure);
}

TangleRep sl_move(const TangleRep &g, const SLMoveData &m) {
    if (g.kind() != TangleKind::bottom_tangle)
        throw KindError("sl_move: target must be a bottom tangle");
    if (m.pattern.kind() != TangleKind::string_link)
        throw KindError("sl_move: pattern must be a string link");
    if (m.pattern.components() != g.components())
        throw MismatchError("sl_move: pattern component count mismatch");
    if (m.pattern.doubled())
        throw KindError("sl_move: pattern must be a plain string link");
    const int n = g.components();
    std::vector<std::int64_t> twists = m.twists;
    if (twists.empty()) twists.assign(n, 0);
    if (static_cast<int>(twists.size()) != n)
        throw MismatchError("sl_move: twist vector length mismatch");

    std::vector<std::int64_t> framings(n);
    for (int i = 0; i < n; ++i) framings[i] = g.framings()[i] + twists[i];

    if (m.pattern.braid().word().letters().empty()) {
        // Trivial pattern: just adding full twists or nothing.
        return g.with_framings(std::move(framings));
    }

    BraidWord lower = cable2(m.pattern.braid().word(), twists);
    BraidWord upper(2 * n);
    if (g.doubled()) {
        upper = g.braid().word();
    } else {
        for (const BraidLetter &l : g.braid().word().letters())
            upper.append({l.pos, l.sign, true});
    }
    return TangleRep::make(TangleKind::bottom_tangle, n,
                           PureBraid(lower * upper), std::move(framings),
                           /*doubled=*/true);
}

}  // namespace milnor
