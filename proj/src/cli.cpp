#include "milnor/cli.hpp"

#include "milnor/version.hpp"

namespace milnor::cli {

namespace {

Json report_header(int truncation) {
    Json j;
    j["tool"] = "milnor";
    j["version"] = kVersion;
    j["truncation"] = truncation;
    return j;
}

CloverLink as_clover(const Document &doc, const std::string &file) {
    if (std::holds_alternative<CloverLink>(doc))
        return std::get<CloverLink>(doc);
    const TangleRep &t = std::get<TangleRep>(doc);
    if (t.kind() != TangleKind::bottom_tangle)
        throw ParseError(file + ": expected a clover_link or bottom_tangle");
    return CloverLink::make(t);
}

}  // namespace

Outcome run_compute(const std::string &file, int length, ComputeFlags flags) {
    if (length < 1) throw ParseError("compute: --length must be >= 1");
    const int q = length + 1;
    const Document doc = load_document(file);

    Json j = report_header(q);
    Json values;

    if (std::holds_alternative<CloverLink>(doc)) {
        const CloverLink &c = std::get<CloverLink>(doc);
        j["kind"] = "clover_link";
        const auto seqs =
            enumerate_sequences(c.components, length, flags.non_repeated);
        const auto vals = clover_mu_all(c, seqs, q);
        for (std::size_t t = 0; t < seqs.size(); ++t) {
            Json e;
            e["value"] = vals[t].value;
            e["certified"] = vals[t].certified;
            values[seqs[t].to_text()] = std::move(e);
        }
        j["values"] = std::move(values);
        return {std::move(j), 0};
    }

    TangleRep t = std::get<TangleRep>(doc);
    if (flags.mu_bar && t.kind() == TangleKind::string_link)
        t = to_bottom_tangle(t);
    if (flags.mu_bar && t.kind() == TangleKind::bottom_tangle) t = close(t);
    j["kind"] = kind_to_string(t.kind());

    const auto seqs =
        enumerate_sequences(t.components(), length, flags.non_repeated);
    const MilnorTable table = MilnorTable::compute(t, q);
    if (t.kind() == TangleKind::link_closure && !flags.representative_mu) {
        for (const SequenceIndex &I : seqs) {
            const ResidueValue r = mu_bar(table, I);
            Json e;
            e["delta"] = r.delta;
            e["value"] = r.value;
            values[I.to_text()] = std::move(e);
        }
    } else {
        if (t.kind() == TangleKind::link_closure) j["representative_mu"] = true;
        for (const SequenceIndex &I : seqs) values[I.to_text()] = table.mu(I);
    }
    j["values"] = std::move(values);
    return {std::move(j), 0};
}

Outcome run_compare(const std::string &file1, const std::string &file2,
                    const std::string &mode, int length) {
    const CloverLink left = as_clover(load_document(file1), file1);
    const CloverLink right = as_clover(load_document(file2), file2);
    if (left.components != right.components)
        throw ParseError("compare: component counts differ");
    const int n = left.components;

    CompareMode m = CompareMode::automatic;
    int k = 0;
    if (mode == "auto") {
        m = CompareMode::automatic;
    } else if (mode == "n3") {
        m = CompareMode::three_component;
    } else if (mode == "half") {
        m = CompareMode::half_vanishing;
    } else if (mode.rfind("ehck:", 0) == 0) {
        m = CompareMode::eh_ck;
        try {
            k = std::stoi(mode.substr(5));
        } catch (const std::exception &) {
            throw ParseError("compare: bad mode '" + mode + "'");
        }
    } else {
        throw ParseError("compare: unknown mode '" + mode + "'");
    }

    int canonical = 3;
    if (m == CompareMode::automatic)
        canonical = (n == 3) ? 3 : n;
    else if (m == CompareMode::half_vanishing)
        canonical = n;
    else if (m == CompareMode::eh_ck)
        canonical = 2 * k + 1;
    if (length < canonical)
        throw ParseError("compare: --length must be >= " +
                         std::to_string(canonical) + " for this mode");

    const Verdict v = compare_edge_homotopy(left, right, m, k);
    Json j = verdict_to_json(v, v.certified_length + 1);
    int code = 0;
    if (v.status == VerdictStatus::distinguished) code = 1;
    if (v.status == VerdictStatus::inconclusive) code = 2;
    return {std::move(j), code};
}

Outcome run_slmove(const std::string &file, const std::string &pattern_file,
                   const std::vector<std::int64_t> &twists) {
    const Document gdoc = load_document(file);
    if (!std::holds_alternative<TangleRep>(gdoc))
        throw ParseError(file + ": expected a tangle");
    TangleRep g = std::get<TangleRep>(gdoc);
    if (g.kind() == TangleKind::string_link) g = to_bottom_tangle(g);
    if (g.kind() != TangleKind::bottom_tangle)
        throw ParseError(file + ": SL-moves act on bottom tangles");

    const Document pdoc = load_document(pattern_file);
    if (!std::holds_alternative<TangleRep>(pdoc))
        throw ParseError(pattern_file + ": expected a tangle");
    TangleRep pattern = std::get<TangleRep>(pdoc);
    if (pattern.kind() == TangleKind::bottom_tangle)
        pattern = to_string_link(pattern);
    if (pattern.kind() != TangleKind::string_link)
        throw ParseError(pattern_file + ": pattern must be a string link");

    const TangleRep moved = sl_move(g, SLMoveData{pattern, twists});
    return {tangle_to_json(moved), 0};
}

Outcome run_normal_form(const std::string &file, int length) {
    const Document doc = load_document(file);
    if (!std::holds_alternative<TangleRep>(doc))
        throw ParseError(file + ": expected a tangle");
    TangleRep s = std::get<TangleRep>(doc);
    if (s.kind() == TangleKind::bottom_tangle) s = to_string_link(s);
    if (s.kind() != TangleKind::string_link)
        throw ParseError(file + ": normal forms act on string links");
    const int q = length + 1;
    const NormalFormResult r = normal_form(s, length, q);
    return {normal_form_to_json(r, q), 0};
}

Outcome run_certify(const std::string &file, int bound) {
    if (bound < 1) throw ParseError("certify: --bound must be >= 1");
    const CloverLink c = as_clover(load_document(file), file);
    const VanishingDepth vd =
        vanishing_depth(close(c.representative), bound);
    Json j = report_header(bound + 1);
    j["kind"] = "clover_link";
    j["vanishing_depth"] = vd.depth;
    j["saturated"] = vd.saturated;
    j["certified_length"] = 2 * vd.depth + 1;
    return {std::move(j), 0};
}

}  // namespace milnor::cli
