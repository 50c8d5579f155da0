#include "milnor/io.hpp"

#include <fstream>

#include "milnor/version.hpp"

namespace milnor {

std::string kind_to_string(TangleKind k) {
    switch (k) {
        case TangleKind::string_link: return "string_link";
        case TangleKind::bottom_tangle: return "bottom_tangle";
        case TangleKind::link_closure: return "link_closure";
    }
    throw Error("kind_to_string: unreachable");
}

TangleKind kind_from_string(const std::string &s) {
    if (s == "string_link") return TangleKind::string_link;
    if (s == "bottom_tangle") return TangleKind::bottom_tangle;
    if (s == "link_closure") return TangleKind::link_closure;
    throw ParseError("tangle: unknown kind '" + s + "'");
}

Json tangle_to_json(const TangleRep &t) {
    Json j;
    j["kind"] = kind_to_string(t.kind());
    j["components"] = t.components();
    if (t.doubled()) j["doubled"] = true;
    j["braid"] = braid_to_text(t.braid().word());
    j["framings"] = t.framings();
    return j;
}

TangleRep tangle_from_json(const Json &j) {
    if (!j.is_object()) throw ParseError("tangle: expected a JSON object");
    for (const char *key : {"kind", "components", "braid"})
        if (!j.contains(key))
            throw ParseError(std::string("tangle: missing field '") + key + "'");
    const TangleKind kind = kind_from_string(j.at("kind").get<std::string>());
    const int n = j.at("components").get<int>();
    if (n < 1) throw ParseError("tangle: components must be >= 1");
    const bool doubled = j.value("doubled", false);
    const int strands = doubled ? 2 * n : n;
    BraidWord word = braid_from_text(strands, j.at("braid").get<std::string>());
    std::vector<std::int64_t> framings;
    if (j.contains("framings"))
        framings = j.at("framings").get<std::vector<std::int64_t>>();
    try {
        return TangleRep::make(kind, n, PureBraid(std::move(word)),
                               std::move(framings), doubled);
    } catch (const Error &e) {
        throw ParseError(std::string("tangle: ") + e.what());
    }
}

Json clover_to_json(const CloverLink &c) {
    Json j;
    j["kind"] = "clover_link";
    j["components"] = c.components;
    j["representative"] = tangle_to_json(c.representative);
    if (!c.label.empty()) j["label"] = c.label;
    if (!c.provenance.empty()) j["provenance"] = c.provenance;
    return j;
}

CloverLink clover_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("representative"))
        throw ParseError("clover: missing field 'representative'");
    TangleRep rep = tangle_from_json(j.at("representative"));
    if (rep.kind() != TangleKind::bottom_tangle)
        throw ParseError("clover: representative must be a bottom_tangle");
    CloverLink c = CloverLink::make(std::move(rep), j.value("label", ""),
                                    j.value("provenance", ""));
    if (j.contains("components") &&
        j.at("components").get<int>() != c.components)
        throw ParseError("clover: components does not match representative");
    return c;
}

Document document_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("document: missing field 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "clover_link") return clover_from_json(j);
    return tangle_from_json(j);
}

Json verdict_to_json(const Verdict &v, int truncation) {
    Json j;
    j["tool"] = "milnor";
    j["version"] = kVersion;
    j["truncation"] = truncation;
    switch (v.status) {
        case VerdictStatus::equivalent: j["status"] = "equivalent"; break;
        case VerdictStatus::distinguished: j["status"] = "distinguished"; break;
        case VerdictStatus::inconclusive: j["status"] = "inconclusive"; break;
    }
    j["relation"] = v.relation;
    j["certified_length"] = v.certified_length;
    j["depths"] = {v.depth_left, v.depth_right};
    Json ws = Json::array();
    for (const Witness &w : v.witnesses) {
        Json e;
        e["I"] = w.I.to_text();
        e["left"] = w.left;
        e["right"] = w.right;
        ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
    return j;
}

Json normal_form_to_json(const NormalFormResult &r, int truncation) {
    Json j;
    j["tool"] = "milnor";
    j["version"] = kVersion;
    j["truncation"] = truncation;
    Json stages = Json::array();
    for (std::size_t i = 0; i < r.stages.size(); ++i) {
        Json stage = Json::array();
        for (const NormalFormTerm &t : r.stages[i]) {
            Json e;
            e["pi"] = t.pi;
            e["exponent"] = t.exponent;
            stage.push_back(std::move(e));
        }
        stages.push_back(std::move(stage));
    }
    j["stages"] = std::move(stages);
    j["accumulated"] = tangle_to_json(r.accumulated);
    return j;
}

Document load_document(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(path + ": " + e.what());
    }
    return document_from_json(j);
}

void save_json(const std::string &path, const Json &j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace milnor
