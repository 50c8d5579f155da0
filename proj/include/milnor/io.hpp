#ifndef MILNOR_IO_HPP
#define MILNOR_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "milnor/clover.hpp"
#include "milnor/tangle.hpp"

namespace milnor {

// Order-preserving JSON everywhere: reports are byte-stable.
using Json = nlohmann::ordered_json;

Json tangle_to_json(const TangleRep &t);
TangleRep tangle_from_json(const Json &j);

Json clover_to_json(const CloverLink &c);
CloverLink clover_from_json(const Json &j);

// A document is either a tangle or a clover link, keyed by "kind".
using Document = std::variant<TangleRep, CloverLink>;
Document document_from_json(const Json &j);

Json verdict_to_json(const Verdict &v, int truncation);
Json normal_form_to_json(const NormalFormResult &r, int truncation);

std::string kind_to_string(TangleKind k);
TangleKind kind_from_string(const std::string &s);

Document load_document(const std::string &path);
void save_json(const std::string &path, const Json &j);

}  // namespace milnor

#endif
