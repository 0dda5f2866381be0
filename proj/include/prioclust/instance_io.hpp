#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "json.hpp"
#include "prioclust/instance.hpp"

namespace prioclust {

/// Reads an instance document:
///
///   { "colors": c, "k": int, "requirements": [m_1, ..., m_c],
///     "clients":    [ {"id": str, "color": int, "radius": "p/q"} ],
///     "facilities": [ {"id": str, "weight": int} ],
///     "distances":  { "<idA>|<idB>": "p/q", ... } }
///
/// Distance keys name an unordered pair; both orders are accepted but the
/// two must agree if both appear. Self pairs may be listed (must be 0).
/// Throws ParseError for malformed JSON or fields, ValidationError otherwise.
Instance load_instance(std::istream& in);
Instance load_instance_text(std::string_view text);
Instance instance_from_json(const nlohmann::json& doc);

/// Canonical document: ids sorted, pair keys in lexicographic order.
nlohmann::json instance_to_json(const Instance& inst);
std::string dump_instance(const Instance& inst);

/// Rationals are written as "p/q" strings, or bare integers when integral.
nlohmann::json rational_to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& value, std::string_view what);

/// Hex FNV-1a 64 digest of the canonical instance document.
std::string instance_digest(const Instance& inst);

}  // namespace prioclust
