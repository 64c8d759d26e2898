#pragma once

// JSON interchange for multivectors, polynomials, bases, decompositions and reports.
// Rationals are always strings ("p/q" or "p"); objects keep a fixed key order.

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hfischer/decompose.hpp"

namespace hfischer {

using Json = nlohmann::ordered_json;

/// Malformed or semantically invalid input document.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses text, reporting syntax errors with byte offset, line and column.
Json parse_json_text(std::string_view text, std::string_view source = "input");

Json to_json(const Multivector& v);
Json to_json(const CliffordPoly& p);
Json to_json(const SubspaceBasis& b);
Json to_json(const DecompositionResult& d);
Json to_json(const TheoremReport& r);

Multivector multivector_from_json(const Json& j);
CliffordPoly poly_from_json(const Json& j);

/// Every polynomial object ({"m", "terms"} with alpha entries) found anywhere in j, in document order.
std::vector<CliffordPoly> collect_polys(const Json& j);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace hfischer
