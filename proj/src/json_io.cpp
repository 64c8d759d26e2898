#include "hfischer/json_io.hpp"

#include <algorithm>

namespace hfischer {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InputError(what); }

const Json& field(const Json& j, const char* key, std::string_view where) {
  if (!j.is_object()) fail(std::string(where) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string(where) + ": missing field \"" + key + "\"");
  return *it;
}

int read_dimension(const Json& j, std::string_view where) {
  const Json& m = field(j, "m", where);
  if (!m.is_number_integer()) fail(std::string(where) + ": \"m\" must be an integer");
  const auto value = m.get<long long>();
  if (value < 1 || value > kMaxDimension) {
    fail(std::string(where) + ": \"m\" must lie in [1, " + std::to_string(kMaxDimension) + "]");
  }
  return static_cast<int>(value);
}

Rational read_coeff(const Json& j, std::string_view where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
  } catch (const std::invalid_argument& e) {
    fail(std::string(where) + ": " + e.what());
  }
  fail(std::string(where) + ": coefficient must be a rational string such as \"-3/4\"");
}

std::vector<int> read_ints(const Json& j, std::string_view where) {
  if (!j.is_array()) fail(std::string(where) + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) fail(std::string(where) + ": expected an array of integers");
    const auto v = e.get<long long>();
    if (v < 0 || v > 1000) fail(std::string(where) + ": entry out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

Blade read_blade(const Json& j, int m, std::string_view where) {
  try {
    const auto indices = read_ints(j, where);
    return Blade::from_indices(indices, m);
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(std::string(where) + ": " + e.what());
  }
}

const Json& terms_of(const Json& j, std::string_view where) {
  const Json& terms = field(j, "terms", where);
  if (!terms.is_array()) fail(std::string(where) + ": \"terms\" must be an array");
  return terms;
}

Json blade_json(Blade b) { return Json(b.indices()); }

bool looks_like_poly(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("terms") || !j["terms"].is_array()) return false;
  const auto& terms = j["terms"];
  return std::all_of(terms.begin(), terms.end(), [](const Json& t) { return t.is_object() && t.contains("alpha"); });
}

void collect(const Json& j, std::vector<CliffordPoly>& out) {
  if (looks_like_poly(j)) {
    out.push_back(poly_from_json(j));
    return;
  }
  if (j.is_structured()) {
    for (const auto& child : j) collect(child, out);
  }
}

}  // namespace

Json parse_json_text(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail(std::string(source) + ": malformed JSON at byte " + std::to_string(e.byte) + " (line " +
         std::to_string(line) + ", column " + std::to_string(column) + ")");
  }
}

Json to_json(const Multivector& v) {
  Json terms = Json::array();
  for (const auto& [blade, q] : v.terms()) terms.push_back(Json{{"blade", blade_json(blade)}, {"coeff", to_string(q)}});
  return Json{{"m", v.dimension()}, {"terms", std::move(terms)}};
}

Json to_json(const CliffordPoly& p) {
  Json terms = Json::array();
  for (const auto& [mono, q] : p.terms()) {
    terms.push_back(
        Json{{"alpha", mono.alpha.exponents()}, {"blade", blade_json(mono.blade)}, {"coeff", to_string(q)}});
  }
  return Json{{"m", p.dimension()}, {"terms", std::move(terms)}};
}

Json to_json(const SubspaceBasis& b) {
  Json vectors = Json::array();
  for (const auto& v : b.vectors()) vectors.push_back(to_json(v));
  return Json{{"label", b.label()}, {"m", b.dimension()}, {"dim", b.dim()}, {"basis", std::move(vectors)}};
}

Json to_json(const DecompositionResult& d) {
  Json components = Json::array();
  for (const auto& c : d.components) components.push_back(Json{{"label", c.label}, {"part", to_json(c.part)}});
  return Json{{"input", to_json(d.input)},
              {"components", std::move(components)},
              {"residual", to_json(d.residual)},
              {"exact", d.exact()}};
}

Json to_json(const TheoremReport& r) {
  Json components = Json::array();
  for (const auto& c : r.components) components.push_back(Json{{"label", c.label}, {"dim", c.dim}});
  return Json{{"theorem", r.theorem},
              {"m", r.m},
              {"S", r.grades.grades()},
              {"k", r.k},
              {"components", std::move(components)},
              {"total_dim", r.total_dim()},
              {"target_dim", r.target_dim},
              {"rank", r.rank},
              {"in_kernel", r.in_kernel},
              {"direct_sum", r.direct_sum},
              {"fills", r.fills},
              {"ok", r.ok()},
              {"message", r.message},
              {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}};
}

Multivector multivector_from_json(const Json& j) {
  const int m = read_dimension(j, "multivector");
  Multivector out(m);
  std::size_t i = 0;
  for (const auto& term : terms_of(j, "multivector")) {
    const std::string where = "multivector term " + std::to_string(i++);
    out.add_term(read_blade(field(term, "blade", where), m, where), read_coeff(field(term, "coeff", where), where));
  }
  return out;
}

CliffordPoly poly_from_json(const Json& j) {
  const int m = read_dimension(j, "polynomial");
  CliffordPoly out(m);
  std::size_t i = 0;
  for (const auto& term : terms_of(j, "polynomial")) {
    const std::string where = "polynomial term " + std::to_string(i++);
    const auto alpha = read_ints(field(term, "alpha", where), where + " alpha");
    if (alpha.size() != static_cast<std::size_t>(m)) {
      fail(where + ": alpha must have exactly m = " + std::to_string(m) + " entries");
    }
    const Blade blade = term.contains("blade") ? read_blade(term["blade"], m, where) : Blade{};
    out.add_term(Monomial{MultiIndex(m, alpha), blade}, read_coeff(field(term, "coeff", where), where));
  }
  return out;
}

std::vector<CliffordPoly> collect_polys(const Json& j) {
  std::vector<CliffordPoly> out;
  collect(j, out);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hfischer
