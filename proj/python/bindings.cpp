// Python bindings. Polynomials and results cross the boundary as JSON text in the same
// format the command-line tool reads and writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "hfischer/decompose.hpp"
#include "hfischer/json_io.hpp"
#include "hfischer/operators.hpp"
#include "hfischer/spaces.hpp"
#include "hfischer/verify.hpp"

namespace py = pybind11;
using namespace hfischer;

namespace {

CliffordPoly load(const std::string& text) { return poly_from_json(parse_json_text(text, "poly")); }

std::string apply_op(const std::string& op, const std::string& poly) {
  return dump(to_json(apply(derived_operator(op), load(poly))));
}

std::string apply_word(const std::string& word, const std::string& poly) {
  return dump(to_json(word_apply(OmegaWord::parse(word), load(poly))));
}

std::string basis(const std::string& kind_name, int m, int k, std::optional<std::vector<int>> grades) {
  check_dimension(m);
  const SpaceKind kind = parse_space_kind(kind_name);
  GradeSet set;
  if (grades) {
    set = GradeSet::of(*grades);
  } else if (kind == SpaceKind::MonoLeft || kind == SpaceKind::MonoRight || kind == SpaceKind::TwoSided) {
    set = GradeSet::full(m);
  } else {
    throw std::invalid_argument(kind_name + " needs grades");
  }
  if (k < 0 || k > kMaxDegree) throw std::invalid_argument("k must lie in [0, " + std::to_string(kMaxDegree) + "]");
  py::gil_scoped_release release;
  const SubspaceBasis& b = space_basis(kind, m, set, k);
  Json vectors = Json::array();
  for (const auto& v : b.vectors()) vectors.push_back(to_json(v));
  return dump(Json{{"kind", space_kind_name(kind)},
                   {"m", m},
                   {"S", set.grades()},
                   {"k", k},
                   {"dim", b.dim()},
                   {"basis", std::move(vectors)}});
}

std::string decompose(const std::string& theorem, const std::string& poly, const std::string& mode,
                      std::optional<std::vector<int>> grades, const std::string& side) {
  if (side != "left" && side != "right") throw std::invalid_argument("side must be left or right");
  DecomposeRequest request{theorem, mode, std::nullopt, side == "left" ? MonogenicSide::Left : MonogenicSide::Right};
  if (grades) request.grades = GradeSet::of(*grades);
  const CliffordPoly p = load(poly);
  py::gil_scoped_release release;
  return dump(to_json(decompose_named(p, request)));
}

std::string h_act(const std::vector<std::vector<std::string>>& params, const std::string& poly) {
  const CliffordPoly p = load(poly);
  std::vector<Multivector> factors;
  for (const auto& t : params) {
    std::vector<Rational> q;
    for (const auto& text : t) q.push_back(parse_rational(text));
    factors.push_back(rational_unit_vector(p.dimension(), q));
  }
  return dump(to_json(h_action(RotorElement(factors), p)));
}

std::string verify(int m, int k_max, std::vector<std::string> theorems, double budget_seconds, unsigned threads,
                   std::uint64_t seed, int samples) {
  VerifyOptions options;
  options.m = m;
  options.k_max = k_max;
  options.theorems = std::move(theorems);
  options.budget_seconds = budget_seconds;
  options.threads = threads;
  options.seed = seed;
  options.samples = samples;
  py::gil_scoped_release release;
  return dump(to_json(verify_report(options)));
}

}  // namespace

PYBIND11_MODULE(_hfischer, mod) {
  mod.doc() = "Exact Fischer decompositions of Clifford-valued polynomials";

  py::register_exception<InputError>(mod, "InputError", PyExc_ValueError);

  mod.def("operator_names", &derived_operator_names);
  mod.def("theorem_names", &theorem_names);
  mod.def("decomposition_names", &decomposition_names);
  mod.def("apply", &apply_op, py::arg("op"), py::arg("poly"));
  mod.def("apply_word", &apply_word, py::arg("word"), py::arg("poly"));
  mod.def("basis", &basis, py::arg("kind"), py::arg("m"), py::arg("k"), py::arg("grades") = py::none());
  mod.def("decompose", &decompose, py::arg("theorem"), py::arg("poly"), py::arg("mode") = "",
          py::arg("grades") = py::none(), py::arg("side") = "left");
  mod.def("h_action", &h_act, py::arg("params"), py::arg("poly"));
  mod.def("verify", &verify, py::arg("m"), py::arg("k_max"), py::arg("theorems"), py::arg("budget_seconds") = 0.0,
          py::arg("threads") = 0U, py::arg("seed") = kDefaultSeed, py::arg("samples") = 2);
  mod.def("clear_cache", &clear_space_cache);
}
