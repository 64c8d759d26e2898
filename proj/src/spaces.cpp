#include "hfischer/spaces.hpp"

#include <tuple>

#include "memo.hpp"

namespace hfischer {

std::string_view space_kind_name(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Hodge: return "hodge";
    case SpaceKind::Harmonic: return "harmonic";
    case SpaceKind::Infra: return "infra";
    case SpaceKind::MonoLeft: return "mono-left";
    case SpaceKind::MonoRight: return "mono-right";
    case SpaceKind::MonoS: return "mono-S";
    case SpaceKind::TwoSided: return "two-sided";
  }
  return "?";
}

SpaceKind parse_space_kind(std::string_view name) {
  for (SpaceKind kind : {SpaceKind::Hodge, SpaceKind::Harmonic, SpaceKind::Infra, SpaceKind::MonoLeft,
                         SpaceKind::MonoRight, SpaceKind::MonoS, SpaceKind::TwoSided}) {
    if (space_kind_name(kind) == name) return kind;
  }
  if (name == "mono-s") return SpaceKind::MonoS;
  throw std::invalid_argument("unknown space kind: " + std::string(name));
}

SubspaceBasis monomial_basis(int m, GradeSet grades, int k) {
  const MonomialBasis mb(m, grades, k);
  std::vector<CliffordPoly> vectors;
  vectors.reserve(mb.size());
  for (const auto& key : mb.keys()) vectors.push_back(CliffordPoly::monomial(key.alpha, key.blade));
  return SubspaceBasis(m, "P(m=" + std::to_string(m) + ",S=" + grades.to_string() + ",k=" + std::to_string(k) + ")",
                       std::move(vectors));
}

std::size_t monomial_dim(int m, GradeSet grades, int k) {
  if (k < 0) return 0;
  std::size_t blades = 0;
  for (int s : grades.grades()) {
    if (s > m) continue;
    std::size_t c = 1;
    for (int i = 0; i < s; ++i) c = c * static_cast<std::size_t>(m - i) / static_cast<std::size_t>(i + 1);
    blades += c;
  }
  return blades * monomial_count(m, k);
}

namespace {

GradeSet clip(GradeSet grades, int m) { return GradeSet::from_bits(grades.bits() & ((1U << (m + 1)) - 1)); }

std::vector<CliffordPoly> kernel_polys(const RationalMatrix& mat, const MonomialBasis& cols) {
  std::vector<CliffordPoly> out;
  for (const auto& v : nullspace(mat)) out.push_back(cols.to_poly(v));
  return out;
}

RationalMatrix defining_matrix(SpaceKind kind, int m, GradeSet grades, int k) {
  switch (kind) {
    case SpaceKind::Hodge:
      return operator_matrix(ops::dplus(), m, grades, k).stacked(operator_matrix(ops::dminus(), m, grades, k));
    case SpaceKind::Harmonic:
      return operator_matrix(derived_operator("LAPLACIAN"), m, grades, k);
    case SpaceKind::Infra:
      return operator_matrix(derived_operator("LAPLACIAN_TILDE"), m, grades, k);
    case SpaceKind::MonoLeft:
    case SpaceKind::MonoS:
      return operator_matrix(derived_operator("DIRAC"), m, grades, k);
    case SpaceKind::MonoRight:
      return operator_matrix(derived_operator("DIRAC_RIGHT"), m, grades, k);
    case SpaceKind::TwoSided:
      return operator_matrix(derived_operator("DIRAC"), m, grades, k)
          .stacked(operator_matrix(derived_operator("DIRAC_RIGHT"), m, grades, k));
  }
  throw std::logic_error("unreachable space kind");
}

std::string space_label(SpaceKind kind, int m, GradeSet grades, int k) {
  return std::string(space_kind_name(kind)) + "(m=" + std::to_string(m) + ",S=" + grades.to_string() +
         ",k=" + std::to_string(k) + ")";
}

bool same_span(int m, const std::vector<CliffordPoly>& a, const std::vector<CliffordPoly>& b) {
  if (a.size() != b.size()) return false;
  std::vector<CliffordPoly> all = a;
  all.insert(all.end(), b.begin(), b.end());
  if (all.empty()) return true;
  const MonomialBasis ambient = MonomialBasis::spanning(m, all);
  std::vector<std::vector<Rational>> cols;
  for (const auto& p : all) cols.push_back(ambient.coords(p));
  return rank(RationalMatrix::from_columns(ambient.size(), cols)) == a.size();
}

SubspaceBasis compute_space(SpaceKind kind, int m, GradeSet grades, int k) {
  std::string label = space_label(kind, m, grades, k);
  if (k < 0 || grades.empty()) return SubspaceBasis::empty(m, std::move(label));
  const MonomialBasis cols(m, grades, k);
  std::vector<CliffordPoly> vectors = kernel_polys(defining_matrix(kind, m, grades, k), cols);
  if (kind == SpaceKind::TwoSided) {
    const auto hodge_vectors = kernel_polys(defining_matrix(SpaceKind::Hodge, m, grades, k), cols);
    if (!same_span(m, vectors, hodge_vectors)) {
      throw TheoremViolation("two-sided monogenics differ from Hodge-de Rham solutions at " + label);
    }
  }
  return SubspaceBasis(m, std::move(label), std::move(vectors));
}

using SpaceKey = std::tuple<SpaceKind, int, std::uint32_t, int>;

detail::MemoTable<SpaceKey, SubspaceBasis>& cache() {
  static detail::MemoTable<SpaceKey, SubspaceBasis> table;
  return table;
}

}  // namespace

const SubspaceBasis& space_basis(SpaceKind kind, int m, GradeSet grades, int k) {
  check_dimension(m);
  grades = clip(grades, m);
  if (k < 0) k = -1;
  return cache().get(SpaceKey{kind, m, grades.bits(), k}, [&] { return compute_space(kind, m, grades, k); });
}

const SubspaceBasis& hodge(int m, int s, int k) {
  if (s < 0 || s > m) return space_basis(SpaceKind::Hodge, m, GradeSet{}, k);
  return space_basis(SpaceKind::Hodge, m, GradeSet::single(s), k);
}

void clear_space_cache() { cache().clear(); }

std::vector<OmegaWord> omega_words(std::size_t max_len) {
  std::vector<OmegaWord> out{OmegaWord{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (Letter lead : {Letter::Wedge, Letter::Dot}) {
      std::vector<Letter> letters;
      Letter l = lead;
      for (std::size_t i = 0; i < len; ++i) {
        letters.push_back(l);
        l = l == Letter::Wedge ? Letter::Dot : Letter::Wedge;
      }
      out.emplace_back(std::move(letters));
    }
  }
  return out;
}

bool word_annihilates(const OmegaWord& w, int m, int s) {
  const auto first = w.first_acting();
  if (!first) return false;
  return (s == 0 && *first == Letter::Dot) || (s == m && *first == Letter::Wedge);
}

SubspaceBasis image_basis(const SubspaceBasis& source, const PolyMap& op, std::string label) {
  const int m = source.dimension();
  std::vector<CliffordPoly> images;
  images.reserve(source.dim());
  for (const auto& v : source.vectors()) images.push_back(op(v));

  std::vector<CliffordPoly> nonzero;
  for (const auto& p : images) {
    if (!p.is_zero()) nonzero.push_back(p);
  }
  const MonomialBasis ambient = MonomialBasis::spanning(m, nonzero);
  std::vector<std::vector<Rational>> cols;
  for (const auto& p : images) cols.push_back(ambient.coords(p));
  const auto kernel = nullspace(RationalMatrix::from_columns(ambient.size(), cols));
  if (!kernel.empty()) {
    throw TheoremViolation("map is not injective on " + source.label() + " (building " + label + ")",
                           source.combine(kernel.front()));
  }
  return SubspaceBasis(m, std::move(label), std::move(images));
}

SubspaceBasis component_space(const OmegaWord& w, int m, int s, int k) {
  std::string label = (w.empty() ? std::string() : w.to_string() + "*") + "H^" + std::to_string(s) + "_" +
                      std::to_string(k);
  if (word_annihilates(w, m, s)) return SubspaceBasis::empty(m, std::move(label));
  const SubspaceBasis& h = hodge(m, s, k);
  if (h.is_zero()) return SubspaceBasis::empty(m, std::move(label));
  return image_basis(h, [&w](const CliffordPoly& p) { return word_apply(w, p); }, std::move(label));
}

}  // namespace hfischer
