#include "hfischer/decompose.hpp"

#include <map>
#include <tuple>

#include "memo.hpp"

namespace hfischer {

CliffordPoly DecompositionResult::reconstruct() const {
  CliffordPoly sum = residual;
  for (const auto& c : components) sum += c.part;
  return sum;
}

const CliffordPoly* DecompositionResult::component(std::string_view label) const {
  for (const auto& c : components) {
    if (c.label == label) return &c.part;
  }
  return nullptr;
}

std::size_t TheoremReport::total_dim() const {
  std::size_t total = 0;
  for (const auto& c : components) total += c.dim;
  return total;
}

namespace {

std::string hlabel(const std::string& prefix, int s, int k) {
  return prefix + "H^" + std::to_string(s) + "_" + std::to_string(k);
}

std::string x_power(int p) { return p == 1 ? "x" : "x^" + std::to_string(p); }

std::string tower_label(TowerMode mode, int p, int s, int k) {
  const std::string sk = (s >= 0 ? "^" + std::to_string(s) : std::string()) + "_" + std::to_string(k);
  switch (mode) {
    case TowerMode::Harmonic: return (p > 0 ? "|x|^" + std::to_string(2 * p) + "*" : "") + "harmonic" + sk;
    case TowerMode::Infra: return p > 0 ? x_power(p) + "*infra" + sk + "*" + x_power(p) : "infra" + sk;
    case TowerMode::Monogenic: return (p > 0 ? x_power(p) + "*" : "") + "mono" + sk;
  }
  return {};
}

CliffordPoly repeat(const PolyMap& op, CliffordPoly p, int times) {
  for (int i = 0; i < times; ++i) p = op(p);
  return p;
}

void note_failure(TheoremReport& report, const std::string& message, std::optional<CliffordPoly> witness) {
  if (report.message.empty()) report.message = message;
  if (!report.witness && witness) report.witness = std::move(witness);
}

TheoremReport new_report(std::string theorem, int m, GradeSet grades, int k) {
  TheoremReport report;
  report.theorem = std::move(theorem);
  report.m = m;
  report.grades = grades;
  report.k = k;
  return report;
}

// Checks the parts against the defining operators, the target grades and the ambient
// monomial space, then certifies directness and that the rank reaches target_dim.
void certify(TheoremReport& report, const std::vector<SubspaceBasis>& parts, const MonomialBasis& ambient,
             std::size_t target_dim, const std::vector<OperatorSpec>& killers, const SubspaceBasis* target) {
  report.target_dim = target_dim;
  for (const auto& part : parts) report.components.push_back({part.label(), part.dim()});

  for (const auto& part : parts) {
    for (const auto& v : part.vectors()) {
      if (!v.valued_in(report.grades)) {
        report.in_kernel = false;
        note_failure(report, part.label() + " leaves the target grades", v);
      }
      for (const auto& op : killers) {
        if (!apply(op, v).is_zero()) {
          report.in_kernel = false;
          note_failure(report, part.label() + " is not annihilated by " + op.to_string(), v);
        }
      }
    }
  }

  DirectSumReport sum;
  try {
    sum = direct_sum_check(parts, ambient);
  } catch (const std::invalid_argument& e) {
    report.in_kernel = false;
    note_failure(report, e.what(), std::nullopt);
    return;
  }
  report.rank = sum.rank;
  report.direct_sum = sum.independent;
  if (!sum.independent) {
    std::vector<CliffordPoly> all;
    for (const auto& part : parts) all.insert(all.end(), part.vectors().begin(), part.vectors().end());
    note_failure(report, "components are not independent", dependency_witness(ambient.dimension(), all));
  }
  report.fills = report.in_kernel && sum.rank == target_dim;
  if (report.in_kernel && sum.rank != target_dim) {
    std::optional<CliffordPoly> witness;
    if (target && sum.rank < target_dim) {
      std::vector<std::vector<Rational>> cols;
      for (const auto& part : parts) {
        for (const auto& v : part.vectors()) cols.push_back(ambient.coords(v));
      }
      const RationalMatrix mat = RationalMatrix::from_columns(ambient.size(), cols);
      for (const auto& t : target->vectors()) {
        if (!solve(mat, ambient.coords(t))) {
          witness = t;
          break;
        }
      }
    }
    note_failure(report,
                 "components span " + std::to_string(sum.rank) + " of " + std::to_string(target_dim) + " dimensions",
                 std::move(witness));
  }
}

// A certified refinement prepared for repeated exact splitting.
struct Splitter {
  Refinement refinement;
  MonomialBasis ambient;
  std::optional<ColumnSolver> solver;
};

Splitter make_splitter(Refinement refinement, MonomialBasis ambient) {
  Splitter out{std::move(refinement), std::move(ambient), std::nullopt};
  if (!out.refinement.report.direct_sum) return out;
  std::vector<std::vector<Rational>> cols;
  for (const auto& part : out.refinement.parts) {
    for (const auto& v : part.vectors()) cols.push_back(out.ambient.coords(v));
  }
  out.solver.emplace(RationalMatrix::from_columns(out.ambient.size(), cols));
  return out;
}

void push_component(std::vector<Component>& out, const std::string& label, const CliffordPoly& part) {
  if (part.is_zero()) return;
  for (auto& c : out) {
    if (c.label == label) {
      c.part += part;
      return;
    }
  }
  out.push_back({label, part});
}

// Splits `piece` along the splitter's parts; false when it lies outside their span.
bool split_into(const Splitter& splitter, const CliffordPoly& piece, std::vector<Component>& out) {
  if (!splitter.solver) return false;
  for (const auto& [mono, q] : piece.terms()) {
    if (!splitter.ambient.index_of(mono)) return false;
  }
  const auto x = splitter.solver->solve(splitter.ambient.coords(piece));
  if (!x) return false;
  std::size_t offset = 0;
  for (const auto& part : splitter.refinement.parts) {
    std::span<const Rational> slice(x->data() + offset, part.dim());
    push_component(out, part.label(), part.combine(slice));
    offset += part.dim();
  }
  return true;
}

void require_ok(const TheoremReport& report) {
  if (!report.ok()) {
    throw TheoremViolation(report.theorem + " fails at m=" + std::to_string(report.m) +
                               ", S=" + report.grades.to_string() + ", k=" + std::to_string(report.k) + ": " +
                               report.message,
                           report.witness);
  }
}

// Builds parts with a callback, turning construction-time violations into a failed report.
template <typename Build>
bool build_parts(TheoremReport& report, std::vector<SubspaceBasis>& parts, Build&& build) {
  try {
    build(parts);
    return true;
  } catch (const TheoremViolation& e) {
    report.in_kernel = false;
    note_failure(report, e.what(), e.witness());
    for (const auto& part : parts) report.components.push_back({part.label(), part.dim()});
    return false;
  }
}

SubspaceBasis w_space(int m, int s, int k, bool modified) {
  const std::string label = (modified ? "Wt^" : "W^") + std::to_string(s) + "_" + std::to_string(k);
  if (s <= 0 || s >= m || k < 2) return SubspaceBasis::empty(m, label);
  const Rational c1 = k - 2 + s;
  const Rational c2 = k - 2 + m - s;
  const OperatorSpec wd = ops::xwedge() * ops::xdot();
  const OperatorSpec dw = ops::xdot() * ops::xwedge();
  const OperatorSpec op = modified ? OperatorSpec::sum(OperatorSpec::scaled((c1 + 1) * c2, wd),
                                                       OperatorSpec::scaled((c2 + 1) * c1, dw))
                                   : OperatorSpec::sum(OperatorSpec::scaled(c2, wd), OperatorSpec::scaled(-c1, dw));
  return image_basis(hodge(m, s, k - 2), [&op](const CliffordPoly& p) { return apply(op, p); }, label);
}

void first_three(int m, int s, int k, std::vector<SubspaceBasis>& parts) {
  const SubspaceBasis& h = hodge(m, s, k);
  parts.push_back(SubspaceBasis(m, hlabel("", s, k), h.vectors()));
  parts.push_back(component_space(OmegaWord::parse("w"), m, s - 1, k - 1));
  parts.push_back(component_space(OmegaWord::parse("d"), m, s + 1, k - 1));
}

Refinement kernel_refine(std::string theorem, int m, int s, int k, bool modified, bool with_w) {
  const GradeSet grades = GradeSet::single(s);
  Refinement out{new_report(std::move(theorem), m, grades, k), {}};
  if (!build_parts(out.report, out.parts, [&](std::vector<SubspaceBasis>& parts) {
        first_three(m, s, k, parts);
        if (with_w) parts.push_back(w_space(m, s, k, modified));
      })) {
    return out;
  }
  const MonomialBasis ambient(m, grades, k);
  if (with_w) {
    const SubspaceBasis& target = space_basis(modified ? SpaceKind::Infra : SpaceKind::Harmonic, m, grades, k);
    certify(out.report, out.parts, ambient, target.dim(),
            {derived_operator(modified ? "LAPLACIAN_TILDE" : "LAPLACIAN")}, &target);
  } else {
    const OperatorSpec lap = derived_operator("LAPLACIAN");
    const OperatorSpec lap_tilde = derived_operator("LAPLACIAN_TILDE");
    const RationalMatrix joint = operator_matrix(lap, m, grades, k).stacked(operator_matrix(lap_tilde, m, grades, k));
    std::vector<CliffordPoly> vectors;
    for (const auto& v : nullspace(joint)) vectors.push_back(ambient.to_poly(v));
    const SubspaceBasis target(m, "harmonic-infra", std::move(vectors));
    certify(out.report, out.parts, ambient, target.dim(), {lap, lap_tilde}, &target);
  }
  return out;
}

using FrameKey = std::tuple<int, int, int, int, std::uint32_t, int>;

detail::MemoTable<FrameKey, Splitter>& splitters() {
  static detail::MemoTable<FrameKey, Splitter> table;
  return table;
}

enum FrameFamily { kFischerH = 0, kTower = 1, kRefine = 2 };

const Splitter& fischer_h_splitter(int m, int s, int k) {
  return splitters().get(FrameKey{kFischerH, m, s, k, 0, 0},
                         [&] { return make_splitter(fischer_h_frame(m, s, k), MonomialBasis(m, GradeSet::single(s), k)); });
}

const Splitter& tower_splitter(int m, int s, int k, TowerMode mode) {
  if (mode == TowerMode::Monogenic) s = -1;
  return splitters().get(FrameKey{kTower, m, s, k, static_cast<std::uint32_t>(mode), 0}, [&] {
    const GradeSet grades = mode == TowerMode::Monogenic ? GradeSet::full(m) : GradeSet::single(s);
    return make_splitter(classical_tower(m, s, k, mode), MonomialBasis(m, grades, k));
  });
}

Refinement refinement_for(const RefineOptions& options, int m, int s, int k, GradeSet grades) {
  switch (options.kind) {
    case RefinementKind::Homma: return homma_refine(m, s, k);
    case RefinementKind::Infra: return inframonogenic_refine(m, s, k);
    case RefinementKind::InfraHarmonic: return harmonic_infra_intersection(m, s, k);
    case RefinementKind::Monogenic: return monogenic_refine(m, k, grades, options.side);
  }
  throw std::logic_error("unreachable refinement kind");
}

const Splitter& refine_splitter(const RefineOptions& options, int m, int s, int k, GradeSet grades) {
  const bool mono = options.kind == RefinementKind::Monogenic;
  const FrameKey key{kRefine + static_cast<int>(options.kind) * 4 + static_cast<int>(options.side), m,
                     mono ? -1 : s, k, mono ? grades.bits() : 0, 0};
  return splitters().get(key, [&] {
    Refinement r = refinement_for(options, m, s, k, grades);
    require_ok(r.report);
    return make_splitter(std::move(r), MonomialBasis(m, mono ? grades : GradeSet::single(s), k));
  });
}

}  // namespace

Refinement fischer_h_frame(int m, int s, int k) {
  check_dimension(m);
  const GradeSet grades = GradeSet::single(s);
  Refinement out{new_report("fischer-h", m, grades, k), {}};
  if (!build_parts(out.report, out.parts, [&](std::vector<SubspaceBasis>& parts) {
        for (const auto& w : omega_words(static_cast<std::size_t>(k))) {
          const int kk = k - static_cast<int>(w.length());
          const int ss = s - w.grade_shift();
          if (ss < 0 || ss > m) continue;
          SubspaceBasis part = component_space(w, m, ss, kk);
          if (!part.is_zero()) parts.push_back(std::move(part));
        }
      })) {
    return out;
  }
  const MonomialBasis ambient(m, grades, k);
  certify(out.report, out.parts, ambient, ambient.size(), {}, nullptr);
  return out;
}

DecompositionResult fischer_h_decompose(const CliffordPoly& p) {
  DecompositionResult out{p, {}, CliffordPoly(p.dimension())};
  for (const auto& piece : bigrade_split(p)) {
    const Splitter& splitter = fischer_h_splitter(p.dimension(), piece.s, piece.k);
    require_ok(splitter.refinement.report);
    if (!split_into(splitter, piece.part, out.components)) {
      throw TheoremViolation("pieces of the Fischer decomposition do not span P^" + std::to_string(piece.s) + "_" +
                                 std::to_string(piece.k),
                             piece.part);
    }
  }
  return out;
}

Refinement homma_refine(int m, int s, int k) {
  check_dimension(m);
  return kernel_refine("homma", m, s, k, false, true);
}

Refinement inframonogenic_refine(int m, int s, int k) {
  check_dimension(m);
  return kernel_refine("infra", m, s, k, true, true);
}

Refinement harmonic_infra_intersection(int m, int s, int k) {
  check_dimension(m);
  return kernel_refine("infra-harmonic", m, s, k, false, false);
}

GradeSet shifted_grades(GradeSet grades, int m) {
  GradeSet out;
  for (int s = 1; s < m; ++s) {
    if (grades.contains(s - 1) && grades.contains(s + 1)) out = out.with(s);
  }
  return out;
}

Refinement monogenic_refine(int m, int k, GradeSet grades, MonogenicSide side) {
  check_dimension(m);
  grades = GradeSet::from_bits(grades.bits() & ((1U << (m + 1)) - 1));
  const bool left = side == MonogenicSide::Left;
  Refinement out{new_report(left ? "monogenic" : "monogenic-right", m, grades, k), {}};
  const OperatorSpec x_op = derived_operator(left ? "X" : "X_TILDE");
  if (!build_parts(out.report, out.parts, [&](std::vector<SubspaceBasis>& parts) {
        for (int s : grades.grades()) parts.push_back(SubspaceBasis(m, hlabel("", s, k), hodge(m, s, k).vectors()));
        for (int s : shifted_grades(grades, m).grades()) {
          parts.push_back(image_basis(
              hodge(m, s, k - 1), [&x_op](const CliffordPoly& p) { return apply(x_op, p); },
              hlabel(left ? "X*" : "Xt*", s, k - 1)));
        }
      })) {
    return out;
  }
  const SubspaceBasis& target = space_basis(left ? SpaceKind::MonoS : SpaceKind::MonoRight, m, grades, k);
  certify(out.report, out.parts, MonomialBasis(m, grades, k), target.dim(),
          {derived_operator(left ? "DIRAC" : "DIRAC_RIGHT")}, &target);
  return out;
}

Refinement classical_tower(int m, int s, int k, TowerMode mode) {
  check_dimension(m);
  const GradeSet grades = mode == TowerMode::Monogenic ? GradeSet::full(m) : GradeSet::single(s);
  Refinement out{new_report(std::string("classical-") + std::string(tower_mode_name(mode)), m, grades, k), {}};
  if (!build_parts(out.report, out.parts, [&](std::vector<SubspaceBasis>& parts) {
        switch (mode) {
          case TowerMode::Harmonic: {
            const OperatorSpec norm = derived_operator("NORM_SQUARED");
            for (int p = 0; 2 * p <= k; ++p) {
              parts.push_back(image_basis(
                  space_basis(SpaceKind::Harmonic, m, grades, k - 2 * p),
                  [&norm, p](const CliffordPoly& q) {
                    return repeat([&norm](const CliffordPoly& r) { return apply(norm, r); }, q, p);
                  },
                  tower_label(mode, p, s, k - 2 * p)));
            }
            break;
          }
          case TowerMode::Infra:
            for (int p = 0; 2 * p <= k; ++p) {
              parts.push_back(image_basis(
                  space_basis(SpaceKind::Infra, m, grades, k - 2 * p),
                  [p](const CliffordPoly& q) { return repeat(sandwich_x, q, p); },
                  tower_label(mode, p, s, k - 2 * p)));
            }
            break;
          case TowerMode::Monogenic:
            for (int p = 0; p <= k; ++p) {
              parts.push_back(image_basis(
                  space_basis(SpaceKind::MonoLeft, m, grades, k - p),
                  [p](const CliffordPoly& q) {
                    return repeat([](const CliffordPoly& r) { return x_mul(r, XMode::Full); }, q, p);
                  },
                  tower_label(mode, p, -1, k - p)));
            }
            break;
        }
      })) {
    return out;
  }
  const MonomialBasis ambient(m, grades, k);
  certify(out.report, out.parts, ambient, ambient.size(), {}, nullptr);
  return out;
}

DecompositionResult classical_fischer_decompose(const CliffordPoly& p, TowerMode mode) {
  const int m = p.dimension();
  DecompositionResult out{p, {}, CliffordPoly(m)};
  std::map<int, CliffordPoly> by_degree;
  for (const auto& piece : bigrade_split(p)) {
    if (mode == TowerMode::Monogenic) {
      by_degree.try_emplace(piece.k, m).first->second += piece.part;
      continue;
    }
    const Splitter& splitter = tower_splitter(m, piece.s, piece.k, mode);
    require_ok(splitter.refinement.report);
    if (!split_into(splitter, piece.part, out.components)) {
      throw TheoremViolation("classical tower does not span its bigrade", piece.part);
    }
  }
  for (const auto& [k, part] : by_degree) {
    const Splitter& splitter = tower_splitter(m, -1, k, mode);
    require_ok(splitter.refinement.report);
    if (!split_into(splitter, part, out.components)) {
      throw TheoremViolation("classical tower does not span its degree", part);
    }
  }
  return out;
}

DecompositionResult refine_decompose(const CliffordPoly& p, const RefineOptions& options) {
  const int m = p.dimension();
  DecompositionResult out{p, {}, CliffordPoly(m)};
  if (options.kind == RefinementKind::Monogenic) {
    const GradeSet grades = options.grades.value_or(GradeSet::full(m));
    std::map<int, CliffordPoly> by_degree;
    for (const auto& piece : bigrade_split(p)) by_degree.try_emplace(piece.k, m).first->second += piece.part;
    for (const auto& [k, part] : by_degree) {
      if (!split_into(refine_splitter(options, m, -1, k, grades), part, out.components)) out.residual += part;
    }
    return out;
  }
  for (const auto& piece : bigrade_split(p)) {
    const Splitter& splitter = refine_splitter(options, m, piece.s, piece.k, GradeSet::single(piece.s));
    if (!split_into(splitter, piece.part, out.components)) out.residual += piece.part;
  }
  return out;
}

std::string_view tower_mode_name(TowerMode mode) {
  switch (mode) {
    case TowerMode::Harmonic: return "harmonic";
    case TowerMode::Monogenic: return "monogenic";
    case TowerMode::Infra: return "infra";
  }
  return "?";
}

TowerMode parse_tower_mode(std::string_view name) {
  for (TowerMode mode : {TowerMode::Harmonic, TowerMode::Monogenic, TowerMode::Infra}) {
    if (tower_mode_name(mode) == name) return mode;
  }
  throw std::invalid_argument("unknown tower mode: " + std::string(name));
}

DecompositionResult decompose_named(const CliffordPoly& p, const DecomposeRequest& request) {
  const std::string& theorem = request.theorem;
  if (!request.mode.empty() && theorem != "classical") {
    throw std::invalid_argument("a tower mode only applies to the classical decomposition");
  }
  const bool monogenic = theorem == "monogenic" || theorem == "mt";
  if (request.grades && !monogenic) throw std::invalid_argument("grades only apply to monogenic or mt");
  if (request.side == MonogenicSide::Right && !monogenic) {
    throw std::invalid_argument("a side only applies to monogenic or mt");
  }
  if (theorem == "h") return fischer_h_decompose(p);
  if (theorem == "classical") {
    if (request.mode.empty()) throw std::invalid_argument("classical needs a mode: harmonic, monogenic or infra");
    return classical_fischer_decompose(p, parse_tower_mode(request.mode));
  }
  RefineOptions options;
  if (theorem == "homma") {
    options.kind = RefinementKind::Homma;
  } else if (theorem == "infra") {
    options.kind = RefinementKind::Infra;
  } else if (theorem == "infra-harmonic") {
    options.kind = RefinementKind::InfraHarmonic;
  } else if (monogenic) {
    if (theorem == "mt" && !request.grades) throw std::invalid_argument("mt needs a grade set S");
    options.kind = RefinementKind::Monogenic;
    options.grades = request.grades;
    options.side = request.side;
  } else {
    throw std::invalid_argument("unknown theorem: " + theorem);
  }
  return refine_decompose(p, options);
}

std::vector<std::string> decomposition_names() {
  return {"h", "homma", "infra", "infra-harmonic", "monogenic", "mt", "classical"};
}

}  // namespace hfischer
