#pragma once

// Constructive Fischer-type decompositions and their certification.
//
// Every decomposition is realized by an exact solve against the stacked bases of its
// components; certification checks that each component lies in the claimed kernel, that
// the components are independent, and that together they fill the target space.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfischer/spaces.hpp"

namespace hfischer {

struct Component {
  std::string label;
  CliffordPoly part;
};

struct DecompositionResult {
  CliffordPoly input;
  std::vector<Component> components;  // labels are unique; zero spaces are omitted
  CliffordPoly residual;

  bool exact() const { return residual.is_zero(); }
  /// Sum of all components and the residual.
  CliffordPoly reconstruct() const;
  /// nullptr when no component carries the label.
  const CliffordPoly* component(std::string_view label) const;
};

struct ComponentDim {
  std::string label;
  std::size_t dim;
};

struct TheoremReport {
  std::string theorem;
  int m = 0;
  GradeSet grades;
  int k = 0;
  std::vector<ComponentDim> components;
  std::size_t target_dim = 0;  // dimension of the space being decomposed
  std::size_t rank = 0;        // rank of all component vectors together
  bool in_kernel = true;       // every component vector satisfies the defining equations
  bool direct_sum = false;
  bool fills = false;
  std::optional<CliffordPoly> witness;
  std::string message;

  bool ok() const { return in_kernel && direct_sum && fills && message.empty(); }
  std::size_t total_dim() const;
};

struct Refinement {
  TheoremReport report;
  std::vector<SubspaceBasis> parts;
};

/// Decomposition of P* into the pieces w H^{s'}_{k'} (w an Omega-word). Labels read
/// "<word>*H^<s'>_<k'>" with the word in w/d letters, or "H^<s'>_<k'>" for the empty word.
/// Throws TheoremViolation if the stacked system at some bigrade is singular.
DecompositionResult fischer_h_decompose(const CliffordPoly& p);

/// The pieces of the decomposition inside P^s_k, with the dimension bookkeeping
/// sum dim(w H^{s'}_{k'}) = dim P^s_k and the direct-sum certificate.
Refinement fischer_h_frame(int m, int s, int k);

/// Ker^s_k Laplacian = H^s_k + x^ H^{s-1}_{k-1} + x. H^{s+1}_{k-1} + W^s_k with
/// W^s_k = ((k-2+m-s) x^x. - (k-2+s) x.x^) H^s_{k-2}.
Refinement homma_refine(int m, int s, int k);

/// Ker^s_k of the modified Laplacian = H^s_k + x^ H^{s-1}_{k-1} + x. H^{s+1}_{k-1} + W~^s_k with
/// W~^s_k = ((c1+1)c2 x^x. + (c2+1)c1 x.x^) H^s_{k-2}, c1 = k-2+s, c2 = k-2+m-s.
Refinement inframonogenic_refine(int m, int s, int k);

/// Ker Laplacian intersected with Ker modified Laplacian on P^s_k equals the first three
/// pieces above.
Refinement harmonic_infra_intersection(int m, int s, int k);

enum class MonogenicSide { Left, Right };

/// S' = {s : s-1 in S and s+1 in S}.
GradeSet shifted_grades(GradeSet grades, int m);

/// M^S_k = (sum_{s in S} H^s_k) + (sum_{s in S'} X H^s_{k-1}) with X = x^A - x.B, or
/// X~ = x^A + x.B for right monogenics.
Refinement monogenic_refine(int m, int k, GradeSet grades, MonogenicSide side);

enum class TowerMode { Harmonic, Monogenic, Infra };

/// Classical towers: sum_p |x|^{2p} Ker_{k-2p} Laplacian (per grade), sum_p x^p M_{k-p}
/// (per degree, all grades), or sum_p x^p (Ker_{k-2p} modified Laplacian) x^p (per grade).
DecompositionResult classical_fischer_decompose(const CliffordPoly& p, TowerMode mode);

/// Tower pieces at one bigrade (for Monogenic, `s` is ignored and all grades are used).
Refinement classical_tower(int m, int s, int k, TowerMode mode);

enum class RefinementKind { Homma, Infra, InfraHarmonic, Monogenic };

struct RefineOptions {
  RefinementKind kind = RefinementKind::Homma;
  std::optional<GradeSet> grades;  // Monogenic only; defaults to all grades
  MonogenicSide side = MonogenicSide::Left;
};

/// Splits P along a refinement, bigrade by bigrade (degree by degree for Monogenic). Any
/// bihomogeneous part outside the refined space is returned as residual.
DecompositionResult refine_decompose(const CliffordPoly& p, const RefineOptions& options);

std::string_view tower_mode_name(TowerMode mode);
TowerMode parse_tower_mode(std::string_view name);

/// A decomposition selected by name: h, homma, infra, infra-harmonic, monogenic, mt or
/// classical. mode applies to classical only; grades and side to monogenic and mt.
struct DecomposeRequest {
  std::string theorem;
  std::string mode;
  std::optional<GradeSet> grades;
  MonogenicSide side = MonogenicSide::Left;
};

/// Throws std::invalid_argument for unknown names or options that do not apply.
DecompositionResult decompose_named(const CliffordPoly& p, const DecomposeRequest& request);
std::vector<std::string> decomposition_names();

}  // namespace hfischer
