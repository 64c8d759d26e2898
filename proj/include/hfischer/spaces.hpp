#pragma once

// Canonical bases of the polynomial solution spaces: Hodge-de Rham solutions H^s_k,
// harmonic and inframonogenic kernels, one- and two-sided monogenics, and w H^s_k.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hfischer/linalg.hpp"

namespace hfischer {

/// A certification failure: a computed space contradicts a claimed decomposition.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(const std::string& what, std::optional<CliffordPoly> witness = std::nullopt)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::optional<CliffordPoly>& witness() const { return witness_; }

 private:
  std::optional<CliffordPoly> witness_;
};

enum class SpaceKind {
  Hodge,      // dplus P = 0 and dminus P = 0
  Harmonic,   // Laplacian P = 0
  Infra,      // modified Laplacian P = 0
  MonoLeft,   // d P = 0
  MonoRight,  // P d = 0
  MonoS,      // d P = 0 for R^S-valued P
  TwoSided,   // d P = 0 = P d
};

std::string_view space_kind_name(SpaceKind kind);
/// Accepts hodge, harmonic, infra, mono-left, mono-right, mono-S, two-sided.
SpaceKind parse_space_kind(std::string_view name);

/// {x^alpha e_B : |alpha| = k, |B| in S} in canonical order.
SubspaceBasis monomial_basis(int m, GradeSet grades, int k);
std::size_t monomial_dim(int m, GradeSet grades, int k);

/// Canonical basis of the kind's solution space inside the R^S-valued k-homogeneous
/// polynomials: the nullspace of the defining operator matrix. Results are memoized per
/// (kind, m, S, k); the memo is safe for concurrent use. For TwoSided the intersection of
/// left and right monogenics is compared with the Hodge-de Rham kernel and a mismatch
/// raises TheoremViolation.
const SubspaceBasis& space_basis(SpaceKind kind, int m, GradeSet grades, int k);
/// Shorthand for H^s_k; the zero space when s or k is out of range.
const SubspaceBasis& hodge(int m, int s, int k);

/// The empty word and the two alternating words of each length 1..max_len.
std::vector<OmegaWord> omega_words(std::size_t max_len);

/// True when w H^s_k vanishes identically: s = 0 and the first acting letter is x.,
/// or s = m and it is x^.
bool word_annihilates(const OmegaWord& w, int m, int s);

/// Basis of w H^s_k. Raises TheoremViolation when the images of the H^s_k basis are
/// dependent outside the vanishing cases.
SubspaceBasis component_space(const OmegaWord& w, int m, int s, int k);

using PolyMap = std::function<CliffordPoly(const CliffordPoly&)>;

/// Images of a basis under a linear map; raises TheoremViolation if they are dependent.
SubspaceBasis image_basis(const SubspaceBasis& source, const PolyMap& op, std::string label);

/// Drops all memoized space bases (mainly for timing runs).
void clear_space_cache();

}  // namespace hfischer
