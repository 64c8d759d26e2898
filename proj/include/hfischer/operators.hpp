#pragma once

// Invariant operators for the H-action on Clifford-valued polynomials, a symbolic
// composition layer for derived operators, Omega-words, and the H-action itself.

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hfischer/poly.hpp"

namespace hfischer {

/// dplus P = sum_j e_j ^ (d_j P)
CliffordPoly dirac_plus(const CliffordPoly& p);
/// dminus P = sum_j e_j . (d_j P)
CliffordPoly dirac_minus(const CliffordPoly& p);
/// Left Dirac operator dplus + dminus.
CliffordPoly dirac(const CliffordPoly& p);
/// Modified Dirac operator dplus - dminus.
CliffordPoly dirac_tilde(const CliffordPoly& p);
/// Right Dirac operator P d = sum_j (d_j P) e_j, computed grade-wise as (-1)^s (dplus - dminus) P.
CliffordPoly dirac_right(const CliffordPoly& p);

enum class XMode { Wedge, Dot, Full };
/// Left multiplication by the vector variable x, or its outer / inner part.
CliffordPoly x_mul(const CliffordPoly& p, XMode mode);

/// x P x, computed grade-wise as (-1)^s (x.x^ - x^x.) P.
CliffordPoly sandwich_x(const CliffordPoly& p);

/// Literal forms of the operators, built from Clifford products and partial
/// derivatives only. These serve as independent references for the fast paths above.
namespace by_definition {
CliffordPoly dirac_left(const CliffordPoly& p);
CliffordPoly dirac_right(const CliffordPoly& p);
CliffordPoly sandwich_x(const CliffordPoly& p);
/// E = sum_j x_j d_j
CliffordPoly euler(const CliffordPoly& p);
/// -sum_j e_j ^ (e_j . P)
CliffordPoly ferm_plus(const CliffordPoly& p);
/// -sum_j e_j . (e_j ^ P)
CliffordPoly ferm_minus(const CliffordPoly& p);
/// sum_j d_j^2
CliffordPoly laplacian(const CliffordPoly& p);
}  // namespace by_definition

enum class Primitive {
  Identity,
  DPlus,
  DMinus,
  XWedge,
  XDot,
  Euler,      // multiplies by the degree k
  FermPlus,   // multiplies by the grade s
  FermMinus,  // multiplies by m - s
  Parity,     // multiplies by (-1)^s
};

std::string_view primitive_name(Primitive p);

/// Expression tree over the primitives, closed under composition, sums and rational
/// multiples. Trees are immutable and cheap to copy. The dimension is supplied when applied.
class OperatorSpec {
 public:
  struct Node;

  OperatorSpec();  // identity
  explicit OperatorSpec(Primitive p);

  static OperatorSpec compose(const OperatorSpec& outer, const OperatorSpec& inner);
  static OperatorSpec sum(const OperatorSpec& a, const OperatorSpec& b);
  static OperatorSpec scaled(const Rational& c, const OperatorSpec& a);

  /// a * b is the composition a o b (b acts first).
  friend OperatorSpec operator*(const OperatorSpec& a, const OperatorSpec& b) { return compose(a, b); }
  friend OperatorSpec operator+(const OperatorSpec& a, const OperatorSpec& b) { return sum(a, b); }
  friend OperatorSpec operator-(const OperatorSpec& a, const OperatorSpec& b) { return sum(a, scaled(-1, b)); }
  friend OperatorSpec operator*(const Rational& c, const OperatorSpec& a) { return scaled(c, a); }
  friend OperatorSpec operator*(long c, const OperatorSpec& a) { return scaled(Rational(c), a); }

  /// Anticommutator {a, b} = ab + ba.
  static OperatorSpec anticommutator(const OperatorSpec& a, const OperatorSpec& b) { return a * b + b * a; }

  const Node& node() const { return *node_; }
  std::string to_string() const;

 private:
  explicit OperatorSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct OperatorSpec::Node {
  enum class Kind { Leaf, Compose, Sum, Scaled };
  Kind kind = Kind::Leaf;
  Primitive primitive = Primitive::Identity;
  Rational factor;
  std::vector<OperatorSpec> children;  // Compose: outer first
};

namespace ops {
inline OperatorSpec identity() { return OperatorSpec(Primitive::Identity); }
inline OperatorSpec dplus() { return OperatorSpec(Primitive::DPlus); }
inline OperatorSpec dminus() { return OperatorSpec(Primitive::DMinus); }
inline OperatorSpec xwedge() { return OperatorSpec(Primitive::XWedge); }
inline OperatorSpec xdot() { return OperatorSpec(Primitive::XDot); }
inline OperatorSpec euler() { return OperatorSpec(Primitive::Euler); }
inline OperatorSpec ferm_plus() { return OperatorSpec(Primitive::FermPlus); }
inline OperatorSpec ferm_minus() { return OperatorSpec(Primitive::FermMinus); }
inline OperatorSpec parity() { return OperatorSpec(Primitive::Parity); }
}  // namespace ops

/// Named derived operators: DIRAC, DIRAC_TILDE, DIRAC_RIGHT, LAPLACIAN, LAPLACIAN_TILDE,
/// EULER, FERM_PLUS, FERM_MINUS, A, B, X, X_TILDE, NORM_SQUARED (|x|^2 as a multiplier).
/// Throws std::invalid_argument for unknown names.
OperatorSpec derived_operator(std::string_view name);
std::vector<std::string> derived_operator_names();

/// Evaluates the tree on P, right-to-left.
CliffordPoly apply(const OperatorSpec& op, const CliffordPoly& p);

/// Bidegrees (k, s) reachable from the given inputs, clipped to 0 <= s <= m and k >= 0.
std::set<Bidegree> target_bidegrees(const OperatorSpec& op, int m, const std::set<Bidegree>& inputs);

enum class Letter { Wedge, Dot };

/// Alternating word in the letters x^ and x. (adjacent equal letters vanish identically).
/// Letters are stored as written; the rightmost letter acts first.
class OmegaWord {
 public:
  OmegaWord() = default;
  explicit OmegaWord(std::vector<Letter> letters);
  /// "wd" is x^ x. ; the empty string is the empty word.
  static OmegaWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// #wedge - #dot: the change in grade.
  int grade_shift() const;
  /// The letter that acts first.
  std::optional<Letter> first_acting() const;
  std::string to_string() const;
  OperatorSpec as_operator() const;

  friend auto operator<=>(const OmegaWord&, const OmegaWord&) = default;

 private:
  std::vector<Letter> letters_;
};

CliffordPoly word_apply(const OmegaWord& w, const CliffordPoly& p);

/// Element r = u_1 u_2 ... u_n of Pin(m) given by exact rational unit vectors.
class RotorElement {
 public:
  explicit RotorElement(std::vector<Multivector> factors);

  int dimension() const { return m_; }
  const std::vector<Multivector>& factors() const { return factors_; }
  const Multivector& value() const { return value_; }
  const Multivector& inverse() const { return inverse_; }
  /// Row i holds the coefficients of e_{i+1} in r^{-1} e_j r, j = 1..m, i.e. the linear map
  /// x -> r^{-1} x r on coordinates.
  const std::vector<std::vector<Rational>>& conjugation_matrix() const { return matrix_; }

 private:
  int m_;
  std::vector<Multivector> factors_;
  Multivector value_;
  Multivector inverse_;
  std::vector<std::vector<Rational>> matrix_;
};

/// [H(r)P](x) = r P(r^{-1} x r) r^{-1}
CliffordPoly h_action(const RotorElement& r, const CliffordPoly& p);

/// Rational unit vector obtained from t in Q^{m-1} by inverse stereographic projection.
Multivector rational_unit_vector(int m, std::span<const Rational> t);

}  // namespace hfischer
