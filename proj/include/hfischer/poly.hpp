#pragma once

// Sparse exact polynomials R^m -> R_{0,m}, bigraded by degree k and grade s.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hfischer/clifford.hpp"

namespace hfischer {

/// Exponent vector alpha in N_0^m; the monomial x^alpha = x_1^alpha_1 ... x_m^alpha_m.
class MultiIndex {
 public:
  using Exponent = std::uint16_t;

  MultiIndex() = default;
  explicit MultiIndex(int m);
  MultiIndex(int m, std::span<const int> alpha);
  static MultiIndex unit(int m, int j);  // x_j, 1-based

  int dimension() const { return m_; }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[i]; }  // 0-based
  std::vector<int> exponents() const;

  MultiIndex operator+(const MultiIndex& o) const;
  /// alpha - e_j when alpha_j > 0.
  std::optional<MultiIndex> lowered(int j) const;
  MultiIndex raised(int j) const;

  /// Graded lexicographic: lower degree first, then larger leading exponents first,
  /// so x1^2 < x1 x2 < x2^2 in this order.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exps_ == b.exps_; }

 private:
  std::array<Exponent, kMaxDimension> exps_{};
  int m_ = 0;
  int degree_ = 0;
};

/// x^alpha e_blade; ordered by alpha (graded lex) and then by blade bitmask.
struct Monomial {
  MultiIndex alpha;
  Blade blade;

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.alpha <=> b.alpha; c != 0) return c;
    return a.blade <=> b.blade;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct Bidegree {
  int k;  // polynomial degree
  int s;  // multivector grade
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Polynomial in x in R^m with values in R_{0,m}. The zero polynomial has no terms.
class CliffordPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit CliffordPoly(int m);
  static CliffordPoly constant(const Multivector& v);
  static CliffordPoly monomial(const MultiIndex& alpha, Blade blade, const Rational& q = 1);
  /// The scalar coordinate x_j.
  static CliffordPoly variable(int m, int j);
  /// The vector variable x = x_1 e_1 + ... + x_m e_m.
  static CliffordPoly vector_variable(int m);

  int dimension() const { return m_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& mono) const;

  void add_term(const Monomial& mono, const Rational& q);

  /// The bidegree when every term shares it; nullopt for zero or mixed polynomials.
  std::optional<Bidegree> bidegree() const;
  bool is_bihomogeneous(int k, int s) const;
  /// True when every term has a grade in S.
  bool valued_in(GradeSet grades) const;

  CliffordPoly operator-() const;
  CliffordPoly& operator+=(const CliffordPoly& o);
  CliffordPoly& operator-=(const CliffordPoly& o);
  CliffordPoly& operator*=(const Rational& q);
  friend CliffordPoly operator+(CliffordPoly a, const CliffordPoly& b) { return a += b; }
  friend CliffordPoly operator-(CliffordPoly a, const CliffordPoly& b) { return a -= b; }
  friend CliffordPoly operator*(CliffordPoly a, const Rational& q) { return a *= q; }
  friend CliffordPoly operator*(const Rational& q, CliffordPoly a) { return a *= q; }
  /// Full product: exponents add and coefficients multiply in R_{0,m}.
  friend CliffordPoly operator*(const CliffordPoly& a, const CliffordPoly& b);
  friend bool operator==(const CliffordPoly&, const CliffordPoly&) = default;

  /// Every coefficient multiplied on the left (right) by a constant multivector.
  CliffordPoly left_multiply(const Multivector& v) const;
  CliffordPoly right_multiply(const Multivector& v) const;

  /// Partial derivative in x_j, 1-based.
  CliffordPoly partial(int j) const;
  /// Multiplication by the scalar coordinate x_j, 1-based.
  CliffordPoly times_variable(int j) const;

  /// Exact substitution x -> point.
  Multivector evaluate(std::span<const Rational> point) const;

  /// Keeps only the terms of the given bidegree.
  CliffordPoly bihomogeneous_part(int k, int s) const;

 private:
  int m_;
  TermMap terms_;
};

struct BigradedComponent {
  int k;
  int s;
  CliffordPoly part;
};

/// Splits P into its nonzero bihomogeneous components, ordered by (k, s).
std::vector<BigradedComponent> bigrade_split(const CliffordPoly& p);

CliffordPoly add(const CliffordPoly& p, const CliffordPoly& q);
CliffordPoly scale(const Rational& c, const CliffordPoly& p);
CliffordPoly left_mv_multiply(const Multivector& v, const CliffordPoly& p);

/// Dimension of homogeneous scalar polynomials of degree k in m variables.
std::size_t monomial_count(int m, int k);

/// All alpha with |alpha| = k in canonical order.
std::vector<MultiIndex> multi_indices(int m, int k);

/// The canonically ordered monomial basis {x^alpha e_B} of the bigrades (S, k), with an
/// index for coordinate conversion. Also usable as an ambient basis for arbitrary key sets.
class MonomialBasis {
 public:
  MonomialBasis() = default;
  MonomialBasis(int m, GradeSet grades, int k);
  /// Union of the keys in the given polynomials, canonically ordered.
  static MonomialBasis spanning(int m, std::span<const CliffordPoly> polys);
  /// The given keys, deduplicated and canonically ordered.
  static MonomialBasis from_keys(int m, std::vector<Monomial> keys);

  int dimension() const { return m_; }
  std::size_t size() const { return keys_.size(); }
  const std::vector<Monomial>& keys() const { return keys_; }
  std::optional<std::size_t> index_of(const Monomial& mono) const;

  /// Coordinates of P; throws std::invalid_argument if P has a term outside this basis.
  std::vector<Rational> coords(const CliffordPoly& p) const;
  CliffordPoly to_poly(std::span<const Rational> coords) const;

 private:
  void build_index();
  int m_ = 0;
  std::vector<Monomial> keys_;
  std::map<Monomial, std::size_t> index_;
};

std::string to_string(const CliffordPoly& p);

}  // namespace hfischer
