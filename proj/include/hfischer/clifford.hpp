#pragma once

// Exact arithmetic in the real Clifford algebra R_{0,m} (e_i e_j + e_j e_i = -2 delta_ij).

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hfischer/rational.hpp"

namespace hfischer {

inline constexpr int kMaxDimension = 8;

/// Throws std::invalid_argument unless 1 <= m <= kMaxDimension.
void check_dimension(int m);

/// A basis blade e_{i1} e_{i2} ... e_{is} with i1 < i2 < ... < is, stored as a bitmask
/// (bit i-1 set for generator e_i). The empty blade is the scalar 1.
class Blade {
 public:
  using Mask = std::uint32_t;

  constexpr Blade() = default;
  static constexpr Blade from_mask(Mask mask) { return Blade(mask); }
  /// 1-based, strictly increasing indices, each in [1, m].
  static Blade from_indices(std::span<const int> indices, int m);
  /// The generator e_i, 1 <= i <= m.
  static Blade generator(int i, int m);
  static constexpr Blade pseudoscalar(int m) { return Blade((Mask{1} << m) - 1); }

  constexpr Mask mask() const { return mask_; }
  int grade() const;
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1U; }
  bool valid_for(int m) const { return (mask_ >> m) == 0; }
  std::vector<int> indices() const;

  friend constexpr auto operator<=>(Blade, Blade) = default;

 private:
  constexpr explicit Blade(Mask mask) : mask_(mask) {}
  Mask mask_ = 0;
};

struct SignedBlade {
  int sign;
  Blade blade;
  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

/// Geometric product of two basis blades: e_a e_b = sign * e_result.
SignedBlade blade_product(Blade a, Blade b, int m);

/// Same as blade_product, without range validation.
SignedBlade blade_product_unchecked(Blade a, Blade b);

/// A subset S of {0, ..., m} of multivector grades.
class GradeSet {
 public:
  constexpr GradeSet() = default;
  static GradeSet single(int s);
  static GradeSet full(int m);
  static GradeSet of(std::span<const int> grades);
  static constexpr GradeSet from_bits(std::uint32_t bits) { return GradeSet(bits); }

  bool contains(int s) const { return s >= 0 && s < 32 && ((bits_ >> s) & 1U); }
  bool empty() const { return bits_ == 0; }
  bool within(int m) const { return (bits_ >> (m + 1)) == 0; }
  std::uint32_t bits() const { return bits_; }
  std::vector<int> grades() const;
  GradeSet with(int s) const { return GradeSet(bits_ | (1U << s)); }
  std::string to_string() const;

  friend constexpr auto operator<=>(GradeSet, GradeSet) = default;

 private:
  constexpr explicit GradeSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

/// An element of R_{0,m}: a sparse map from blades to nonzero rationals.
class Multivector {
 public:
  using TermMap = std::map<Blade, Rational>;

  explicit Multivector(int m);
  static Multivector scalar(int m, const Rational& q);
  static Multivector basis(int m, Blade blade, const Rational& q = 1);
  /// Sum of coords[i] e_{i+1}; coords.size() must equal m.
  static Multivector vector(int m, std::span<const Rational> coords);

  int dimension() const { return m_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Blade b) const;
  /// True when every stored term has grade s (the zero multivector qualifies).
  bool is_homogeneous(int s) const;

  /// Accumulates q e_b, dropping the entry if it cancels to zero.
  void add_term(Blade b, const Rational& q);

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(const Rational& q);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const Rational& q) { return a *= q; }
  friend Multivector operator*(const Rational& q, Multivector a) { return a *= q; }
  /// Clifford product.
  friend Multivector operator*(const Multivector& a, const Multivector& b);
  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  int m_;
  TermMap terms_;
};

Multivector mv_product(const Multivector& u, const Multivector& v);
Multivector grade_project(const Multivector& v, int s);

struct SplitProduct {
  Multivector inner;  // u . v, lowers each grade by one
  Multivector outer;  // u ^ v, raises each grade by one
};

/// Splits u v = u.v + u^v for a 1-vector u, grade by grade:
/// u.v_s = (u v_s - (-1)^s v_s u)/2 and u^v_s = (u v_s + (-1)^s v_s u)/2.
SplitProduct vector_split_product(const Multivector& u, const Multivector& v);

std::string to_string(const Multivector& v);

}  // namespace hfischer
