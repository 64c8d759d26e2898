#pragma once

// Exact dense rational linear algebra: echelon forms, kernels, ranks, coordinates and
// direct-sum certification.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hfischer/operators.hpp"
#include "hfischer/poly.hpp"

namespace hfischer {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static RationalMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static RationalMatrix from_columns(std::size_t rows, std::span<const std::vector<Rational>> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  bool is_zero() const;

  /// Rows of `below` appended under this matrix (column counts must agree).
  RationalMatrix stacked(const RationalMatrix& below) const;
  std::vector<Rational> operator*(std::span<const Rational> v) const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form. Elimination runs fraction-free on primitive integer rows,
/// taking as pivot the first nonzero entry of each column from the top, and normalizes
/// pivots to one at the end.
RrefResult rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
/// Basis of {v : Mv = 0}, one vector per free column (in column order).
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);
/// Some x with Mx = b, or nullopt when b is not in the column space.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, std::span<const Rational> b);
/// Inverse of a square nonsingular matrix; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Repeated exact solves against a fixed matrix with independent columns.
class ColumnSolver {
 public:
  ColumnSolver() = default;
  /// Throws std::invalid_argument if the columns are dependent.
  explicit ColumnSolver(const RationalMatrix& columns);

  std::size_t rows() const { return columns_.rows(); }
  std::size_t cols() const { return columns_.cols(); }
  /// The unique x with Ax = b, or nullopt when b is outside the column space.
  std::optional<std::vector<Rational>> solve(std::span<const Rational> b) const;

 private:
  RationalMatrix columns_;
  std::vector<std::size_t> selected_rows_;  // rows forming an invertible square block
  RationalMatrix block_inverse_;
};

/// Linearly independent homogeneous polynomials spanning one space. Independence is
/// certified at construction.
class SubspaceBasis {
 public:
  /// Throws std::invalid_argument if the vectors are dependent or of mixed dimension.
  SubspaceBasis(int m, std::string label, std::vector<CliffordPoly> vectors);
  static SubspaceBasis empty(int m, std::string label) { return SubspaceBasis(m, std::move(label), {}); }

  int dimension() const { return m_; }
  const std::string& label() const { return label_; }
  const std::vector<CliffordPoly>& vectors() const { return vectors_; }
  std::size_t dim() const { return vectors_.size(); }
  bool is_zero() const { return vectors_.empty(); }
  /// sum_i c_i B_i
  CliffordPoly combine(std::span<const Rational> coeffs) const;

 private:
  int m_;
  std::string label_;
  std::vector<CliffordPoly> vectors_;
};

/// Nonzero combination of dependent polynomials, if any (nullopt when independent).
std::optional<CliffordPoly> dependency_witness(int m, std::span<const CliffordPoly> vectors);

/// Matrix of `op` on the canonical monomial basis of the bigrades (S, k): columns are the
/// images of the basis monomials, rows the canonical basis of every reachable target bigrade.
RationalMatrix operator_matrix(const OperatorSpec& op, int m, GradeSet grades, int k);
/// Same, also returning the row basis.
RationalMatrix operator_matrix(const OperatorSpec& op, int m, GradeSet grades, int k, MonomialBasis& rows);

/// Exact coordinates of P in B, or nullopt when P is not in span(B).
std::optional<std::vector<Rational>> coords_in_basis(const CliffordPoly& p, const SubspaceBasis& b);

struct DirectSumReport {
  bool independent = false;
  std::vector<std::size_t> dims;
  std::size_t total = 0;
  std::size_t rank = 0;
  bool fills_ambient = false;
};

/// Parts given as coordinate vectors of length ambient_dim.
DirectSumReport direct_sum_check(std::span<const std::vector<std::vector<Rational>>> parts, std::size_t ambient_dim);
/// Parts given as polynomial bases inside `ambient`; throws std::invalid_argument if a vector
/// has a term outside the ambient basis.
DirectSumReport direct_sum_check(std::span<const SubspaceBasis> parts, const MonomialBasis& ambient);

}  // namespace hfischer
