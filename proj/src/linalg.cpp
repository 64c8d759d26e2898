#include "hfischer/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace hfischer {

namespace {

using IntRow = std::vector<Integer>;

/// Divides the row by the gcd of its entries from column `from` on (earlier entries are zero).
void make_primitive(IntRow& row, std::size_t from) {
  Integer g = 0;
  for (std::size_t c = from; c < row.size(); ++c) {
    if (sgn(row[c]) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[c].get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0) return;
  for (std::size_t c = from; c < row.size(); ++c) {
    if (sgn(row[c]) != 0) mpz_divexact(row[c].get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
  }
}

IntRow integer_row(std::span<const Rational> r) {
  Integer l = 1;
  for (const auto& q : r) {
    if (sgn(q) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  IntRow out(r.size());
  for (std::size_t c = 0; c < r.size(); ++c) {
    if (sgn(r[c]) == 0) continue;
    out[c] = r[c].get_num() * (l / r[c].get_den());
  }
  make_primitive(out, 0);
  return out;
}

/// target <- (p/g) target - (a/g) source, where p = source[col], a = target[col], g = gcd(p, a).
void eliminate(IntRow& target, const IntRow& source, std::size_t col, std::span<const std::size_t> source_support) {
  const Integer& p = source[col];
  Integer a = target[col];
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
  Integer pf = p / g;
  const Integer af = a / g;
  if (pf != 1) {
    for (auto& x : target) {
      if (sgn(x) != 0) x *= pf;
    }
  }
  for (std::size_t c : source_support) target[c] -= af * source[c];
  make_primitive(target, 0);
}

std::vector<std::size_t> support(const IntRow& row, std::size_t from) {
  std::vector<std::size_t> out;
  for (std::size_t c = from; c < row.size(); ++c) {
    if (sgn(row[c]) != 0) out.push_back(c);
  }
  return out;
}

struct IntegerEchelon {
  std::vector<IntRow> rows;  // the first pivots.size() rows are in echelon form
  std::vector<std::size_t> pivots;
};

IntegerEchelon forward_eliminate(const RationalMatrix& m) {
  IntegerEchelon e;
  e.rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) e.rows.push_back(integer_row(m.row(r)));
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < e.rows.size(); ++col) {
    std::size_t i = r;
    while (i < e.rows.size() && sgn(e.rows[i][col]) == 0) ++i;
    if (i == e.rows.size()) continue;
    std::swap(e.rows[r], e.rows[i]);
    const auto supp = support(e.rows[r], col);
    for (std::size_t t = r + 1; t < e.rows.size(); ++t) {
      if (sgn(e.rows[t][col]) != 0) eliminate(e.rows[t], e.rows[r], col, supp);
    }
    e.pivots.push_back(col);
    ++r;
  }
  return e;
}

}  // namespace

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, std::span<const std::vector<Rational>> columns) {
  RationalMatrix out(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = columns[c][r];
  }
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RationalMatrix RationalMatrix::stacked(const RationalMatrix& below) const {
  if (below.cols_ != cols_ && below.rows_ != 0 && rows_ != 0) throw std::invalid_argument("column count mismatch");
  RationalMatrix out(rows_ + below.rows_, rows_ ? cols_ : below.cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

std::vector<Rational> RationalMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      if (sgn(a(i, l)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(l, j)) != 0) out(i, j) += a(i, l) * b(l, j);
      }
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RrefResult rref(const RationalMatrix& m) {
  IntegerEchelon e = forward_eliminate(m);
  const std::size_t rank = e.pivots.size();
  // Back elimination, still fraction-free.
  for (std::size_t t = rank; t-- > 0;) {
    const std::size_t col = e.pivots[t];
    const auto supp = support(e.rows[t], col);
    for (std::size_t u = 0; u < t; ++u) {
      if (sgn(e.rows[u][col]) != 0) eliminate(e.rows[u], e.rows[t], col, supp);
    }
  }
  RrefResult out{RationalMatrix(m.rows(), m.cols()), e.pivots, rank};
  for (std::size_t t = 0; t < rank; ++t) {
    const Integer& p = e.rows[t][e.pivots[t]];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(e.rows[t][c]) == 0) continue;
      Rational q(e.rows[t][c], p);
      q.canonicalize();
      out.reduced(t, c) = std::move(q);
    }
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return forward_eliminate(m).pivots.size(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RrefResult red = rref(aug);
  if (red.rank > 0 && red.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols());
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.reduced(i, m.cols());
  return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RrefResult red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
  RationalMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = red.reduced(r, n + c);
  }
  return out;
}

ColumnSolver::ColumnSolver(const RationalMatrix& columns) : columns_(columns) {
  RationalMatrix transposed(columns.cols(), columns.rows());
  for (std::size_t r = 0; r < columns.rows(); ++r) {
    for (std::size_t c = 0; c < columns.cols(); ++c) transposed(c, r) = columns(r, c);
  }
  // Pivot columns of the transpose are independent rows of A.
  const RrefResult red = rref(transposed);
  if (red.rank != columns.cols()) throw std::invalid_argument("column solver needs independent columns");
  selected_rows_ = red.pivots;
  RationalMatrix block(columns.cols(), columns.cols());
  for (std::size_t i = 0; i < selected_rows_.size(); ++i) {
    for (std::size_t c = 0; c < columns.cols(); ++c) block(i, c) = columns(selected_rows_[i], c);
  }
  block_inverse_ = *inverse(block);
}

std::optional<std::vector<Rational>> ColumnSolver::solve(std::span<const Rational> b) const {
  if (b.size() != columns_.rows()) throw std::invalid_argument("right-hand side length mismatch");
  std::vector<Rational> picked;
  picked.reserve(selected_rows_.size());
  for (std::size_t r : selected_rows_) picked.push_back(b[r]);
  std::vector<Rational> x = block_inverse_ * std::span<const Rational>(picked);
  const std::vector<Rational> back = columns_ * std::span<const Rational>(x);
  for (std::size_t r = 0; r < back.size(); ++r) {
    if (back[r] != b[r]) return std::nullopt;
  }
  return x;
}

namespace {

/// Rows are the coordinate vectors of the polynomials in their joint monomial support.
RationalMatrix row_matrix(int m, std::span<const CliffordPoly> vectors) {
  const MonomialBasis ambient = MonomialBasis::spanning(m, vectors);
  RationalMatrix out(vectors.size(), ambient.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (const auto& [mono, q] : vectors[i].terms()) out(i, *ambient.index_of(mono)) = q;
  }
  return out;
}

}  // namespace

std::optional<CliffordPoly> dependency_witness(int m, std::span<const CliffordPoly> vectors) {
  if (vectors.empty()) return std::nullopt;
  const MonomialBasis ambient = MonomialBasis::spanning(m, vectors);
  std::vector<std::vector<Rational>> cols;
  cols.reserve(vectors.size());
  for (const auto& v : vectors) cols.push_back(ambient.coords(v));
  const auto kernel = nullspace(RationalMatrix::from_columns(ambient.size(), cols));
  if (kernel.empty()) return std::nullopt;
  // The first free column is a vector lying in the span of its predecessors.
  const auto& k = kernel.front();
  for (std::size_t i = vectors.size(); i-- > 0;) {
    if (sgn(k[i]) != 0) return vectors[i];
  }
  return std::nullopt;
}

SubspaceBasis::SubspaceBasis(int m, std::string label, std::vector<CliffordPoly> vectors)
    : m_(m), label_(std::move(label)), vectors_(std::move(vectors)) {
  check_dimension(m);
  for (const auto& v : vectors_) {
    if (v.dimension() != m) throw std::invalid_argument("basis vector of wrong dimension in " + label_);
  }
  if (!vectors_.empty() && rank(row_matrix(m, vectors_)) != vectors_.size()) {
    throw std::invalid_argument("dependent vectors in basis " + label_);
  }
}

CliffordPoly SubspaceBasis::combine(std::span<const Rational> coeffs) const {
  if (coeffs.size() != vectors_.size()) throw std::invalid_argument("coefficient count mismatch");
  CliffordPoly out(m_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) != 0) out += coeffs[i] * vectors_[i];
  }
  return out;
}

RationalMatrix operator_matrix(const OperatorSpec& op, int m, GradeSet grades, int k, MonomialBasis& rows) {
  const MonomialBasis cols(m, grades, k);
  std::set<Bidegree> inputs;
  for (int s : grades.grades()) {
    if (s <= m) inputs.insert({k, s});
  }
  std::map<int, GradeSet> targets;
  for (const auto& b : target_bidegrees(op, m, inputs)) targets[b.k] = targets[b.k].with(b.s);
  std::vector<Monomial> keys;
  for (const auto& [tk, ts] : targets) {
    const MonomialBasis part(m, ts, tk);
    keys.insert(keys.end(), part.keys().begin(), part.keys().end());
  }
  rows = MonomialBasis::from_keys(m, std::move(keys));
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const CliffordPoly image = apply(op, CliffordPoly::monomial(cols.keys()[c].alpha, cols.keys()[c].blade));
    for (const auto& [mono, q] : image.terms()) {
      const auto r = rows.index_of(mono);
      if (!r) throw std::logic_error("operator image outside its predicted target bigrades");
      out(*r, c) = q;
    }
  }
  return out;
}

RationalMatrix operator_matrix(const OperatorSpec& op, int m, GradeSet grades, int k) {
  MonomialBasis rows;
  return operator_matrix(op, m, grades, k, rows);
}

std::optional<std::vector<Rational>> coords_in_basis(const CliffordPoly& p, const SubspaceBasis& b) {
  if (p.dimension() != b.dimension()) throw std::invalid_argument("dimension mismatch in coordinates");
  if (p.is_zero()) return std::vector<Rational>(b.dim());
  if (b.is_zero()) return std::nullopt;
  const MonomialBasis ambient = MonomialBasis::spanning(b.dimension(), b.vectors());
  std::vector<Rational> rhs(ambient.size());
  for (const auto& [mono, q] : p.terms()) {
    const auto idx = ambient.index_of(mono);
    if (!idx) return std::nullopt;
    rhs[*idx] = q;
  }
  std::vector<std::vector<Rational>> cols;
  for (const auto& v : b.vectors()) cols.push_back(ambient.coords(v));
  return solve(RationalMatrix::from_columns(ambient.size(), cols), rhs);
}

DirectSumReport direct_sum_check(std::span<const std::vector<std::vector<Rational>>> parts, std::size_t ambient_dim) {
  DirectSumReport report;
  std::vector<const std::vector<Rational>*> all;
  for (const auto& part : parts) {
    report.dims.push_back(part.size());
    report.total += part.size();
    for (const auto& v : part) {
      if (v.size() != ambient_dim) throw std::invalid_argument("direct-sum part does not live in the ambient space");
      all.push_back(&v);
    }
  }
  RationalMatrix stacked(all.size(), ambient_dim);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t c = 0; c < ambient_dim; ++c) stacked(i, c) = (*all[i])[c];
  }
  report.rank = all.empty() ? 0 : rank(stacked);
  report.independent = report.rank == report.total;
  report.fills_ambient = report.rank == ambient_dim;
  return report;
}

DirectSumReport direct_sum_check(std::span<const SubspaceBasis> parts, const MonomialBasis& ambient) {
  std::vector<std::vector<std::vector<Rational>>> coords;
  coords.reserve(parts.size());
  for (const auto& part : parts) {
    auto& c = coords.emplace_back();
    for (const auto& v : part.vectors()) c.push_back(ambient.coords(v));
  }
  return direct_sum_check(coords, ambient.size());
}

}  // namespace hfischer
