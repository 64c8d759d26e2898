#include "hfischer/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hfischer {

MultiIndex::MultiIndex(int m) : m_(m) { check_dimension(m); }

MultiIndex::MultiIndex(int m, std::span<const int> alpha) : MultiIndex(m) {
  if (alpha.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("multi-index length " + std::to_string(alpha.size()) + " != m=" + std::to_string(m));
  }
  for (int i = 0; i < m; ++i) {
    if (alpha[i] < 0 || alpha[i] > 0xFFFF) throw std::invalid_argument("multi-index exponent out of range");
    exps_[i] = static_cast<Exponent>(alpha[i]);
    degree_ += alpha[i];
  }
}

MultiIndex MultiIndex::unit(int m, int j) {
  MultiIndex out(m);
  if (j < 1 || j > m) throw std::invalid_argument("variable index out of range");
  out.exps_[j - 1] = 1;
  out.degree_ = 1;
  return out;
}

std::vector<int> MultiIndex::exponents() const { return {exps_.begin(), exps_.begin() + m_}; }

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  MultiIndex out(*this);
  for (int i = 0; i < m_; ++i) out.exps_[i] = static_cast<Exponent>(out.exps_[i] + o.exps_[i]);
  out.degree_ += o.degree_;
  return out;
}

std::optional<MultiIndex> MultiIndex::lowered(int j) const {
  if (exps_[j - 1] == 0) return std::nullopt;
  MultiIndex out(*this);
  --out.exps_[j - 1];
  --out.degree_;
  return out;
}

MultiIndex MultiIndex::raised(int j) const {
  MultiIndex out(*this);
  ++out.exps_[j - 1];
  ++out.degree_;
  return out;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (a.exps_[i] != b.exps_[i]) return b.exps_[i] <=> a.exps_[i];
  }
  return std::strong_ordering::equal;
}

CliffordPoly::CliffordPoly(int m) : m_(m) { check_dimension(m); }

CliffordPoly CliffordPoly::constant(const Multivector& v) {
  CliffordPoly p(v.dimension());
  const MultiIndex zero(v.dimension());
  for (const auto& [b, q] : v.terms()) p.add_term({zero, b}, q);
  return p;
}

CliffordPoly CliffordPoly::monomial(const MultiIndex& alpha, Blade blade, const Rational& q) {
  CliffordPoly p(alpha.dimension());
  if (!blade.valid_for(alpha.dimension())) throw std::invalid_argument("blade not valid for m");
  p.add_term({alpha, blade}, q);
  return p;
}

CliffordPoly CliffordPoly::variable(int m, int j) { return monomial(MultiIndex::unit(m, j), Blade{}); }

CliffordPoly CliffordPoly::vector_variable(int m) {
  CliffordPoly p(m);
  for (int j = 1; j <= m; ++j) p.add_term({MultiIndex::unit(m, j), Blade::generator(j, m)}, 1);
  return p;
}

Rational CliffordPoly::coefficient(const Monomial& mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CliffordPoly::add_term(const Monomial& mono, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<Bidegree> CliffordPoly::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  const auto& first = terms_.begin()->first;
  const Bidegree bd{first.alpha.degree(), first.blade.grade()};
  return is_bihomogeneous(bd.k, bd.s) ? std::optional(bd) : std::nullopt;
}

bool CliffordPoly::is_bihomogeneous(int k, int s) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return t.first.alpha.degree() == k && t.first.blade.grade() == s;
  });
}

bool CliffordPoly::valued_in(GradeSet grades) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return grades.contains(t.first.blade.grade()); });
}

CliffordPoly CliffordPoly::operator-() const {
  CliffordPoly out(*this);
  for (auto& [mono, q] : out.terms_) q = -q;
  return out;
}

CliffordPoly& CliffordPoly::operator+=(const CliffordPoly& o) {
  if (o.m_ != m_) throw std::invalid_argument("dimension mismatch in polynomial sum");
  for (const auto& [mono, q] : o.terms_) add_term(mono, q);
  return *this;
}

CliffordPoly& CliffordPoly::operator-=(const CliffordPoly& o) {
  if (o.m_ != m_) throw std::invalid_argument("dimension mismatch in polynomial difference");
  for (const auto& [mono, q] : o.terms_) add_term(mono, -q);
  return *this;
}

CliffordPoly& CliffordPoly::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= q;
  return *this;
}

CliffordPoly operator*(const CliffordPoly& a, const CliffordPoly& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("dimension mismatch in polynomial product");
  CliffordPoly out(a.m_);
  for (const auto& [ma, qa] : a.terms_) {
    for (const auto& [mb, qb] : b.terms_) {
      const auto [sign, blade] = blade_product_unchecked(ma.blade, mb.blade);
      Rational q = qa * qb;
      if (sign < 0) q = -q;
      out.add_term({ma.alpha + mb.alpha, blade}, q);
    }
  }
  return out;
}

CliffordPoly CliffordPoly::left_multiply(const Multivector& v) const {
  if (v.dimension() != m_) throw std::invalid_argument("dimension mismatch in left multiplication");
  CliffordPoly out(m_);
  for (const auto& [mono, q] : terms_) {
    for (const auto& [b, c] : v.terms()) {
      const auto [sign, blade] = blade_product_unchecked(b, mono.blade);
      out.add_term({mono.alpha, blade}, sign < 0 ? Rational(-(q * c)) : Rational(q * c));
    }
  }
  return out;
}

CliffordPoly CliffordPoly::right_multiply(const Multivector& v) const {
  if (v.dimension() != m_) throw std::invalid_argument("dimension mismatch in right multiplication");
  CliffordPoly out(m_);
  for (const auto& [mono, q] : terms_) {
    for (const auto& [b, c] : v.terms()) {
      const auto [sign, blade] = blade_product_unchecked(mono.blade, b);
      out.add_term({mono.alpha, blade}, sign < 0 ? Rational(-(q * c)) : Rational(q * c));
    }
  }
  return out;
}

CliffordPoly CliffordPoly::partial(int j) const {
  if (j < 1 || j > m_) throw std::invalid_argument("variable index out of range");
  CliffordPoly out(m_);
  for (const auto& [mono, q] : terms_) {
    if (auto lowered = mono.alpha.lowered(j)) {
      out.add_term({*lowered, mono.blade}, q * mono.alpha[j - 1]);
    }
  }
  return out;
}

CliffordPoly CliffordPoly::times_variable(int j) const {
  if (j < 1 || j > m_) throw std::invalid_argument("variable index out of range");
  CliffordPoly out(m_);
  for (const auto& [mono, q] : terms_) out.add_term({mono.alpha.raised(j), mono.blade}, q);
  return out;
}

Multivector CliffordPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != static_cast<std::size_t>(m_)) throw std::invalid_argument("evaluation point has wrong length");
  Multivector out(m_);
  for (const auto& [mono, q] : terms_) {
    Rational value = q;
    for (int i = 0; i < m_ && value != 0; ++i) {
      for (int e = 0; e < mono.alpha[i]; ++e) value *= point[i];
    }
    out.add_term(mono.blade, value);
  }
  return out;
}

CliffordPoly CliffordPoly::bihomogeneous_part(int k, int s) const {
  CliffordPoly out(m_);
  for (const auto& [mono, q] : terms_) {
    if (mono.alpha.degree() == k && mono.blade.grade() == s) out.terms_.emplace_hint(out.terms_.end(), mono, q);
  }
  return out;
}

std::vector<BigradedComponent> bigrade_split(const CliffordPoly& p) {
  std::map<Bidegree, CliffordPoly> parts;
  for (const auto& [mono, q] : p.terms()) {
    const Bidegree bd{mono.alpha.degree(), mono.blade.grade()};
    parts.try_emplace(bd, p.dimension()).first->second.add_term(mono, q);
  }
  std::vector<BigradedComponent> out;
  out.reserve(parts.size());
  for (auto& [bd, part] : parts) out.push_back({bd.k, bd.s, std::move(part)});
  return out;
}

CliffordPoly add(const CliffordPoly& p, const CliffordPoly& q) { return p + q; }
CliffordPoly scale(const Rational& c, const CliffordPoly& p) { return c * p; }
CliffordPoly left_mv_multiply(const Multivector& v, const CliffordPoly& p) { return p.left_multiply(v); }

std::size_t monomial_count(int m, int k) {
  // C(k + m - 1, m - 1)
  std::size_t out = 1;
  for (int i = 1; i < m; ++i) out = out * static_cast<std::size_t>(k + i) / static_cast<std::size_t>(i);
  return out;
}

namespace {

void enumerate_indices(int m, int pos, int remaining, std::vector<int>& current, std::vector<MultiIndex>& out) {
  if (pos == m - 1) {
    current[pos] = remaining;
    out.emplace_back(m, current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[pos] = e;
    enumerate_indices(m, pos + 1, remaining - e, current, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices(int m, int k) {
  check_dimension(m);
  std::vector<MultiIndex> out;
  if (k < 0) return out;
  std::vector<int> current(m, 0);
  enumerate_indices(m, 0, k, current, out);
  return out;
}

MonomialBasis::MonomialBasis(int m, GradeSet grades, int k) : m_(m) {
  check_dimension(m);
  std::vector<Blade> blades;
  for (Blade::Mask mask = 0; mask < (Blade::Mask{1} << m); ++mask) {
    const Blade b = Blade::from_mask(mask);
    if (grades.contains(b.grade())) blades.push_back(b);
  }
  for (const auto& alpha : multi_indices(m, k)) {
    for (Blade b : blades) keys_.push_back({alpha, b});
  }
  build_index();
}

MonomialBasis MonomialBasis::spanning(int m, std::span<const CliffordPoly> polys) {
  MonomialBasis out;
  out.m_ = m;
  std::map<Monomial, std::size_t> seen;
  for (const auto& p : polys) {
    if (p.dimension() != m) throw std::invalid_argument("dimension mismatch in ambient basis");
    for (const auto& [mono, q] : p.terms()) seen.emplace(mono, 0);
  }
  out.keys_.reserve(seen.size());
  for (const auto& [mono, unused] : seen) out.keys_.push_back(mono);
  out.build_index();
  return out;
}

MonomialBasis MonomialBasis::from_keys(int m, std::vector<Monomial> keys) {
  check_dimension(m);
  MonomialBasis out;
  out.m_ = m;
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  out.keys_ = std::move(keys);
  out.build_index();
  return out;
}

void MonomialBasis::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace_hint(index_.end(), keys_[i], i);
}

std::optional<std::size_t> MonomialBasis::index_of(const Monomial& mono) const {
  const auto it = index_.find(mono);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Rational> MonomialBasis::coords(const CliffordPoly& p) const {
  if (p.dimension() != m_) throw std::invalid_argument("dimension mismatch in coordinate conversion");
  std::vector<Rational> out(keys_.size());
  for (const auto& [mono, q] : p.terms()) {
    const auto idx = index_of(mono);
    if (!idx) throw std::invalid_argument("polynomial term outside the ambient basis");
    out[*idx] = q;
  }
  return out;
}

CliffordPoly MonomialBasis::to_poly(std::span<const Rational> coords) const {
  if (coords.size() != keys_.size()) throw std::invalid_argument("coordinate vector has wrong length");
  CliffordPoly out(m_);
  for (std::size_t i = 0; i < keys_.size(); ++i) out.add_term(keys_[i], coords[i]);
  return out;
}

std::string to_string(const CliffordPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, q] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(q);
    for (int i = 0; i < p.dimension(); ++i) {
      if (mono.alpha[i] == 0) continue;
      os << "*x" << (i + 1);
      if (mono.alpha[i] > 1) os << "^" << mono.alpha[i];
    }
    if (mono.blade.mask() != 0) {
      os << "*e";
      for (int i : mono.blade.indices()) os << i;
    }
  }
  return os.str();
}

}  // namespace hfischer
