#include "hfischer/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace hfischer {

void check_dimension(int m) {
  if (m < 1 || m > kMaxDimension) {
    throw std::invalid_argument("dimension m=" + std::to_string(m) + " outside [1, " +
                                std::to_string(kMaxDimension) + "]");
  }
}

Blade Blade::from_indices(std::span<const int> indices, int m) {
  check_dimension(m);
  Mask mask = 0;
  int previous = 0;
  for (int i : indices) {
    if (i < 1 || i > m) {
      throw std::invalid_argument("blade index " + std::to_string(i) + " outside [1, " + std::to_string(m) + "]");
    }
    if (i <= previous) throw std::invalid_argument("blade indices must be strictly increasing");
    previous = i;
    mask |= Mask{1} << (i - 1);
  }
  return Blade(mask);
}

Blade Blade::generator(int i, int m) {
  const int idx[] = {i};
  return from_indices(idx, m);
}

int Blade::grade() const { return std::popcount(mask_); }

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if ((mask_ >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

SignedBlade blade_product_unchecked(Blade a, Blade b) {
  const Blade::Mask am = a.mask();
  Blade::Mask bm = b.mask();
  // Moving each generator of b leftwards past the larger generators of a.
  int swaps = 0;
  while (bm != 0) {
    const int j = std::countr_zero(bm);
    swaps += std::popcount(am >> (j + 1));
    bm &= bm - 1;
  }
  // Every shared generator contracts with e_i^2 = -1.
  swaps += std::popcount(am & b.mask());
  return {(swaps & 1) ? -1 : 1, Blade::from_mask(am ^ b.mask())};
}

SignedBlade blade_product(Blade a, Blade b, int m) {
  check_dimension(m);
  if (!a.valid_for(m) || !b.valid_for(m)) {
    throw std::invalid_argument("blade index outside [1, " + std::to_string(m) + "]");
  }
  return blade_product_unchecked(a, b);
}

GradeSet GradeSet::single(int s) {
  if (s < 0 || s > kMaxDimension) throw std::invalid_argument("grade " + std::to_string(s) + " out of range");
  return GradeSet(1U << s);
}

GradeSet GradeSet::full(int m) {
  check_dimension(m);
  return GradeSet((1U << (m + 1)) - 1);
}

GradeSet GradeSet::of(std::span<const int> grades) {
  GradeSet out;
  for (int s : grades) out.bits_ |= single(s).bits_;
  return out;
}

std::vector<int> GradeSet::grades() const {
  std::vector<int> out;
  for (int s = 0; s < 32; ++s) {
    if (contains(s)) out.push_back(s);
  }
  return out;
}

std::string GradeSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int s : grades()) {
    if (!first) out += ",";
    out += std::to_string(s);
    first = false;
  }
  return out + "}";
}

Multivector::Multivector(int m) : m_(m) { check_dimension(m); }

Multivector Multivector::scalar(int m, const Rational& q) { return basis(m, Blade{}, q); }

Multivector Multivector::basis(int m, Blade blade, const Rational& q) {
  Multivector v(m);
  if (!blade.valid_for(m)) throw std::invalid_argument("blade not valid for m=" + std::to_string(m));
  v.add_term(blade, q);
  return v;
}

Multivector Multivector::vector(int m, std::span<const Rational> coords) {
  Multivector v(m);
  if (coords.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("vector needs exactly m coordinates");
  }
  for (int i = 0; i < m; ++i) v.add_term(Blade::generator(i + 1, m), coords[i]);
  return v;
}

Rational Multivector::coefficient(Blade b) const {
  const auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Multivector::is_homogeneous(int s) const {
  for (const auto& [b, q] : terms_) {
    if (b.grade() != s) return false;
  }
  return true;
}

void Multivector::add_term(Blade b, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(b, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

Multivector Multivector::operator-() const {
  Multivector out(*this);
  for (auto& [b, q] : out.terms_) q = -q;
  return out;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (o.m_ != m_) throw std::invalid_argument("dimension mismatch in multivector sum");
  for (const auto& [b, q] : o.terms_) add_term(b, q);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  if (o.m_ != m_) throw std::invalid_argument("dimension mismatch in multivector difference");
  for (const auto& [b, q] : o.terms_) add_term(b, -q);
  return *this;
}

Multivector& Multivector::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= q;
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("dimension mismatch in Clifford product");
  Multivector out(a.m_);
  for (const auto& [ba, qa] : a.terms_) {
    for (const auto& [bb, qb] : b.terms_) {
      const auto [sign, blade] = blade_product_unchecked(ba, bb);
      Rational q = qa * qb;
      if (sign < 0) q = -q;
      out.add_term(blade, q);
    }
  }
  return out;
}

Multivector mv_product(const Multivector& u, const Multivector& v) { return u * v; }

Multivector grade_project(const Multivector& v, int s) {
  Multivector out(v.dimension());
  for (const auto& [b, q] : v.terms()) {
    if (b.grade() == s) out.add_term(b, q);
  }
  return out;
}

SplitProduct vector_split_product(const Multivector& u, const Multivector& v) {
  if (u.dimension() != v.dimension()) throw std::invalid_argument("dimension mismatch in split product");
  if (u.is_zero() || !u.is_homogeneous(1)) throw std::invalid_argument("split product needs a nonzero pure 1-vector");
  const int m = v.dimension();
  SplitProduct out{Multivector(m), Multivector(m)};
  const Rational half(1, 2);
  for (int s = 0; s <= m; ++s) {
    const Multivector vs = grade_project(v, s);
    if (vs.is_zero()) continue;
    const Multivector left = u * vs;
    Multivector right = vs * u;
    if (s % 2 == 1) right = -right;
    out.inner += half * (left - right);
    out.outer += half * (left + right);
  }
  return out;
}

std::string to_string(const Multivector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, q] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(q);
    if (b.mask() != 0) {
      os << "*e";
      for (int i : b.indices()) os << i;
    }
  }
  return os.str();
}

}  // namespace hfischer
