#pragma once

// Independent reference implementations for tests. Multivectors are maps from sorted
// generator lists, products are computed by sorting generator words, operators are
// written from their literal definitions, and linear algebra is plain Gauss-Jordan.

#include <algorithm>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "hfischer/poly.hpp"

namespace oracle {

using hfischer::Rational;
using Idx = std::vector<int>;
using MV = std::map<Idx, Rational>;

/// Sign and reduced generator list of e_{w_1} ... e_{w_n} with e_i^2 = -1.
inline std::pair<int, Idx> reduce_word(Idx w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j) {
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        sign = -sign;
      }
    }
  }
  Idx out;
  for (std::size_t i = 0; i < w.size();) {
    if (i + 1 < w.size() && w[i] == w[i + 1]) {
      sign = -sign;
      i += 2;
    } else {
      out.push_back(w[i++]);
    }
  }
  return {sign, out};
}

inline void add_to(MV& a, const Idx& b, const Rational& q) {
  if (q == 0) return;
  auto [it, fresh] = a.try_emplace(b, q);
  if (!fresh) {
    it->second += q;
    if (it->second == 0) a.erase(it);
  }
}

inline MV mul(const MV& a, const MV& b) {
  MV out;
  for (const auto& [ia, qa] : a) {
    for (const auto& [ib, qb] : b) {
      Idx w = ia;
      w.insert(w.end(), ib.begin(), ib.end());
      auto [sign, r] = reduce_word(w);
      add_to(out, r, sign * qa * qb);
    }
  }
  return out;
}

inline MV generator(int j) { return MV{{Idx{j}, Rational(1)}}; }

/// Polynomial: (alpha, blade) -> coefficient.
struct Poly {
  int m = 0;
  std::map<std::pair<Idx, Idx>, Rational> terms;

  void add(const Idx& alpha, const Idx& blade, const Rational& q) {
    if (q == 0) return;
    auto [it, fresh] = terms.try_emplace({alpha, blade}, q);
    if (!fresh) {
      it->second += q;
      if (it->second == 0) terms.erase(it);
    }
  }
  friend bool operator==(const Poly&, const Poly&) = default;
};

inline Poly from_lib(const hfischer::CliffordPoly& p) {
  Poly out{p.dimension(), {}};
  for (const auto& [mono, q] : p.terms()) out.add(mono.alpha.exponents(), mono.blade.indices(), q);
  return out;
}

inline hfischer::CliffordPoly to_lib(const Poly& p) {
  hfischer::CliffordPoly out(p.m);
  for (const auto& [key, q] : p.terms) {
    out.add_term(hfischer::Monomial{hfischer::MultiIndex(p.m, key.first), hfischer::Blade::from_indices(key.second, p.m)},
                 q);
  }
  return out;
}

inline Poly operator+(Poly a, const Poly& b) {
  for (const auto& [key, q] : b.terms) a.add(key.first, key.second, q);
  return a;
}
inline Poly scale(const Rational& c, Poly a) {
  Poly out{a.m, {}};
  for (const auto& [key, q] : a.terms) out.add(key.first, key.second, c * q);
  return out;
}
inline Poly operator-(const Poly& a, const Poly& b) { return a + scale(-1, b); }

inline Poly partial(const Poly& p, int j) {
  Poly out{p.m, {}};
  for (const auto& [key, q] : p.terms) {
    Idx alpha = key.first;
    const int e = alpha[j - 1];
    if (e == 0) continue;
    alpha[j - 1] = e - 1;
    out.add(alpha, key.second, q * e);
  }
  return out;
}

inline Poly times_var(const Poly& p, int j) {
  Poly out{p.m, {}};
  for (const auto& [key, q] : p.terms) {
    Idx alpha = key.first;
    alpha[j - 1] += 1;
    out.add(alpha, key.second, q);
  }
  return out;
}

/// v * P (left = true) or P * v, coefficientwise.
inline Poly mv_mul(const Poly& p, const MV& v, bool left) {
  Poly out{p.m, {}};
  for (const auto& [key, q] : p.terms) {
    const MV c{{key.second, q}};
    for (const auto& [blade, r] : left ? mul(v, c) : mul(c, v)) out.add(key.first, blade, r);
  }
  return out;
}

inline Poly grade_part(const Poly& p, int s) {
  Poly out{p.m, {}};
  for (const auto& [key, q] : p.terms) {
    if (static_cast<int>(key.second.size()) == s) out.add(key.first, key.second, q);
  }
  return out;
}

inline Poly dirac(const Poly& p) {
  Poly out{p.m, {}};
  for (int j = 1; j <= p.m; ++j) out = out + mv_mul(partial(p, j), generator(j), true);
  return out;
}

inline Poly dirac_right(const Poly& p) {
  Poly out{p.m, {}};
  for (int j = 1; j <= p.m; ++j) out = out + mv_mul(partial(p, j), generator(j), false);
  return out;
}

inline Poly x_left(const Poly& p) {
  Poly out{p.m, {}};
  for (int j = 1; j <= p.m; ++j) out = out + times_var(mv_mul(p, generator(j), true), j);
  return out;
}

inline Poly x_right(const Poly& p) {
  Poly out{p.m, {}};
  for (int j = 1; j <= p.m; ++j) out = out + times_var(mv_mul(p, generator(j), false), j);
  return out;
}

/// Applies f to each grade part separately and keeps grade s + shift of the result.
template <typename F>
Poly graded(const Poly& p, int shift, F f) {
  Poly out{p.m, {}};
  for (int s = 0; s <= p.m; ++s) {
    const Poly part = grade_part(p, s);
    if (part.terms.empty()) continue;
    out = out + grade_part(f(part), s + shift);
  }
  return out;
}

inline Poly dplus(const Poly& p) { return graded(p, 1, dirac); }
inline Poly dminus(const Poly& p) { return graded(p, -1, dirac); }
inline Poly xwedge(const Poly& p) { return graded(p, 1, x_left); }
inline Poly xdot(const Poly& p) { return graded(p, -1, x_left); }

inline Poly laplacian(const Poly& p) {
  Poly out{p.m, {}};
  for (int j = 1; j <= p.m; ++j) out = out + partial(partial(p, j), j);
  return out;
}

inline Poly norm_squared(const Poly& p) {
  Poly out{p.m, {}};
  for (int j = 1; j <= p.m; ++j) out = out + times_var(times_var(p, j), j);
  return out;
}

inline Poly euler(const Poly& p) {
  Poly out{p.m, {}};
  for (int j = 1; j <= p.m; ++j) out = out + times_var(partial(p, j), j);
  return out;
}

/// -sum_j e_j ^ (e_j . P)
inline Poly ferm_plus(const Poly& p) {
  return graded(p, 0, [](const Poly& part) {
    Poly out{part.m, {}};
    const int s = static_cast<int>(part.terms.begin()->first.second.size());
    for (int j = 1; j <= part.m; ++j) {
      const Poly dot = grade_part(mv_mul(part, generator(j), true), s - 1);
      out = out - grade_part(mv_mul(dot, generator(j), true), s);
    }
    return out;
  });
}

/// -sum_j e_j . (e_j ^ P)
inline Poly ferm_minus(const Poly& p) {
  return graded(p, 0, [](const Poly& part) {
    Poly out{part.m, {}};
    const int s = static_cast<int>(part.terms.begin()->first.second.size());
    for (int j = 1; j <= part.m; ++j) {
      const Poly wedge = grade_part(mv_mul(part, generator(j), true), s + 1);
      out = out - grade_part(mv_mul(wedge, generator(j), true), s);
    }
    return out;
  });
}

inline int parity(int s) { return s % 2 == 0 ? 1 : -1; }

/// Modified Laplacian from the two-sided Dirac form: (-1)^s d(P d) on each grade.
inline Poly laplacian_tilde(const Poly& p) {
  return graded(p, 0, [](const Poly& part) {
    const int s = static_cast<int>(part.terms.begin()->first.second.size());
    return scale(parity(s), dirac(dirac_right(part)));
  });
}

inline MV evaluate(const Poly& p, const std::vector<Rational>& point) {
  MV out;
  for (const auto& [key, q] : p.terms) {
    Rational v = q;
    for (int i = 0; i < p.m; ++i) {
      for (int e = 0; e < key.first[i]; ++e) v *= point[i];
    }
    add_to(out, key.second, v);
  }
  return out;
}

// ---- enumeration ------------------------------------------------------------------

inline void alphas_rec(int m, int k, int i, Idx& cur, std::vector<Idx>& out) {
  if (i == m - 1) {
    cur[i] = k;
    out.push_back(cur);
    return;
  }
  for (int e = k; e >= 0; --e) {
    cur[i] = e;
    alphas_rec(m, k - e, i + 1, cur, out);
  }
}

inline std::vector<Idx> alphas(int m, int k) {
  std::vector<Idx> out;
  if (k < 0) return out;
  Idx cur(m, 0);
  alphas_rec(m, k, 0, cur, out);
  return out;
}

inline std::vector<Idx> blades(int m, int s) {
  std::vector<Idx> out;
  for (unsigned mask = 0; mask < (1U << m); ++mask) {
    Idx b;
    for (int i = 0; i < m; ++i) {
      if (mask & (1U << i)) b.push_back(i + 1);
    }
    if (static_cast<int>(b.size()) == s) out.push_back(b);
  }
  return out;
}

inline std::vector<Poly> monomials(int m, const std::vector<int>& grades, int k) {
  std::vector<Poly> out;
  for (const auto& a : alphas(m, k)) {
    for (int s : grades) {
      for (const auto& b : blades(m, s)) {
        Poly p{m, {}};
        p.add(a, b, 1);
        out.push_back(p);
      }
    }
  }
  return out;
}

inline long binomial(long n, long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  long c = 1;
  for (long i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
  return c;
}

// ---- linear algebra --------------------------------------------------------------

using Matrix = std::vector<std::vector<Rational>>;  // row-major

/// Coordinate matrix of polynomials: one column per polynomial, rows the union of keys.
inline Matrix columns_of(const std::vector<Poly>& polys) {
  std::map<std::pair<Idx, Idx>, std::size_t> rows;
  for (const auto& p : polys) {
    for (const auto& [key, q] : p.terms) rows.try_emplace(key, 0);
  }
  std::size_t r = 0;
  for (auto& [key, idx] : rows) idx = r++;
  Matrix mat(rows.size(), std::vector<Rational>(polys.size()));
  for (std::size_t c = 0; c < polys.size(); ++c) {
    for (const auto& [key, q] : polys[c].terms) mat[rows.at(key)][c] = q;
  }
  return mat;
}

/// Gauss-Jordan; returns pivot columns and leaves `a` reduced.
inline std::vector<std::size_t> gauss_jordan(Matrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][c];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t cc = 0; cc < cols; ++cc) a[r][cc] -= f * a[row][cc];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline std::size_t rank_of(const std::vector<Poly>& polys) {
  if (polys.empty()) return 0;
  Matrix mat = columns_of(polys);
  return gauss_jordan(mat, polys.size()).size();
}

/// Kernel of the linear map f on span(domain), as polynomials.
template <typename F>
std::vector<Poly> kernel(const std::vector<Poly>& domain, F f) {
  std::vector<Poly> images;
  for (const auto& d : domain) images.push_back(f(d));
  Matrix mat = columns_of(images);
  const std::size_t n = domain.size();
  if (mat.empty()) mat.assign(1, std::vector<Rational>(n));
  const auto pivots = gauss_jordan(mat, n);
  std::vector<Poly> out;
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Poly v = domain[free];
    for (std::size_t i = 0; i < pivots.size(); ++i) v = v - scale(mat[i][free], domain[pivots[i]]);
    out.push_back(v);
  }
  return out;
}

/// True when q lies in span(basis).
inline bool in_span(const std::vector<Poly>& basis, const Poly& q) {
  std::vector<Poly> with = basis;
  with.push_back(q);
  return rank_of(with) == rank_of(basis);
}

// ---- random ------------------------------------------------------------------------

inline Rational random_rational(std::mt19937_64& rng, int num = 6, int den = 5) {
  std::uniform_int_distribution<int> n(-num, num);
  std::uniform_int_distribution<int> d(1, den);
  Rational q(n(rng), d(rng));
  q.canonicalize();
  return q;
}

inline Poly random_bihomogeneous(std::mt19937_64& rng, int m, int s, int k) {
  Poly p{m, {}};
  std::bernoulli_distribution keep(0.6);
  for (const auto& a : alphas(m, k)) {
    for (const auto& b : blades(m, s)) {
      if (keep(rng)) p.add(a, b, random_rational(rng));
    }
  }
  if (p.terms.empty()) p.add(alphas(m, k).front(), blades(m, s).front(), 1);
  return p;
}

}  // namespace oracle
