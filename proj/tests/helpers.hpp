#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hfischer/poly.hpp"

namespace testing {

struct Term {
  std::vector<int> alpha;
  std::vector<int> blade;
  std::string coeff = "1";
};

inline hfischer::CliffordPoly poly(int m, std::initializer_list<Term> terms) {
  hfischer::CliffordPoly p(m);
  for (const auto& t : terms) {
    p.add_term(hfischer::Monomial{hfischer::MultiIndex(m, t.alpha), hfischer::Blade::from_indices(t.blade, m)},
               hfischer::parse_rational(t.coeff));
  }
  return p;
}

inline hfischer::Multivector blade(int m, std::vector<int> indices, long c = 1) {
  return hfischer::Multivector::basis(m, hfischer::Blade::from_indices(indices, m), hfischer::Rational(c));
}

}  // namespace testing
