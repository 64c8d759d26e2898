#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "hfischer/operators.hpp"
#include "oracle.hpp"

using namespace hfischer;
using testing::blade;
using testing::poly;

namespace {

CliffordPoly random_lib(std::mt19937_64& rng, int m, int s, int k) {
  return oracle::to_lib(oracle::random_bihomogeneous(rng, m, s, k));
}

CliffordPoly norm_squared(int m) {
  CliffordPoly out(m);
  for (int j = 1; j <= m; ++j) out += CliffordPoly::variable(m, j) * CliffordPoly::variable(m, j);
  return out;
}

}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("dirac parts on examples") {
    CHECK(dirac_plus(poly(3, {{{1, 0, 0}, {}}})) == CliffordPoly::constant(blade(3, {1})));
    CHECK(dirac_plus(poly(3, {{{1, 0, 0}, {1}}})).is_zero());
    CHECK(dirac_plus(poly(3, {{{0, 1, 0}, {1}}})) == CliffordPoly::constant(blade(3, {1, 2}, -1)));
    CHECK(dirac_minus(poly(3, {{{1, 0, 0}, {}}})).is_zero());
    CHECK(dirac_minus(poly(3, {{{1, 0, 0}, {1}}})) == CliffordPoly::constant(Multivector::scalar(3, -1)));
    CHECK(dirac_minus(poly(2, {{{1, 0}, {1, 2}}})) == CliffordPoly::constant(blade(2, {2}, -1)));
    CHECK(dirac_right(poly(3, {{{1, 0, 0}, {1}}})) == CliffordPoly::constant(Multivector::scalar(3, -1)));
    CHECK(dirac_right(poly(3, {{{1, 0, 0}, {}}})) == CliffordPoly::constant(blade(3, {1})));
  }

  TEST_CASE("multiplication by x on examples") {
    const auto one = CliffordPoly::constant(Multivector::scalar(3, 1));
    CHECK(x_mul(one, XMode::Wedge) == CliffordPoly::vector_variable(3));
    CHECK(x_mul(one, XMode::Dot).is_zero());
    CHECK(x_mul(poly(3, {{{1, 0, 0}, {1}}}), XMode::Dot) == poly(3, {{{2, 0, 0}, {}, "-1"}}));
    CHECK(sandwich_x(CliffordPoly::constant(Multivector::scalar(3, 5))) == scale(-5, norm_squared(3)));
    CHECK(sandwich_x(CliffordPoly(3)).is_zero());
  }

  TEST_CASE("derived operators on examples") {
    CHECK(apply(derived_operator("LAPLACIAN"), poly(3, {{{2, 0, 0}, {}}})) ==
          CliffordPoly::constant(Multivector::scalar(3, 2)));
    const auto p = poly(3, {{{1, 1, 0}, {3}}});
    CHECK(apply(derived_operator("EULER"), p) == scale(2, p));
    const auto q = poly(3, {{{1, 0, 0}, {1, 2}}});
    CHECK(apply(derived_operator("FERM_PLUS"), q) == scale(2, q));
    CHECK(apply(derived_operator("ferm-minus"), q) == q);
    CHECK(apply(derived_operator("DIRAC"), poly(2, {{{1, 0}, {1}}, {{0, 1}, {2}}})) ==
          CliffordPoly::constant(Multivector::scalar(2, -2)));
    CHECK_THROWS_AS(derived_operator("NOPE"), std::invalid_argument);
    for (const auto& name : {"dplus", "dminus", "xwedge", "xdot", "xfull", "dirac", "dirac-right", "dirac-tilde",
                             "laplacian", "laplacian-tilde", "euler", "ferm-plus", "ferm-minus", "A", "B", "X",
                             "X-tilde", "sandwich-x"}) {
      CHECK_NOTHROW(derived_operator(name));
    }
  }

  TEST_CASE("fast operators agree with literal definitions on random polynomials") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const int m = 2 + trial % 3;
      const int s = static_cast<int>(rng() % (m + 1));
      const int k = static_cast<int>(rng() % 4);
      const auto o = oracle::random_bihomogeneous(rng, m, s, k);
      const auto p = oracle::to_lib(o);
      CHECK(oracle::from_lib(dirac_plus(p)) == oracle::dplus(o));
      CHECK(oracle::from_lib(dirac_minus(p)) == oracle::dminus(o));
      CHECK(oracle::from_lib(dirac(p)) == oracle::dirac(o));
      CHECK(oracle::from_lib(dirac_right(p)) == oracle::dirac_right(o));
      CHECK(oracle::from_lib(x_mul(p, XMode::Wedge)) == oracle::xwedge(o));
      CHECK(oracle::from_lib(x_mul(p, XMode::Dot)) == oracle::xdot(o));
      CHECK(oracle::from_lib(x_mul(p, XMode::Full)) == oracle::x_left(o));
      CHECK(oracle::from_lib(sandwich_x(p)) == oracle::x_right(oracle::x_left(o)));
      CHECK(oracle::from_lib(apply(derived_operator("LAPLACIAN"), p)) == oracle::laplacian(o));
      CHECK(oracle::from_lib(apply(derived_operator("LAPLACIAN_TILDE"), p)) == oracle::laplacian_tilde(o));
      CHECK(oracle::from_lib(apply(derived_operator("EULER"), p)) == oracle::euler(o));
      CHECK(oracle::from_lib(apply(derived_operator("FERM_PLUS"), p)) == oracle::ferm_plus(o));
      CHECK(oracle::from_lib(apply(derived_operator("FERM_MINUS"), p)) == oracle::ferm_minus(o));
      CHECK(by_definition::dirac_left(p) == dirac(p));
      CHECK(by_definition::dirac_right(p) == dirac_right(p));
      CHECK(by_definition::sandwich_x(p) == sandwich_x(p));
    }
  }

  TEST_CASE("modified Laplacian on scalars is minus the Laplacian") {
    std::mt19937_64 rng(3);
    for (int k = 0; k <= 4; ++k) {
      const auto f = random_lib(rng, 3, 0, k);
      CHECK(apply(derived_operator("LAPLACIAN_TILDE"), f) == -by_definition::laplacian(f));
    }
  }

  TEST_CASE("Omega-words") {
    const auto one = CliffordPoly::constant(Multivector::scalar(3, 1));
    CHECK(word_apply(OmegaWord{}, one) == one);
    CHECK(word_apply(OmegaWord::parse("wd"), one).is_zero());
    CHECK(word_apply(OmegaWord::parse("dw"), one) == -norm_squared(3));
    CHECK_THROWS_AS(OmegaWord::parse("ww"), std::invalid_argument);
    CHECK_THROWS_AS(OmegaWord::parse("wx"), std::invalid_argument);
    const auto w = OmegaWord::parse("dwd");
    CHECK(w.grade_shift() == -1);
    CHECK(w.first_acting() == Letter::Dot);
    CHECK(w.to_string() == "dwd");
  }

  TEST_CASE("target bidegrees") {
    const auto t = target_bidegrees(ops::dplus(), 3, {Bidegree{2, 1}});
    CHECK(t == std::set<Bidegree>{Bidegree{1, 2}});
    CHECK(target_bidegrees(ops::dminus(), 3, {Bidegree{2, 0}}).empty());
  }

  TEST_CASE("H-action examples") {
    const RotorElement r({blade(3, {1})});
    CHECK(h_action(r, CliffordPoly::vector_variable(3)) == CliffordPoly::vector_variable(3));
    const auto p = poly(3, {{{0, 1, 0}, {2}}});
    CHECK(h_action(r, p) == p);
    CHECK_THROWS_AS(RotorElement({blade(3, {1}, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(RotorElement({blade(3, {1, 2})}), std::invalid_argument);
  }

  TEST_CASE("H-action matches pointwise conjugation") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const int m = 2 + trial % 2;
      std::vector<Multivector> factors;
      for (int f = 0; f < 1 + trial % 3; ++f) {
        std::vector<Rational> t;
        for (int i = 0; i < m - 1; ++i) t.push_back(oracle::random_rational(rng, 4, 3));
        factors.push_back(rational_unit_vector(m, t));
      }
      const RotorElement r(factors);
      const auto o = oracle::random_bihomogeneous(rng, m, static_cast<int>(rng() % (m + 1)), 2);
      const auto hp = oracle::from_lib(h_action(r, oracle::to_lib(o)));
      oracle::MV rv, rinv{{oracle::Idx{}, Rational(1)}};
      rv = rinv;
      for (const auto& u : factors) {
        oracle::MV uv;
        for (const auto& [b, q] : u.terms()) oracle::add_to(uv, b.indices(), q);
        rv = oracle::mul(rv, uv);
        oracle::MV neg;
        for (const auto& [b, q] : uv) neg[b] = -q;
        rinv = oracle::mul(neg, rinv);
      }
      for (int pt = 0; pt < 3; ++pt) {
        std::vector<Rational> x;
        oracle::MV xv;
        for (int i = 1; i <= m; ++i) {
          x.push_back(oracle::random_rational(rng));
          oracle::add_to(xv, {i}, x.back());
        }
        const oracle::MV y = oracle::mul(oracle::mul(rinv, xv), rv);
        std::vector<Rational> ycoords(m);
        for (const auto& [b, q] : y) {
          REQUIRE(b.size() == 1);
          ycoords[b[0] - 1] = q;
        }
        const oracle::MV expected = oracle::mul(oracle::mul(rv, oracle::evaluate(o, ycoords)), rinv);
        CHECK(oracle::evaluate(hp, x) == expected);
      }
    }
  }
}
