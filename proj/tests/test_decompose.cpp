#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "hfischer/decompose.hpp"
#include "oracle.hpp"

using namespace hfischer;
using testing::poly;

namespace {

std::vector<std::size_t> dims(const TheoremReport& r) {
  std::vector<std::size_t> out;
  for (const auto& c : r.components) out.push_back(c.dim);
  return out;
}

CliffordPoly norm_squared(int m) {
  CliffordPoly out(m);
  for (int j = 1; j <= m; ++j) out += CliffordPoly::variable(m, j) * CliffordPoly::variable(m, j);
  return out;
}

}  // namespace

TEST_SUITE("decompose") {
  TEST_CASE("Fischer decomposition of simple inputs") {
    const auto one = CliffordPoly::constant(Multivector::scalar(3, 1));
    auto d = fischer_h_decompose(one);
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].label == "H^0_0");
    CHECK(d.exact());

    d = fischer_h_decompose(norm_squared(3));
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].label == "dw*H^0_0");
    CHECK(d.components[0].part == norm_squared(3));

    const auto x1 = CliffordPoly::variable(3, 1);
    d = fischer_h_decompose(x1);
    CHECK(d.exact());
    CHECK(d.reconstruct() == x1);
    for (const auto& c : d.components) CHECK(c.label.size() == std::string("d*H^1_0").size());
    REQUIRE(d.component("d*H^1_0"));
    CHECK(*d.component("d*H^1_0") == x1);
  }

  TEST_CASE("Fischer dimension bookkeeping") {
    for (int m = 2; m <= 3; ++m) {
      for (int k = 0; k <= 4; ++k) {
        for (int s = 0; s <= m; ++s) {
          const auto r = fischer_h_frame(m, s, k).report;
          CHECK(r.ok());
          CHECK(static_cast<long>(r.total_dim()) == oracle::binomial(m, s) * oracle::binomial(m + k - 1, k));
        }
      }
    }
  }

  TEST_CASE("Fischer round trips are deterministic") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      const int m = 2 + trial % 2;
      CliffordPoly p(m);
      for (int k = 0; k <= 3; ++k) p += oracle::to_lib(oracle::random_bihomogeneous(rng, m, trial % (m + 1), k));
      const auto a = fischer_h_decompose(p);
      const auto b = fischer_h_decompose(p);
      CHECK(a.exact());
      CHECK(a.reconstruct() == p);
      REQUIRE(a.components.size() == b.components.size());
      for (std::size_t i = 0; i < a.components.size(); ++i) {
        CHECK(a.components[i].label == b.components[i].label);
        CHECK(a.components[i].part == b.components[i].part);
      }
    }
  }

  TEST_CASE("Homma refinement") {
    const auto r = homma_refine(3, 1, 2);
    CHECK(r.report.ok());
    CHECK(dims(r.report) == std::vector<std::size_t>{7, 0, 5, 3});
    CHECK(r.report.total_dim() == 15);
    const auto zero = homma_refine(3, 0, 2);
    CHECK(zero.report.ok());
    CHECK(zero.parts[1].is_zero());
    CHECK(zero.parts[3].is_zero());
  }

  TEST_CASE("W is generated by the stated combination") {
    const auto r = homma_refine(3, 1, 2);
    const auto& w = r.parts[3];
    std::vector<oracle::Poly> expected;
    for (const auto& h : hodge(3, 1, 0).vectors()) {
      const auto o = oracle::from_lib(h);
      expected.push_back(oracle::scale(2, oracle::xwedge(oracle::xdot(o))) - oracle::xdot(oracle::xwedge(o)));
    }
    for (const auto& v : w.vectors()) CHECK(oracle::in_span(expected, oracle::from_lib(v)));
  }

  TEST_CASE("inframonogenic refinement") {
    const auto r = inframonogenic_refine(3, 1, 2);
    CHECK(r.report.ok());
    CHECK(dims(r.report) == std::vector<std::size_t>{7, 0, 5, 3});
    std::vector<oracle::Poly> expected;
    for (const auto& h : hodge(3, 1, 0).vectors()) {
      const auto o = oracle::from_lib(h);
      expected.push_back(oracle::scale(4, oracle::xwedge(oracle::xdot(o))) +
                         oracle::scale(3, oracle::xdot(oracle::xwedge(o))));
    }
    for (const auto& v : r.parts[3].vectors()) CHECK(oracle::in_span(expected, oracle::from_lib(v)));
  }

  TEST_CASE("harmonic and inframonogenic intersection") {
    const auto r = harmonic_infra_intersection(3, 1, 2);
    CHECK(r.report.ok());
    CHECK(r.report.total_dim() == 12);
    for (int m = 2; m <= 3; ++m) {
      for (int s = 0; s <= m; ++s) {
        CHECK(static_cast<long>(harmonic_infra_intersection(m, s, 0).report.total_dim()) == oracle::binomial(m, s));
      }
      for (int k = 0; k <= 3; ++k) {
        const auto scalar = harmonic_infra_intersection(m, 0, k).report;
        CHECK(scalar.ok());
        CHECK(scalar.target_dim == space_basis(SpaceKind::Harmonic, m, GradeSet::single(0), k).dim());
      }
    }
  }

  TEST_CASE("first three Homma pieces span the intersection") {
    for (int s = 0; s <= 3; ++s) {
      for (int k = 0; k <= 3; ++k) {
        const auto a = homma_refine(3, s, k);
        const auto b = harmonic_infra_intersection(3, s, k);
        for (std::size_t i = 0; i < 3; ++i) {
          CHECK(a.parts[i].dim() == b.parts[i].dim());
          CHECK(a.parts[i].vectors() == b.parts[i].vectors());
        }
      }
    }
  }

  TEST_CASE("monogenic refinements") {
    auto r = monogenic_refine(2, 1, GradeSet::full(2), MonogenicSide::Left);
    CHECK(r.report.ok());
    CHECK(r.report.total_dim() == 4);
    const std::vector<int> g{1, 3};
    r = monogenic_refine(3, 1, GradeSet::of(g), MonogenicSide::Left);
    CHECK(r.report.ok());
    CHECK(dims(r.report) == std::vector<std::size_t>{5, 0, 3});
    CHECK(shifted_grades(GradeSet::of(g), 3).grades() == std::vector<int>{2});
    CHECK(shifted_grades(GradeSet::full(4), 4).grades() == std::vector<int>{1, 2, 3});
    CHECK(shifted_grades(GradeSet::single(2), 4).empty());
    for (int s = 0; s <= 3; ++s) {
      const auto single = monogenic_refine(3, 2, GradeSet::single(s), MonogenicSide::Right);
      CHECK(single.report.ok());
      CHECK(single.report.total_dim() == hodge(3, s, 2).dim());
    }
    const auto full = monogenic_refine(3, 2, GradeSet::full(3), MonogenicSide::Left);
    for (const auto& part : full.parts) {
      for (const auto& v : part.vectors()) CHECK(dirac(v).is_zero());
    }
  }

  TEST_CASE("classical towers on x1 squared") {
    const auto x1 = CliffordPoly::variable(3, 1);
    const auto x1sq = x1 * x1;
    const auto third = scale(Rational(1, 3), norm_squared(3));

    auto d = classical_fischer_decompose(x1sq, TowerMode::Harmonic);
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0].part == x1sq - third);
    CHECK(d.components[1].label == "|x|^2*harmonic^0_0");
    CHECK(d.components[1].part == third);

    d = classical_fischer_decompose(x1sq, TowerMode::Infra);
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0].part == x1sq - third);
    CHECK(d.components[1].label == "x*infra^0_0*x");
    CHECK(d.components[1].part == sandwich_x(CliffordPoly::constant(Multivector::scalar(3, Rational(-1, 3)))));

    d = classical_fischer_decompose(CliffordPoly::vector_variable(3), TowerMode::Monogenic);
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].label == "x*mono_0");
  }

  TEST_CASE("refinement splits report residuals outside the refined space") {
    const auto x1 = CliffordPoly::variable(3, 1);
    auto d = refine_decompose(x1 * x1, RefineOptions{RefinementKind::Homma, std::nullopt, MonogenicSide::Left});
    CHECK_FALSE(d.exact());
    CHECK(d.residual == x1 * x1);
    const auto harmonic = x1 * CliffordPoly::variable(3, 2);
    d = refine_decompose(harmonic, RefineOptions{RefinementKind::Homma, std::nullopt, MonogenicSide::Left});
    CHECK(d.exact());
    CHECK(d.reconstruct() == harmonic);
    const auto x = CliffordPoly::vector_variable(3);
    d = refine_decompose(x, RefineOptions{RefinementKind::Monogenic, std::nullopt, MonogenicSide::Left});
    CHECK_FALSE(d.exact());
  }

  TEST_CASE("tower mode names") {
    CHECK(parse_tower_mode("infra") == TowerMode::Infra);
    CHECK_THROWS_AS(parse_tower_mode("spin"), std::invalid_argument);
  }
}
