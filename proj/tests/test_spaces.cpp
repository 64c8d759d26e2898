#include "doctest.h"
#include "helpers.hpp"
#include "hfischer/spaces.hpp"
#include "oracle.hpp"

using namespace hfischer;

namespace {

std::vector<oracle::Poly> to_oracle(const SubspaceBasis& b) {
  std::vector<oracle::Poly> out;
  for (const auto& v : b.vectors()) out.push_back(oracle::from_lib(v));
  return out;
}

// Same span as the oracle kernel.
template <typename F>
void check_kernel(const SubspaceBasis& b, int m, const std::vector<int>& grades, int k, F f) {
  const auto expected = oracle::kernel(oracle::monomials(m, grades, k), f);
  const auto got = to_oracle(b);
  CHECK(got.size() == expected.size());
  for (const auto& v : got) CHECK(oracle::in_span(expected, v));
}

}  // namespace

TEST_SUITE("spaces") {
  TEST_CASE("Hodge-de Rham examples") {
    const auto& h00 = hodge(3, 0, 0);
    REQUIRE(h00.dim() == 1);
    CHECK(h00.vectors()[0] == CliffordPoly::constant(Multivector::scalar(3, 1)));
    CHECK(hodge(3, 1, 1).dim() == 5);
    CHECK(hodge(3, 0, 2).dim() == 0);
    CHECK(hodge(3, 3, 0).dim() == 1);
    CHECK(hodge(3, 4, 1).is_zero());
    CHECK(hodge(3, 1, -1).is_zero());
  }

  TEST_CASE("solution spaces match oracle kernels") {
    for (int m = 2; m <= 3; ++m) {
      for (int k = 0; k <= 3; ++k) {
        for (int s = 0; s <= m; ++s) {
          const std::vector<int> g{s};
          const GradeSet gs = GradeSet::single(s);
          check_kernel(space_basis(SpaceKind::Hodge, m, gs, k), m, g, k, [](const oracle::Poly& p) {
            return oracle::dplus(p) + oracle::dminus(p);
          });
          check_kernel(space_basis(SpaceKind::Harmonic, m, gs, k), m, g, k, oracle::laplacian);
          check_kernel(space_basis(SpaceKind::Infra, m, gs, k), m, g, k, oracle::laplacian_tilde);
        }
        std::vector<int> all;
        for (int s = 0; s <= m; ++s) all.push_back(s);
        check_kernel(space_basis(SpaceKind::MonoLeft, m, GradeSet::full(m), k), m, all, k, oracle::dirac);
        check_kernel(space_basis(SpaceKind::MonoRight, m, GradeSet::full(m), k), m, all, k, oracle::dirac_right);
        check_kernel(space_basis(SpaceKind::TwoSided, m, GradeSet::full(m), k), m, all, k, [](const oracle::Poly& p) {
          // Stack both equations by keeping them in separate grade-shifted copies.
          oracle::Poly out = oracle::dirac(p);
          for (const auto& [key, q] : oracle::dirac_right(p).terms) {
            oracle::Idx alpha = key.first;
            alpha.push_back(1);
            out.add(alpha, key.second, q);
          }
          return out;
        });
      }
    }
  }

  TEST_CASE("scalar harmonic dimensions") {
    for (int m = 2; m <= 4; ++m) {
      for (int k = 0; k <= 4; ++k) {
        const long expected = oracle::binomial(m + k - 1, k) - oracle::binomial(m + k - 3, k - 2);
        CHECK(static_cast<long>(space_basis(SpaceKind::Harmonic, m, GradeSet::single(0), k).dim()) == expected);
      }
    }
  }

  TEST_CASE("two-sided monogenics are the Hodge-de Rham solutions") {
    for (int s = 0; s <= 3; ++s) {
      for (int k = 0; k <= 3; ++k) {
        CHECK(space_basis(SpaceKind::TwoSided, 3, GradeSet::single(s), k).dim() == hodge(3, s, k).dim());
      }
    }
  }

  TEST_CASE("Omega-words and word images") {
    CHECK(omega_words(0).size() == 1);
    const auto w2 = omega_words(2);
    REQUIRE(w2.size() == 5);
    CHECK(w2[1].to_string() == "w");
    CHECK(w2[2].to_string() == "d");
    CHECK(w2[3].to_string() == "wd");
    CHECK(w2[4].to_string() == "dw");
    CHECK(omega_words(3).size() == 7);
    CHECK(component_space(OmegaWord{}, 3, 1, 1).dim() == 5);
    for (int k = 0; k <= 3; ++k) CHECK(component_space(OmegaWord::parse("d"), 3, 0, k).is_zero());
    CHECK(component_space(OmegaWord::parse("w"), 3, 3, 0).is_zero());
    const auto wd = component_space(OmegaWord::parse("wd"), 3, 1, 0);
    CHECK(wd.dim() == 3);
    CHECK(wd.label() == "wd*H^1_0");
    CHECK(oracle::rank_of(to_oracle(wd)) == 3);
  }

  TEST_CASE("kind names round trip") {
    for (auto kind : {SpaceKind::Hodge, SpaceKind::Harmonic, SpaceKind::Infra, SpaceKind::MonoLeft,
                      SpaceKind::MonoRight, SpaceKind::MonoS, SpaceKind::TwoSided}) {
      CHECK(parse_space_kind(space_kind_name(kind)) == kind);
    }
    CHECK_THROWS_AS(parse_space_kind("spinor"), std::invalid_argument);
  }

  TEST_CASE("non-injective maps are reported with a witness") {
    const auto& h = hodge(3, 1, 1);
    try {
      image_basis(h, [](const CliffordPoly& p) { return scale(0, p); }, "zero");
      FAIL("expected a violation");
    } catch (const TheoremViolation& e) {
      REQUIRE(e.witness());
      CHECK_FALSE(e.witness()->is_zero());
    }
  }
}
