#include "doctest.h"
#include "hfischer/verify.hpp"

using namespace hfischer;

TEST_SUITE("verify") {
  TEST_CASE("anticommutator relations hold on small bigrades") {
    for (int s = 0; s <= 3; ++s) {
      for (int k = 0; k <= 2; ++k) CHECK(check_identities("lemma", anticommutator_relations(), 3, s, k).ok());
    }
  }

  TEST_CASE("a false identity is caught with a witness") {
    std::vector<OperatorIdentity> wrong{{"dplus=0", ops::dplus(), [](const CliffordPoly& p) {
                                           return CliffordPoly(p.dimension());
                                         }}};
    const auto r = check_identities("bogus", wrong, 3, 0, 1);
    CHECK_FALSE(r.ok());
    REQUIRE(r.witness);
  }

  TEST_CASE("sweeps are independent of thread count") {
    VerifyOptions one;
    one.m = 2;
    one.k_max = 2;
    one.threads = 1;
    VerifyOptions many = one;
    many.threads = 4;
    CHECK(dump(to_json(verify_report(one))) == dump(to_json(verify_report(many))));
  }

  TEST_CASE("Homma sweep includes the reference dimensions") {
    VerifyOptions o;
    o.m = 3;
    o.k_max = 2;
    o.theorems = {"homma"};
    const auto out = verify_report(o);
    CHECK(out.ok());
    bool found = false;
    for (const auto& r : out.reports) {
      if (r.grades == GradeSet::single(1) && r.k == 2) {
        found = true;
        REQUIRE(r.components.size() == 4);
        CHECK(r.components[0].dim == 7);
        CHECK(r.components[1].dim == 0);
        CHECK(r.components[2].dim == 5);
        CHECK(r.components[3].dim == 3);
      }
    }
    CHECK(found);
  }

  TEST_CASE("option validation") {
    VerifyOptions o;
    o.m = 0;
    CHECK_THROWS_AS(verify_report(o), std::invalid_argument);
    o.m = 2;
    o.k_max = kMaxDegree + 1;
    CHECK_THROWS_AS(verify_report(o), std::invalid_argument);
  }
}
