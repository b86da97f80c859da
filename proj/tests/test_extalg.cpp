#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_support.hpp"
#include "vzk/extalg.hpp"

using namespace vzk;
using vzt::mono;

namespace {
const GroupShape kU12{1, 2};  // slots: 0=E(1,2) 1=E(1,3) 2=E(2,1) 3=E(3,1)
}

TEST_CASE("wedge signs on monomials") {
  auto e1 = mono(kU12, {0});
  auto e2 = mono(kU12, {1});
  CHECK(wedge(e1, e2) == mono(kU12, {0, 1}));
  CHECK(wedge(e2, e1) == mono(kU12, {0, 1}, -1));
  CHECK(wedge(e1, e1).is_zero());

  auto e13 = mono(kU12, {0, 2});
  CHECK(wedge(e13, mono(kU12, {1})) == mono(kU12, {0, 1, 2}, -1));
}

TEST_CASE("wedge rejects bidegrees beyond the algebra") {
  auto top_plus = mono(kU12, {0, 1});
  CHECK_THROWS_AS(wedge(top_plus, mono(kU12, {0})), invalid_input);
}

TEST_CASE("coproduct of a two-slot monomial") {
  auto v = mono(kU12, {0, 1});
  auto terms = coproduct_component(v, 1, 1);
  REQUIRE(terms.size() == 2);
  // e0 (x) e1 with sign +, e1 (x) e0 with sign -
  CHECK(terms[0].left == mask_from_positions({0}));
  CHECK(terms[0].right == mask_from_positions({1}));
  CHECK(terms[0].coeff == 1);
  CHECK(terms[1].left == mask_from_positions({1}));
  CHECK(terms[1].right == mask_from_positions({0}));
  CHECK(terms[1].coeff == -1);
}

TEST_CASE("coproduct at (deg v, 0) is v (x) 1") {
  auto v = mono(kU12, {0, 2}) + mono(kU12, {1, 2}, mpq_class(2, 3));
  auto terms = coproduct_component(v, 2, 0);
  REQUIRE(terms.size() == 2);
  for (const auto& t : terms) {
    CHECK(t.right == 0);
    CHECK(t.coeff == v.coefficient(t.left));
  }
  CHECK_THROWS_AS(coproduct_component(v, 1, 0), invalid_input);
}

TEST_CASE("wedge/coproduct adjunction, exhaustive in U(1,2)") {
  // Monomial-exhaustive over all degrees (total degree <= 4 = everything
  // here); linearity carries the identity to arbitrary vectors.
  for (Mask za = 0; za < 16; ++za) {
    auto z = Multivector::monomial(kU12, za);
    for (Mask xa = 0; xa < 16; ++xa) {
      for (Mask ya = 0; ya < 16; ++ya) {
        auto x = Multivector::monomial(kU12, xa);
        auto y = Multivector::monomial(kU12, ya);
        if (mask_degree(xa) + mask_degree(ya) != mask_degree(za)) continue;
        Bidegree out{x.bidegree().k + y.bidegree().k,
                     x.bidegree().l + y.bidegree().l};
        if (out.k > 2 || out.l > 2) continue;
        mpq_class lhs = inner_product(wedge(x, y), z);
        mpq_class rhs = pair_coproduct(
            coproduct_component(z, mask_degree(xa), mask_degree(ya)), x, y);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("wedge/coproduct adjunction on random vectors in U(2,2)") {
  GroupShape s{2, 2};
  vzt::Sampler sampler(7);
  for (int n = 0; n < 120; ++n) {
    Bidegree bx{sampler.small_int(0, 2), sampler.small_int(0, 2)};
    Bidegree by{sampler.small_int(0, 4 - bx.k), sampler.small_int(0, 4 - bx.l)};
    auto x = sampler.vector_of(s, bx);
    auto y = sampler.vector_of(s, by);
    auto z = sampler.vector_of(s, Bidegree{bx.k + by.k, bx.l + by.l});
    mpq_class lhs = inner_product(wedge(x, y), z);
    mpq_class rhs = pair_coproduct(
        coproduct_component(z, x.degree(), y.degree()), x, y);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("inner product fixtures") {
  CHECK(inner_product(mono(kU12, {0, 1}), mono(kU12, {0, 1})) == 1);
  CHECK(inner_product(mono(kU12, {0, 2}), mono(kU12, {0, 3})) == 0);
  auto v = mpq_class(1, 2) * (mono(kU12, {0, 2}) - mono(kU12, {1, 3}));
  CHECK(v.norm_squared() == mpq_class(1, 2));
  // different bidegrees pair to zero by convention
  CHECK(inner_product(mono(kU12, {0}), mono(kU12, {2})) == 0);
}

TEST_CASE("graded anticommutativity and associativity on random vectors") {
  GroupShape s{2, 2};
  vzt::Sampler sampler(11);
  for (int n = 0; n < 120; ++n) {
    Bidegree bx{sampler.small_int(0, 1), sampler.small_int(0, 1)};
    Bidegree by{sampler.small_int(0, 1), sampler.small_int(0, 1)};
    Bidegree bz{sampler.small_int(0, 1), sampler.small_int(0, 1)};
    auto x = sampler.vector_of(s, bx);
    auto y = sampler.vector_of(s, by);
    auto z = sampler.vector_of(s, bz);
    int sign = (x.degree() * y.degree()) % 2 ? -1 : 1;
    CHECK(wedge(x, y) == mpq_class(sign) * wedge(y, x));
    CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
  }
}

TEST_CASE("k_action fixtures in U(1,2)") {
  // E32 . (E13 ^ E21) = -E12 ^ E21 + E13 ^ E31
  auto v = mono(kU12, {1, 2});
  auto once = k_action(3, 2, v);
  CHECK(once == mono(kU12, {0, 2}, -1) + mono(kU12, {1, 3}));
  // twice: -2 E12 ^ E31
  CHECK(k_action(3, 2, once) == mono(kU12, {0, 3}, -2));
  // derivation on scalars
  CHECK(k_action(3, 2, Multivector::scalar_one(kU12)).is_zero());
  CHECK_THROWS_AS(k_action(1, 2, v), invalid_input);
}

TEST_CASE("k_action satisfies the derivation law on random samples") {
  GroupShape s{2, 2};
  vzt::Sampler sampler(13);
  std::vector<std::pair<int, int>> gens{{1, 2}, {2, 1}, {3, 4}, {4, 3}, {1, 1}, {3, 3}};
  for (int n = 0; n < 120; ++n) {
    auto [gs, gt] = gens[static_cast<size_t>(sampler.small_int(0, 5))];
    Bidegree bx{sampler.small_int(0, 1), sampler.small_int(0, 1)};
    Bidegree by{sampler.small_int(0, 1), sampler.small_int(0, 1)};
    auto x = sampler.vector_of(s, bx);
    auto y = sampler.vector_of(s, by);
    CHECK(k_action(gs, gt, wedge(x, y)) ==
          wedge(k_action(gs, gt, x), y) + wedge(x, k_action(gs, gt, y)));
  }
}

TEST_CASE("k_action preserves bidegree; diagonal action is integral") {
  GroupShape s{2, 3};
  vzt::Sampler sampler(17);
  for (int n = 0; n < 60; ++n) {
    Bidegree bd{sampler.small_int(0, 3), sampler.small_int(0, 3)};
    auto v = sampler.vector_of(s, bd);
    for (auto [gs, gt] : {std::pair{1, 2}, {4, 3}, {3, 5}}) {
      auto image = k_action(gs, gt, v);
      CHECK(image.bidegree() == bd);
    }
    for (int d = 1; d <= 5; ++d) {
      auto image = k_action(d, d, Multivector::monomial(s, sampler.mask_of(s, bd)));
      if (!image.is_zero()) {
        CHECK(image.terms().size() == 1);
        CHECK(image.terms()[0].coeff.get_den() == 1);
      }
    }
  }
}

TEST_CASE("rational strings round trip") {
  CHECK(rational_to_string(mpq_class(1, 2)) == "1/2");
  CHECK(rational_to_string(mpq_class(-3)) == "-3/1");
  CHECK(rational_from_string("4/6") == mpq_class(2, 3));
  CHECK_THROWS_AS(rational_from_string("x"), invalid_input);
}

TEST_CASE("display uses matrix-entry names") {
  auto v = mpq_class(1, 2) * (mono(kU12, {1, 3}) - mono(kU12, {0, 2}));
  CHECK(v.display() == "-1/2 E(1,2)^E(2,1) + 1/2 E(1,3)^E(3,1)");
  CHECK(Multivector::scalar_one(kU12).display() == "1/1");
  CHECK(Multivector(kU12, Bidegree{1, 1}).display() == "0");
}
