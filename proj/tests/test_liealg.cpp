#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_support.hpp"
#include "vzk/liealg.hpp"

using namespace vzk;

TEST_CASE("basis order: plus block then minus block, lexicographic") {
  GroupShape s{2, 3};
  CHECK(basis_position(BasisIndex{PSign::plus, 1, 1}, s) == 0);
  CHECK(basis_position(BasisIndex{PSign::plus, 2, 3}, s) == 5);
  CHECK(basis_position(BasisIndex{PSign::minus, 1, 1}, s) == 6);
  CHECK(basis_position(BasisIndex{PSign::minus, 2, 3}, s) == 11);
  for (int p = 0; p < 12; ++p) CHECK(basis_position(basis_at(p, s), s) == p);
  CHECK_THROWS_AS(basis_position(BasisIndex{PSign::plus, 3, 1}, s),
                  invalid_input);
}

TEST_CASE("matrix entries of the two blocks") {
  GroupShape s{1, 2};
  CHECK(matrix_entry(BasisIndex{PSign::plus, 1, 2}, s) == std::pair{1, 3});
  CHECK(matrix_entry(BasisIndex{PSign::minus, 1, 1}, s) == std::pair{2, 1});
  CHECK(basis_name(BasisIndex{PSign::plus, 1, 2}, s) == "E(1,3)");
}

TEST_CASE("parabolic data for U(1,2), H=(0;1,-1)") {
  auto data = parabolic_from_dominant({{0}, {1, -1}}, GroupShape{1, 2});
  REQUIRE(data.p_cap_u.size() == 2);
  CHECK(data.p_cap_u[0] == BasisIndex{PSign::plus, 1, 2});
  CHECK(data.p_cap_u[1] == BasisIndex{PSign::minus, 1, 1});
  CHECK(data.r == 2);
  CHECK(data.bidegree == Bidegree{1, 1});
}

TEST_CASE("parabolic data for H = 0 and for the U(2,3) example") {
  auto zero = parabolic_from_dominant({{0, 0}, {0, 0}}, GroupShape{2, 2});
  CHECK(zero.p_cap_u.empty());
  CHECK(zero.r == 0);
  CHECK(zero.compact_u.empty());

  auto big = parabolic_from_dominant({{2, 0}, {1, 0, -1}}, GroupShape{2, 3});
  CHECK(big.r == 5);
  CHECK(big.bidegree == Bidegree{4, 1});
}

TEST_CASE("parabolic rejects non-dominant input") {
  CHECK_THROWS_AS(parabolic_from_dominant({{0, 1}, {0, 0}}, GroupShape{2, 2}),
                  invalid_input);
}

TEST_CASE("R from the parabolic equals the closed form, exhaustive a,b <= 3") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      GroupShape shape{a, b};
      std::vector<std::vector<int>> xs, ys;
      vzt::oracle_tuples(a, a + b, xs);
      vzt::oracle_tuples(b, a + b, ys);
      for (const auto& x : xs)
        for (const auto& y : ys) {
          DominantElement h{x, y};
          auto data = parabolic_from_dominant(h, shape);
          auto info = cohomological_degree(partitions_from_dominant(h, shape));
          CHECK(data.r == info.r);
          CHECK(data.bidegree == info.bidegree);
        }
    }
}

TEST_CASE("ad action structure constants in U(1,2)") {
  GroupShape s{1, 2};
  // [E32, E13] = -E12
  auto first = ad_action_on_p(3, 2, BasisIndex{PSign::plus, 1, 2}, s);
  REQUIRE(first.size() == 1);
  CHECK(first[0] == AdTerm{-1, BasisIndex{PSign::plus, 1, 1}});
  // [E32, E21] = E31
  auto second = ad_action_on_p(3, 2, BasisIndex{PSign::minus, 1, 1}, s);
  REQUIRE(second.size() == 1);
  CHECK(second[0] == AdTerm{1, BasisIndex{PSign::minus, 1, 2}});
  // non-compact generator rejected
  CHECK_THROWS_AS(ad_action_on_p(1, 2, BasisIndex{PSign::plus, 1, 1}, s),
                  invalid_input);
}

TEST_CASE("diagonal generators act by the weight") {
  GroupShape s{2, 2};
  for (int p = 0; p < 8; ++p) {
    BasisIndex v = basis_at(p, s);
    for (int d = 1; d <= 4; ++d) {
      auto terms = ad_action_on_p(d, d, v, s);
      int w = weight_at(v, d, s);
      if (w == 0) {
        CHECK(terms.empty());
      } else {
        REQUIRE(terms.size() == 1);
        CHECK(terms[0] == AdTerm{w, v});
      }
    }
  }
}

TEST_CASE("ad action preserves the plus/minus split") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      GroupShape shape{a, b};
      for (int s = 1; s <= a + b; ++s)
        for (int t = 1; t <= a + b; ++t) {
          if (!is_compact_generator(s, t, shape)) continue;
          for (int p = 0; p < 2 * a * b; ++p) {
            BasisIndex v = basis_at(p, shape);
            for (const AdTerm& term : ad_action_on_p(s, t, v, shape))
              CHECK(term.target.sign == v.sign);
          }
        }
    }
}

TEST_CASE("Jacobi identity on the p-module structure") {
  // [Z,[W,v]] - [W,[Z,v]] = [[Z,W],v] with [E_st, E_uv] = d_tu E_sv - d_vs E_ut
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 3; ++b) {
      GroupShape shape{a, b};
      auto compact = [&](int s, int t) { return is_compact_generator(s, t, shape); };
      auto apply = [&](int s, int t, const std::vector<std::pair<int, BasisIndex>>& v) {
        std::vector<std::pair<int, BasisIndex>> out;
        for (const auto& [c, idx] : v)
          for (const AdTerm& term : ad_action_on_p(s, t, idx, shape))
            out.emplace_back(c * term.coeff, term.target);
        return out;
      };
      auto total = [&](std::vector<std::pair<int, BasisIndex>> v) {
        std::vector<int> coords(static_cast<size_t>(2 * a * b), 0);
        for (const auto& [c, idx] : v)
          coords[static_cast<size_t>(basis_position(idx, shape))] += c;
        return coords;
      };
      for (int zs = 1; zs <= a + b; ++zs)
        for (int zt = 1; zt <= a + b; ++zt)
          for (int ws = 1; ws <= a + b; ++ws)
            for (int wt = 1; wt <= a + b; ++wt) {
              if (!compact(zs, zt) || !compact(ws, wt)) continue;
              for (int p = 0; p < 2 * a * b; ++p) {
                std::vector<std::pair<int, BasisIndex>> v{{1, basis_at(p, shape)}};
                auto lhs = total(apply(zs, zt, apply(ws, wt, v)));
                auto rhs = total(apply(ws, wt, apply(zs, zt, v)));
                for (size_t c = 0; c < lhs.size(); ++c) lhs[c] -= rhs[c];
                // [Z,W] = d(zt,ws) E_{zs,wt} - d(wt,zs) E_{ws,zt}
                std::vector<int> bracket(static_cast<size_t>(2 * a * b), 0);
                if (zt == ws && compact(zs, wt))
                  for (const AdTerm& term : ad_action_on_p(zs, wt, basis_at(p, shape), shape))
                    bracket[static_cast<size_t>(basis_position(term.target, shape))] +=
                        term.coeff;
                if (wt == zs && compact(ws, zt))
                  for (const AdTerm& term : ad_action_on_p(ws, zt, basis_at(p, shape), shape))
                    bracket[static_cast<size_t>(basis_position(term.target, shape))] -=
                        term.coeff;
                CHECK(lhs == bracket);
              }
            }
    }
}

TEST_CASE("embedding map fixtures") {
  auto small = embedding_basis_map(EmbeddingShape{1, 1, 1});
  GroupShape big{1, 2};
  REQUIRE(small.p_cap_r.size() == 2);
  CHECK(small.p_cap_r[0] == BasisIndex{PSign::plus, 1, 2});   // E(1,3)
  CHECK(small.p_cap_r[1] == BasisIndex{PSign::minus, 1, 2});  // E(3,1)
  CHECK(basis_name(small.p_cap_r[0], big) == "E(1,3)");
  CHECK(basis_name(small.p_cap_r[1], big) == "E(3,1)");

  auto id = embedding_basis_map(EmbeddingShape{1, 1, 0});
  CHECK(id.p_cap_r.empty());
  // r = 0: the inclusion is a bijection on basis indices
  GroupShape hs = id.shape.h_shape();
  for (int p = 0; p < 2; ++p)
    CHECK(basis_position(id.include(basis_at(p, hs)), id.shape.g_shape()) == p);

  CHECK(embedding_basis_map(EmbeddingShape{2, 2, 1}).p_cap_r.size() == 4);
}

TEST_CASE("embedding inclusion is order preserving") {
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      for (int r = 0; r <= 2; ++r) {
        EmbeddingShape e{p, q, r};
        auto map = embedding_basis_map(e);
        GroupShape hs = e.h_shape(), gs = e.g_shape();
        int prev = -1;
        for (int n = 0; n < 2 * p * q; ++n) {
          int mapped = basis_position(map.include(basis_at(n, hs)), gs);
          CHECK(mapped > prev);
          prev = mapped;
        }
      }
}
