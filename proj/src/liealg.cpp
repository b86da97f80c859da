#include "vzk/liealg.hpp"

namespace vzk {

void validate_basis_index(const BasisIndex& v, const GroupShape& shape) {
  validate_shape(shape);
  if (v.i < 1 || v.i > shape.a || v.j < 1 || v.j > shape.b)
    throw invalid_input("basis index out of range for the group shape");
}

int basis_position(const BasisIndex& v, const GroupShape& shape) {
  validate_basis_index(v, shape);
  int offset = v.sign == PSign::plus ? 0 : shape.a * shape.b;
  return offset + (v.i - 1) * shape.b + (v.j - 1);
}

BasisIndex basis_at(int position, const GroupShape& shape) {
  validate_shape(shape);
  const int box = shape.a * shape.b;
  if (position < 0 || position >= 2 * box)
    throw invalid_input("basis position out of range");
  PSign sign = position < box ? PSign::plus : PSign::minus;
  int rest = position % box;
  return BasisIndex{sign, rest / shape.b + 1, rest % shape.b + 1};
}

std::pair<int, int> matrix_entry(const BasisIndex& v, const GroupShape& shape) {
  validate_basis_index(v, shape);
  return v.sign == PSign::plus ? std::pair{v.i, shape.a + v.j}
                               : std::pair{shape.a + v.j, v.i};
}

std::string basis_name(const BasisIndex& v, const GroupShape& shape) {
  auto [row, col] = matrix_entry(v, shape);
  return "E(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

bool is_compact_generator(int s, int t, const GroupShape& shape) {
  validate_shape(shape);
  auto in_a = [&](int u) { return u >= 1 && u <= shape.a; };
  auto in_b = [&](int u) { return u > shape.a && u <= shape.a + shape.b; };
  return (in_a(s) && in_a(t)) || (in_b(s) && in_b(t));
}

int weight_at(const BasisIndex& v, int s, const GroupShape& shape) {
  validate_basis_index(v, shape);
  auto [row, col] = matrix_entry(v, shape);
  return (s == row ? 1 : 0) - (s == col ? 1 : 0);
}

std::vector<AdTerm> ad_action_on_p(int s, int t, const BasisIndex& v,
                                   const GroupShape& shape) {
  validate_basis_index(v, shape);
  if (!is_compact_generator(s, t, shape))
    throw invalid_input("(s,t) must lie in a single diagonal block");
  if (s == t) {
    int w = weight_at(v, s, shape);
    if (w == 0) return {};
    return {AdTerm{w, v}};
  }
  if (s <= shape.a) {
    if (v.sign == PSign::plus && v.i == t)
      return {AdTerm{1, BasisIndex{PSign::plus, s, v.j}}};
    if (v.sign == PSign::minus && v.i == s)
      return {AdTerm{-1, BasisIndex{PSign::minus, t, v.j}}};
    return {};
  }
  const int js = s - shape.a;
  const int jt = t - shape.a;
  if (v.sign == PSign::plus && v.j == js)
    return {AdTerm{-1, BasisIndex{PSign::plus, v.i, jt}}};
  if (v.sign == PSign::minus && v.j == jt)
    return {AdTerm{1, BasisIndex{PSign::minus, v.i, js}}};
  return {};
}

ParabolicData parabolic_from_dominant(const DominantElement& h,
                                      const GroupShape& shape) {
  validate_shape(shape);
  if (static_cast<int>(h.x.size()) != shape.a ||
      static_cast<int>(h.y.size()) != shape.b)
    throw invalid_input("dominant element sizes must match the group shape");
  if (!is_dominant(h))
    throw invalid_input(
        "entries must be non-increasing; sort explicitly before calling");

  ParabolicData data;
  data.h = h;
  for (int i = 1; i <= shape.a; ++i)
    for (int j = 1; j <= shape.b; ++j)
      if (h.x[i - 1] > h.y[j - 1])
        data.p_cap_u.push_back(BasisIndex{PSign::plus, i, j});
  for (int i = 1; i <= shape.a; ++i)
    for (int j = 1; j <= shape.b; ++j)
      if (h.y[j - 1] > h.x[i - 1])
        data.p_cap_u.push_back(BasisIndex{PSign::minus, i, j});

  auto level = [&](int s) {
    return s <= shape.a ? h.x[s - 1] : h.y[s - shape.a - 1];
  };
  for (int s = 1; s <= shape.a + shape.b; ++s)
    for (int t = 1; t <= shape.a + shape.b; ++t)
      if (s != t && is_compact_generator(s, t, shape) && level(s) > level(t))
        data.compact_u.emplace_back(s, t);

  for (const BasisIndex& v : data.p_cap_u)
    (v.sign == PSign::plus ? data.bidegree.k : data.bidegree.l) += 1;
  data.r = static_cast<int>(data.p_cap_u.size());
  return data;
}

void validate_embedding(const EmbeddingShape& e) {
  if (e.p < 1 || e.q < 0 || e.r < 0)
    throw invalid_input("embedding requires p >= 1, q >= 0, r >= 0");
  if (e.q + e.r < 1) throw invalid_input("embedding requires q + r >= 1");
}

BasisIndex EmbeddingMap::include(const BasisIndex& v) const {
  validate_basis_index(v, shape.h_shape());
  return v;
}

EmbeddingMap embedding_basis_map(const EmbeddingShape& e) {
  validate_embedding(e);
  EmbeddingMap map;
  map.shape = e;
  for (int i = 1; i <= e.p; ++i)
    for (int j = e.q + 1; j <= e.q + e.r; ++j)
      map.p_cap_r.push_back(BasisIndex{PSign::plus, i, j});
  for (int i = 1; i <= e.p; ++i)
    for (int j = e.q + 1; j <= e.q + e.r; ++j)
      map.p_cap_r.push_back(BasisIndex{PSign::minus, i, j});
  return map;
}

}  // namespace vzk
