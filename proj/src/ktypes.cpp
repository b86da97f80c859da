#include "vzk/ktypes.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

namespace vzk {
namespace {

// Off-diagonal compact generators in a fixed order: the U(a) block in
// lexicographic (s,t), then the U(b) block.
std::vector<std::pair<int, int>> offdiagonal_generators(const GroupShape& shape) {
  std::vector<std::pair<int, int>> gens;
  for (int s = 1; s <= shape.a; ++s)
    for (int t = 1; t <= shape.a; ++t)
      if (s != t) gens.emplace_back(s, t);
  for (int s = shape.a + 1; s <= shape.a + shape.b; ++s)
    for (int t = shape.a + 1; t <= shape.a + shape.b; ++t)
      if (s != t) gens.emplace_back(s, t);
  return gens;
}

std::vector<std::pair<int, int>> raising_generators(const GroupShape& shape) {
  std::vector<std::pair<int, int>> gens;
  for (int s = 1; s <= shape.a + shape.b; ++s)
    for (int t = s + 1; t <= shape.a + shape.b; ++t)
      if (is_compact_generator(s, t, shape)) gens.emplace_back(s, t);
  return gens;
}

std::vector<int> mask_weight(Mask m, const GroupShape& shape) {
  std::vector<int> w(static_cast<size_t>(shape.a + shape.b), 0);
  for (int pos : mask_positions(m)) {
    auto [row, col] = matrix_entry(basis_at(pos, shape), shape);
    w[static_cast<size_t>(row - 1)] += 1;
    w[static_cast<size_t>(col - 1)] -= 1;
  }
  return w;
}

}  // namespace

RowSpace::RowSpace(GroupShape shape, Bidegree bidegree)
    : shape_(shape), bidegree_(bidegree) {}

Multivector RowSpace::reduce(Multivector v) const {
  if (v.shape() != shape_ || v.bidegree() != bidegree_)
    throw invalid_input("vector does not match the row space bidegree");
  // Rows are fully reduced, so one ascending pass eliminates every pivot.
  for (const Multivector& row : rows_) {
    mpq_class c = v.coefficient(row.leading_mask());
    if (c != 0) v -= c * row;
  }
  return v;
}

bool RowSpace::contains(const Multivector& v) const {
  return reduce(v).is_zero();
}

std::optional<Multivector> RowSpace::insert_returning(Multivector v) {
  Multivector residual = reduce(std::move(v));
  if (residual.is_zero()) return std::nullopt;
  residual *= mpq_class(1) / residual.coefficient(residual.leading_mask());
  const Mask pivot = residual.leading_mask();
  for (Multivector& row : rows_) {
    mpq_class c = row.coefficient(pivot);
    if (c != 0) row -= c * residual;
  }
  auto it = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                             [](const Multivector& row, Mask m) {
                               return row.leading_mask() < m;
                             });
  it = rows_.insert(it, residual);
  return *it;
}

bool RowSpace::insert(Multivector v) {
  return insert_returning(std::move(v)).has_value();
}

bool RowSpace::operator==(const RowSpace& rhs) const {
  return shape_ == rhs.shape_ && bidegree_ == rhs.bidegree_ &&
         rows_ == rhs.rows_;
}

Multivector generator_vector(const DominantElement& h,
                             const GroupShape& shape) {
  ParabolicData data = parabolic_from_dominant(h, shape);
  Mask m = 0;
  for (const BasisIndex& v : data.p_cap_u)
    m |= Mask{1} << basis_position(v, shape);
  return Multivector::monomial(shape, m);
}

RowSpace k_closure(const Multivector& seed) {
  RowSpace space(seed.shape(), seed.bidegree());
  const auto gens = offdiagonal_generators(seed.shape());
  std::deque<Multivector> frontier;
  if (auto row = space.insert_returning(seed)) frontier.push_back(*row);
  while (!frontier.empty()) {
    Multivector v = std::move(frontier.front());
    frontier.pop_front();
    for (auto [s, t] : gens) {
      Multivector image = k_action(s, t, v);
      if (image.is_zero()) continue;
      if (auto row = space.insert_returning(std::move(image)))
        frontier.push_back(*row);
    }
  }
  return space;
}

KTypeSubspace ktype_subspace(const PartitionPair& pair,
                             const GroupShape& shape) {
  validate_pair(pair);
  if (pair.shape != shape)
    throw invalid_input("pair shape does not match the requested group");
  DominantElement h = dominant_from_pair(pair);
  Multivector seed = generator_vector(h, shape);
  RowSpace space = k_closure(seed);
  return KTypeSubspace{shape, pair, seed.bidegree(), std::move(space)};
}

Projector::Projector(const RowSpace& space)
    : shape_(space.shape()),
      bidegree_(space.bidegree()),
      rows_(space.rows()),
      n_(space.dim()) {
  if (n_ == 0) return;
  // Gram matrix, then an in-place LU factorization with row pivoting. The
  // basis rows are independent, so a zero pivot column cannot occur.
  lu_.assign(static_cast<size_t>(n_) * n_, mpq_class(0));
  auto at = [&](int r, int c) -> mpq_class& {
    return lu_[static_cast<size_t>(r) * n_ + c];
  };
  for (int r = 0; r < n_; ++r)
    for (int c = r; c < n_; ++c) {
      at(r, c) = inner_product(rows_[static_cast<size_t>(r)],
                               rows_[static_cast<size_t>(c)]);
      at(c, r) = at(r, c);
    }
  perm_.resize(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) perm_[static_cast<size_t>(i)] = i;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int row = col; row < n_; ++row)
      if (at(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw invalid_input("Gram matrix is singular");
    if (pivot != col) {
      for (int c = 0; c < n_; ++c) std::swap(at(pivot, c), at(col, c));
      std::swap(perm_[static_cast<size_t>(pivot)],
                perm_[static_cast<size_t>(col)]);
    }
    for (int row = col + 1; row < n_; ++row) {
      if (at(row, col) == 0) continue;
      mpq_class factor = at(row, col) / at(col, col);
      at(row, col) = factor;
      for (int c = col + 1; c < n_; ++c) at(row, c) -= factor * at(col, c);
    }
  }
}

Multivector Projector::project(const Multivector& v) const {
  if (v.shape() != shape_ || v.bidegree() != bidegree_)
    throw invalid_input("vector bidegree does not match the subspace");
  Multivector out(shape_, bidegree_);
  if (n_ == 0) return out;
  auto at = [&](int r, int c) -> const mpq_class& {
    return lu_[static_cast<size_t>(r) * n_ + c];
  };
  std::vector<mpq_class> x(static_cast<size_t>(n_));
  for (int r = 0; r < n_; ++r)
    x[static_cast<size_t>(r)] = inner_product(
        rows_[static_cast<size_t>(perm_[static_cast<size_t>(r)])], v);
  for (int i = 0; i < n_; ++i)
    for (int c = 0; c < i; ++c)
      x[static_cast<size_t>(i)] -= at(i, c) * x[static_cast<size_t>(c)];
  for (int i = n_ - 1; i >= 0; --i) {
    for (int c = i + 1; c < n_; ++c)
      x[static_cast<size_t>(i)] -= at(i, c) * x[static_cast<size_t>(c)];
    x[static_cast<size_t>(i)] /= at(i, i);
  }
  for (int r = 0; r < n_; ++r)
    if (x[static_cast<size_t>(r)] != 0)
      out += x[static_cast<size_t>(r)] * rows_[static_cast<size_t>(r)];
  return out;
}

Multivector project_onto(const KTypeSubspace& s, const Multivector& v) {
  return Projector(s.space).project(v);
}

bool contains(const KTypeSubspace& s, const Multivector& v) {
  return s.space.contains(v);
}

bool subspace_equal(const KTypeSubspace& s, const KTypeSubspace& t) {
  return s.space == t.space;
}

int highest_weight_multiplicity(const PartitionPair& pair,
                                const GroupShape& shape) {
  DominantElement h = dominant_from_pair(pair);
  Multivector seed = generator_vector(h, shape);
  const Bidegree bd = seed.bidegree();
  const int box = shape.a * shape.b;
  const std::vector<int> target = mask_weight(seed.leading_mask(), shape);

  std::vector<Mask> columns;
  for (Mask plus : masks_of_weight(box, bd.k))
    for (Mask minus : masks_of_weight(box, bd.l)) {
      Mask m = plus | (minus << box);
      if (mask_weight(m, shape) == target) columns.push_back(m);
    }

  // Constraint rows: each raising generator must annihilate the vector.
  // Gaussian elimination keyed by leading column.
  std::map<size_t, std::vector<mpq_class>> echelon;
  auto insert_row = [&](std::vector<mpq_class> row) {
    while (true) {
      size_t lead = 0;
      while (lead < row.size() && row[lead] == 0) ++lead;
      if (lead == row.size()) return;
      auto it = echelon.find(lead);
      if (it == echelon.end()) {
        echelon.emplace(lead, std::move(row));
        return;
      }
      mpq_class f = row[lead] / it->second[lead];
      for (size_t c = lead; c < row.size(); ++c)
        row[c] -= f * it->second[c];
    }
  };
  for (auto [s, t] : raising_generators(shape)) {
    std::map<Mask, std::vector<mpq_class>> by_image;
    for (size_t c = 0; c < columns.size(); ++c) {
      Multivector image =
          k_action(s, t, Multivector::monomial(shape, columns[c]));
      for (const Term& term : image.terms()) {
        auto& row = by_image[term.mono];
        row.resize(columns.size());
        row[c] += term.coeff;
      }
    }
    for (auto& [mono, row] : by_image) {
      row.resize(columns.size());
      insert_row(std::move(row));
    }
  }
  return static_cast<int>(columns.size() - echelon.size());
}

}  // namespace vzk
