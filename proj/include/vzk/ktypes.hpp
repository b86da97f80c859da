#pragma once

#include <optional>
#include <vector>

#include "vzk/extalg.hpp"
#include "vzk/liealg.hpp"
#include "vzk/shapes.hpp"

namespace vzk {

/// Reduced row-echelon span of multivectors of one bidegree. Pivots are the
/// smallest masks, each with coefficient 1 and eliminated from every other
/// row; rows are sorted by pivot. Two equal subspaces therefore have
/// identical row lists.
class RowSpace {
 public:
  RowSpace(GroupShape shape, Bidegree bidegree);

  const GroupShape& shape() const { return shape_; }
  const Bidegree& bidegree() const { return bidegree_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Multivector>& rows() const { return rows_; }

  // Residual of v after eliminating all pivots; zero iff v is in the span.
  Multivector reduce(Multivector v) const;
  bool contains(const Multivector& v) const;

  bool insert(Multivector v);  // true if the dimension grew
  // Same, returning the normalized new row (as of insertion time).
  std::optional<Multivector> insert_returning(Multivector v);

  bool operator==(const RowSpace&) const;

 private:
  GroupShape shape_;
  Bidegree bidegree_;
  std::vector<Multivector> rows_;
};

/// V_{alpha,beta} inside one bidegree slice, with its canonical basis.
struct KTypeSubspace {
  GroupShape shape;
  PartitionPair pair;
  Bidegree bidegree;
  RowSpace space;
  int dim() const { return space.dim(); }
};

// Top wedge of p cap u(H): a single monomial with coefficient 1.
Multivector generator_vector(const DominantElement& h, const GroupShape& shape);

// Closure of a vector under the off-diagonal compact generators. Diagonal
// generators act by scalars on each weight layer reached and add nothing.
RowSpace k_closure(const Multivector& seed);

// The K-submodule generated by the top wedge of p cap u for any realizing H.
KTypeSubspace ktype_subspace(const PartitionPair& pair, const GroupShape& shape);

/// Exact orthogonal projector onto a RowSpace, with the Gram system
/// factored once up front.
class Projector {
 public:
  explicit Projector(const RowSpace& space);
  Multivector project(const Multivector& v) const;

 private:
  GroupShape shape_;
  Bidegree bidegree_;
  std::vector<Multivector> rows_;
  int n_{0};
  std::vector<mpq_class> lu_;   // row-major LU factors of the Gram matrix
  std::vector<int> perm_;
};

Multivector project_onto(const KTypeSubspace& s, const Multivector& v);
bool contains(const KTypeSubspace& s, const Multivector& v);
bool subspace_equal(const KTypeSubspace& s, const KTypeSubspace& t);

// Number of independent highest-weight vectors of the generator's weight in
// its bidegree slice; 1 means the K-type occurs there with multiplicity one.
// Diagnostic only, nothing downstream depends on it.
int highest_weight_multiplicity(const PartitionPair& pair,
                                const GroupShape& shape);

}  // namespace vzk
