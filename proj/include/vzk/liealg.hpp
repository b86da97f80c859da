#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vzk/shapes.hpp"

namespace vzk {

// Matrix model: g = gl(a+b), K-block diagonal, p the off-diagonal blocks.
// plus(i,j) is the elementary matrix E_{i,a+j}, minus(i,j) is E_{a+j,i}.
enum class PSign : std::uint8_t { plus, minus };

struct BasisIndex {
  PSign sign{PSign::plus};
  int i{1};  // 1..a
  int j{1};  // 1..b
  bool operator==(const BasisIndex&) const = default;
};

void validate_basis_index(const BasisIndex& v, const GroupShape& shape);

// Global linear order: all plus indices in lexicographic (i,j), then all
// minus indices. Every monomial convention downstream hangs off this.
int basis_position(const BasisIndex& v, const GroupShape& shape);
BasisIndex basis_at(int position, const GroupShape& shape);

// (row, col) of the elementary matrix inside gl(a+b), 1-based.
std::pair<int, int> matrix_entry(const BasisIndex& v, const GroupShape& shape);
std::string basis_name(const BasisIndex& v, const GroupShape& shape);

// Generators of k are E_{st} with s,t in the same diagonal block.
bool is_compact_generator(int s, int t, const GroupShape& shape);

// Weight of the p-basis vector under the diagonal generator E_{ss}.
int weight_at(const BasisIndex& v, int s, const GroupShape& shape);

struct AdTerm {
  int coeff{0};
  BasisIndex target;
  bool operator==(const AdTerm&) const = default;
};

// [E_{st}, E_v] expanded in the p-basis: at most one term, coefficient +-1;
// s == t returns the weight multiple of v. Zero terms are dropped.
std::vector<AdTerm> ad_action_on_p(int s, int t, const BasisIndex& v,
                                   const GroupShape& shape);

struct ParabolicData {
  DominantElement h;
  std::vector<BasisIndex> p_cap_u;             // sorted by basis_position
  std::vector<std::pair<int, int>> compact_u;  // same-block (s,t), H_s > H_t
  int r{0};
  Bidegree bidegree;
};

ParabolicData parabolic_from_dominant(const DominantElement& h,
                                      const GroupShape& shape);

/// Standard embedding U(p,q) inside U(p,q+r): the H-side second block sits in
/// the first q columns of the G-side second block.
struct EmbeddingShape {
  int p{1};
  int q{0};
  int r{0};
  GroupShape h_shape() const { return GroupShape{p, q}; }
  GroupShape g_shape() const { return GroupShape{p, q + r}; }
  bool operator==(const EmbeddingShape&) const = default;
};

void validate_embedding(const EmbeddingShape& e);

struct EmbeddingMap {
  EmbeddingShape shape;
  // Same-labelled index of the larger group; label-preserving and
  // order-preserving, so mapped monomials never pick up a sign.
  BasisIndex include(const BasisIndex& v) const;
  std::vector<BasisIndex> p_cap_r;  // all G-side indices with j > q, in order
};

EmbeddingMap embedding_basis_map(const EmbeddingShape& e);

}  // namespace vzk
