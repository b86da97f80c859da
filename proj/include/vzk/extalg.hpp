#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "vzk/liealg.hpp"
#include "vzk/shapes.hpp"

namespace vzk {

// A monomial is a subset of the 2ab basis slots, stored as a bit mask over
// basis_position. Wedge factors are always taken in increasing position
// order; that fixes every sign in the library.
using Mask = std::uint64_t;

int mask_degree(Mask m);
Bidegree mask_bidegree(Mask m, const GroupShape& shape);
std::vector<int> mask_positions(Mask m);
Mask mask_from_positions(const std::vector<int>& positions);

// Sign of m_left ^ m_right relative to the sorted merge; masks must be
// disjoint.
int merge_sign(Mask left, Mask right);

// All masks over `slots` bits with exactly k bits set, in ascending order.
std::vector<Mask> masks_of_weight(int slots, int k);

struct Term {
  Mask mono{0};
  mpq_class coeff;
};

/// Bihomogeneous element of the exterior algebra of p over exact rationals.
/// Terms are kept sorted by mask with no zero coefficients, so equal values
/// have equal representations.
class Multivector {
 public:
  Multivector(GroupShape shape, Bidegree bidegree);  // zero
  static Multivector monomial(const GroupShape& shape, Mask m,
                              const mpq_class& coeff = 1);
  static Multivector scalar_one(const GroupShape& shape);

  const GroupShape& shape() const { return shape_; }
  const Bidegree& bidegree() const { return bidegree_; }
  int degree() const { return bidegree_.k + bidegree_.l; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  mpq_class coefficient(Mask m) const;
  Mask leading_mask() const;  // smallest mask; requires non-zero

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(const mpq_class& scalar);
  friend Multivector operator+(Multivector lhs, const Multivector& rhs);
  friend Multivector operator-(Multivector lhs, const Multivector& rhs);
  friend Multivector operator*(const mpq_class& scalar, Multivector v);
  Multivector operator-() const;
  bool operator==(const Multivector& rhs) const;

  mpq_class norm_squared() const;
  std::string display() const;

  // Internal: takes terms already sorted, deduplicated and zero-free.
  static Multivector from_sorted_terms(GroupShape shape, Bidegree bidegree,
                                       std::vector<Term> terms);

 private:
  GroupShape shape_;
  Bidegree bidegree_;
  std::vector<Term> terms_;
};

// Signed merge of monomials, extended bilinearly; repeated slots vanish.
Multivector wedge(const Multivector& u, const Multivector& v);

struct TensorTerm {
  mpq_class coeff;
  Mask left{0};
  Mask right{0};
};

// Component of the dual of the wedge: over each monomial m_S of v, the sum
// of sign(T, S\T) m_T (x) m_{S\T} over k-subsets T of S. With monomials
// orthonormal this is the exact adjoint of wedge.
std::vector<TensorTerm> coproduct_component(const Multivector& v, int k,
                                            int l);

// <x (x) y, terms> -- pairs a coproduct against two multivectors.
mpq_class pair_coproduct(const std::vector<TensorTerm>& terms,
                         const Multivector& x, const Multivector& y);

// Monomials are orthonormal; vectors of different bidegree pair to zero.
mpq_class inner_product(const Multivector& u, const Multivector& v);

// Derivation extension of ad(E_{st}) to the exterior algebra; preserves
// bidegree. (s,t) must be a compact generator.
Multivector k_action(int s, int t, const Multivector& v);

// Push a multivector of the small group through the standard embedding.
Multivector embed(const EmbeddingMap& map, const Multivector& v);

std::string rational_to_string(const mpq_class& q);  // always "num/den"
mpq_class rational_from_string(const std::string& text);

}  // namespace vzk
