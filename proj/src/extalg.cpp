#include "vzk/extalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <tuple>

namespace vzk {
namespace {

Mask bit(int pos) { return Mask{1} << pos; }

Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Bits strictly between lo and hi (exclusive on both ends).
Mask between_mask(int lo, int hi) {
  if (hi - lo <= 1) return 0;
  return (full_mask(hi - lo - 1)) << (lo + 1);
}

void validate_slots(const GroupShape& shape) {
  validate_shape(shape);
  if (2 * shape.a * shape.b > 64)
    throw invalid_input("exterior algebra supports at most 64 basis slots");
}

std::vector<Term> collect_terms(std::map<Mask, mpq_class>&& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [mono, coeff] : acc)
    if (coeff != 0) terms.push_back(Term{mono, std::move(coeff)});
  return terms;
}

}  // namespace

int mask_degree(Mask m) { return std::popcount(m); }

Bidegree mask_bidegree(Mask m, const GroupShape& shape) {
  validate_slots(shape);
  const int box = shape.a * shape.b;
  if (m & ~full_mask(2 * box))
    throw invalid_input("monomial uses slots outside the algebra");
  return Bidegree{std::popcount(m & full_mask(box)),
                  std::popcount(m >> box)};
}

std::vector<int> mask_positions(Mask m) {
  std::vector<int> positions;
  while (m) {
    positions.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return positions;
}

Mask mask_from_positions(const std::vector<int>& positions) {
  Mask m = 0;
  for (int pos : positions) {
    if (pos < 0 || pos >= 64) throw invalid_input("slot index out of range");
    if (m & bit(pos)) throw invalid_input("repeated slot index");
    m |= bit(pos);
  }
  return m;
}

std::vector<Mask> masks_of_weight(int slots, int k) {
  if (slots < 0 || slots > 64 || k < 0)
    throw invalid_input("mask enumeration limited to 64 slots");
  std::vector<Mask> out;
  if (k == 0) return {Mask{0}};
  if (k > slots) return out;
  Mask m = full_mask(k);
  const Mask limit = full_mask(slots);
  while (m <= limit) {
    out.push_back(m);
    Mask low = m & (~m + 1);
    Mask ripple = m + low;
    if (ripple > limit || ripple < m) break;
    m = ripple | (((m ^ ripple) >> 2) / low);
  }
  return out;
}

int merge_sign(Mask left, Mask right) {
  int inversions = 0;
  Mask rest = right;
  while (rest) {
    int t = std::countr_zero(rest);
    rest &= rest - 1;
    if (t < 63) inversions += std::popcount(left >> (t + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

Multivector::Multivector(GroupShape shape, Bidegree bidegree)
    : shape_(shape), bidegree_(bidegree) {
  validate_slots(shape_);
  const int box = shape_.a * shape_.b;
  if (bidegree_.k < 0 || bidegree_.l < 0 || bidegree_.k > box ||
      bidegree_.l > box)
    throw invalid_input("bidegree outside the 2ab-dimensional algebra");
}

Multivector Multivector::monomial(const GroupShape& shape, Mask m,
                                  const mpq_class& coeff) {
  Multivector v(shape, mask_bidegree(m, shape));
  mpq_class c = coeff;
  c.canonicalize();  // mpq comparisons require canonical form
  if (c != 0) v.terms_.push_back(Term{m, std::move(c)});
  return v;
}

Multivector Multivector::scalar_one(const GroupShape& shape) {
  return monomial(shape, 0, 1);
}

Multivector Multivector::from_sorted_terms(GroupShape shape, Bidegree bidegree,
                                           std::vector<Term> terms) {
  Multivector v(shape, bidegree);
  for (Term& t : terms) {
    if (mask_bidegree(t.mono, shape) != bidegree)
      throw invalid_input("term bidegree does not match the vector tag");
    t.coeff.canonicalize();
  }
  v.terms_ = std::move(terms);
  return v;
}

mpq_class Multivector::coefficient(Mask m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, Mask mono) { return t.mono < mono; });
  return it != terms_.end() && it->mono == m ? it->coeff : mpq_class(0);
}

Mask Multivector::leading_mask() const {
  if (terms_.empty()) throw invalid_input("zero vector has no leading mask");
  return terms_.front().mono;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  if (shape_ != rhs.shape_ || bidegree_ != rhs.bidegree_)
    throw invalid_input("sum requires matching shape and bidegree");
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto lhs_it = terms_.begin();
  auto rhs_it = rhs.terms_.begin();
  while (lhs_it != terms_.end() || rhs_it != rhs.terms_.end()) {
    if (rhs_it == rhs.terms_.end() ||
        (lhs_it != terms_.end() && lhs_it->mono < rhs_it->mono)) {
      merged.push_back(std::move(*lhs_it++));
    } else if (lhs_it == terms_.end() || rhs_it->mono < lhs_it->mono) {
      merged.push_back(*rhs_it++);
    } else {
      mpq_class c = lhs_it->coeff + rhs_it->coeff;
      if (c != 0) merged.push_back(Term{lhs_it->mono, std::move(c)});
      ++lhs_it;
      ++rhs_it;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  return *this += -rhs;
}

Multivector& Multivector::operator*=(const mpq_class& scalar) {
  mpq_class s = scalar;
  s.canonicalize();
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= s;
  return *this;
}

Multivector operator+(Multivector lhs, const Multivector& rhs) {
  lhs += rhs;
  return lhs;
}

Multivector operator-(Multivector lhs, const Multivector& rhs) {
  lhs -= rhs;
  return lhs;
}

Multivector operator*(const mpq_class& scalar, Multivector v) {
  v *= scalar;
  return v;
}

Multivector Multivector::operator-() const {
  Multivector out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

bool Multivector::operator==(const Multivector& rhs) const {
  if (shape_ != rhs.shape_ || bidegree_ != rhs.bidegree_ ||
      terms_.size() != rhs.terms_.size())
    return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != rhs.terms_[i].mono ||
        terms_[i].coeff != rhs.terms_[i].coeff)
      return false;
  return true;
}

mpq_class Multivector::norm_squared() const {
  mpq_class total = 0;
  for (const Term& t : terms_) total += t.coeff * t.coeff;
  return total;
}

std::string Multivector::display() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms_) {
    mpq_class c = t.coeff;
    if (c < 0) {
      out << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      out << " + ";
    }
    first = false;
    if (c != 1 || t.mono == 0) out << rational_to_string(c);
    bool lead = true;
    for (int pos : mask_positions(t.mono)) {
      out << (lead ? (c != 1 ? " " : "") : "^");
      out << basis_name(basis_at(pos, shape_), shape_);
      lead = false;
    }
  }
  return out.str();
}

Multivector wedge(const Multivector& u, const Multivector& v) {
  if (u.shape() != v.shape())
    throw invalid_input("wedge requires a common group shape");
  const GroupShape shape = u.shape();
  const int box = shape.a * shape.b;
  Bidegree out{u.bidegree().k + v.bidegree().k,
               u.bidegree().l + v.bidegree().l};
  if (out.k > box || out.l > box)
    throw invalid_input("wedge bidegrees exceed the algebra");
  std::map<Mask, mpq_class> acc;
  for (const Term& s : u.terms()) {
    for (const Term& t : v.terms()) {
      if (s.mono & t.mono) continue;
      acc[s.mono | t.mono] += s.coeff * t.coeff * merge_sign(s.mono, t.mono);
    }
  }
  return Multivector::from_sorted_terms(shape, out,
                                        collect_terms(std::move(acc)));
}

std::vector<TensorTerm> coproduct_component(const Multivector& v, int k,
                                            int l) {
  if (k < 0 || l < 0 || v.degree() != k + l)
    throw invalid_input("coproduct component requires degree(v) = k + l");
  std::vector<TensorTerm> out;
  for (const Term& t : v.terms()) {
    // Enumerate submasks of t.mono in ascending mask order.
    Mask sub = 0;
    while (true) {
      if (std::popcount(sub) == k) {
        Mask rest = t.mono & ~sub;
        out.push_back(TensorTerm{t.coeff * merge_sign(sub, rest), sub, rest});
      }
      if (sub == t.mono) break;
      sub = (sub - t.mono) & t.mono;
    }
  }
  std::sort(out.begin(), out.end(), [](const TensorTerm& x, const TensorTerm& y) {
    return std::tie(x.left, x.right) < std::tie(y.left, y.right);
  });
  return out;
}

mpq_class pair_coproduct(const std::vector<TensorTerm>& terms,
                         const Multivector& x, const Multivector& y) {
  mpq_class total = 0;
  for (const TensorTerm& t : terms)
    total += t.coeff * x.coefficient(t.left) * y.coefficient(t.right);
  return total;
}

mpq_class inner_product(const Multivector& u, const Multivector& v) {
  if (u.shape() != v.shape())
    throw invalid_input("inner product requires a common group shape");
  if (u.bidegree() != v.bidegree()) return 0;
  mpq_class total = 0;
  auto u_it = u.terms().begin();
  auto v_it = v.terms().begin();
  while (u_it != u.terms().end() && v_it != v.terms().end()) {
    if (u_it->mono < v_it->mono)
      ++u_it;
    else if (v_it->mono < u_it->mono)
      ++v_it;
    else
      total += (u_it++)->coeff * (v_it++)->coeff;
  }
  return total;
}

Multivector k_action(int s, int t, const Multivector& v) {
  const GroupShape shape = v.shape();
  if (!is_compact_generator(s, t, shape))
    throw invalid_input("(s,t) must lie in a single diagonal block");
  std::map<Mask, mpq_class> acc;
  for (const Term& term : v.terms()) {
    for (int pos : mask_positions(term.mono)) {
      for (const AdTerm& ad :
           ad_action_on_p(s, t, basis_at(pos, shape), shape)) {
        const int target = basis_position(ad.target, shape);
        const Mask rest = term.mono & ~bit(pos);
        if (target != pos && (rest & bit(target))) continue;
        Mask next = rest | bit(target);
        int sign = 1;
        if (target != pos) {
          int lo = std::min(pos, target), hi = std::max(pos, target);
          if (std::popcount(rest & between_mask(lo, hi)) & 1) sign = -1;
        }
        acc[next] += term.coeff * ad.coeff * sign;
      }
    }
  }
  return Multivector::from_sorted_terms(shape, v.bidegree(),
                                        collect_terms(std::move(acc)));
}

Multivector embed(const EmbeddingMap& map, const Multivector& v) {
  const GroupShape small = map.shape.h_shape();
  const GroupShape big = map.shape.g_shape();
  if (v.shape() != small)
    throw invalid_input("vector shape does not match the embedding source");
  std::vector<Term> terms;
  terms.reserve(v.terms().size());
  for (const Term& t : v.terms()) {
    Mask m = 0;
    for (int pos : mask_positions(t.mono))
      m |= bit(basis_position(map.include(basis_at(pos, small)), big));
    terms.push_back(Term{m, t.coeff});
  }
  // The index map is order-preserving, so term order and signs survive.
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  return Multivector::from_sorted_terms(big, v.bidegree(), std::move(terms));
}

std::string rational_to_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rational_from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw invalid_input("cannot parse rational: " + text);
  q.canonicalize();
  return q;
}

}  // namespace vzk
