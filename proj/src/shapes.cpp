#include "vzk/shapes.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace vzk {
namespace {

// Non-increasing tuples over 0..max_level in ascending lexicographic order.
// Returns false once the last tuple has been visited.
bool next_nonincreasing(std::vector<int>& t, int max_level) {
  for (int idx = static_cast<int>(t.size()) - 1; idx >= 0; --idx) {
    int cap = idx == 0 ? max_level : t[idx - 1];
    if (t[idx] < cap) {
      ++t[idx];
      std::fill(t.begin() + idx + 1, t.end(), 0);
      return true;
    }
  }
  return false;
}

int count_below(const std::vector<int>& y, int v) {
  return static_cast<int>(std::count_if(y.begin(), y.end(),
                                        [&](int w) { return w < v; }));
}

int count_at_most(const std::vector<int>& y, int v) {
  return static_cast<int>(std::count_if(y.begin(), y.end(),
                                        [&](int w) { return w <= v; }));
}

// Largest x in [0, cap] whose strict/weak counts against y match the row
// targets, or -1. The feasible set is an interval, so the maximum is enough
// for the non-increasing greedy fill.
int best_row_level(const std::vector<int>& y, int target_strict,
                   int target_weak, int cap) {
  for (int v = cap; v >= 0; --v) {
    if (count_below(y, v) == target_strict && count_at_most(y, v) == target_weak)
      return v;
  }
  return -1;
}

// Shared search behind is_compatible / dominant_from_pair: scan candidate y
// vectors in ascending lexicographic order; for each, fill x greedily from
// the top row down.
std::optional<DominantElement> find_realizing(const PartitionPair& pair) {
  const int a = pair.shape.a;
  const int b = pair.shape.b;
  const int levels = a + b;
  std::vector<int> y(static_cast<size_t>(b), 0);
  while (true) {
    std::vector<int> x;
    x.reserve(static_cast<size_t>(a));
    int cap = levels;
    bool ok = true;
    for (int i = 1; i <= a; ++i) {
      int v = best_row_level(y, pair.alpha.part(i), pair.beta.part(i), cap);
      if (v < 0) {
        ok = false;
        break;
      }
      x.push_back(v);
      cap = v;
    }
    if (ok) return DominantElement{std::move(x), y};
    if (!next_nonincreasing(y, levels)) return std::nullopt;
  }
}

}  // namespace

void validate_shape(const GroupShape& shape) {
  if (shape.a < 1 || shape.b < 1)
    throw invalid_input("group shape requires a >= 1 and b >= 1");
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw invalid_input("partition parts must be >= 0");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw invalid_input("partition parts must be non-increasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::part(int i) const {
  if (i < 1) throw invalid_input("partition rows are 1-based");
  return i <= rows() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

int Partition::size() const {
  int total = 0;
  for (int v : parts_) total += v;
  return total;
}

bool Partition::contains(const Partition& inner) const {
  for (int i = 1; i <= inner.rows(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

void validate_pair(const PartitionPair& pair) {
  validate_shape(pair.shape);
  if (pair.beta.rows() > pair.shape.a || pair.beta.part(1) > pair.shape.b)
    throw invalid_input("beta must fit inside the a x b box");
  if (!pair.beta.contains(pair.alpha))
    throw invalid_input("alpha must be contained in beta");
}

bool pair_less(const PartitionPair& lhs, const PartitionPair& rhs) {
  const int a = std::max(lhs.shape.a, rhs.shape.a);
  for (int i = 1; i <= a; ++i) {
    if (lhs.alpha.part(i) != rhs.alpha.part(i))
      return lhs.alpha.part(i) < rhs.alpha.part(i);
  }
  for (int i = 1; i <= a; ++i) {
    if (lhs.beta.part(i) != rhs.beta.part(i))
      return lhs.beta.part(i) < rhs.beta.part(i);
  }
  return false;
}

bool is_dominant(const DominantElement& h) {
  return std::is_sorted(h.x.rbegin(), h.x.rend()) &&
         std::is_sorted(h.y.rbegin(), h.y.rend());
}

PartitionPair partitions_from_dominant(const DominantElement& h,
                                       const GroupShape& shape) {
  validate_shape(shape);
  if (static_cast<int>(h.x.size()) != shape.a ||
      static_cast<int>(h.y.size()) != shape.b)
    throw invalid_input("dominant element sizes must match the group shape");
  if (!is_dominant(h))
    throw invalid_input(
        "entries must be non-increasing; sort explicitly before calling");
  std::vector<int> alpha, beta;
  alpha.reserve(h.x.size());
  beta.reserve(h.x.size());
  for (int xi : h.x) {
    alpha.push_back(count_below(h.y, xi));
    beta.push_back(count_at_most(h.y, xi));
  }
  PartitionPair pair{Partition(std::move(alpha)), Partition(std::move(beta)),
                     shape};
  validate_pair(pair);
  return pair;
}

bool is_compatible(const PartitionPair& pair) {
  validate_pair(pair);
  return find_realizing(pair).has_value();
}

SkewReport is_admissible_skew(const PartitionPair& pair) {
  validate_pair(pair);
  const int a = pair.shape.a;
  const int b = pair.shape.b;
  auto in_skew = [&](int row, int col) {
    return row >= 1 && row <= a && col > pair.alpha.part(row) &&
           col <= pair.beta.part(row);
  };
  std::vector<std::vector<bool>> seen(static_cast<size_t>(a + 1),
                                      std::vector<bool>(static_cast<size_t>(b + 1), false));
  SkewReport report;
  report.admissible = true;
  for (int row = 1; row <= a; ++row) {
    for (int col = 1; col <= b; ++col) {
      if (!in_skew(row, col) || seen[row][col]) continue;
      SkewComponent comp{row, row, col, col, 0, false};
      std::vector<std::pair<int, int>> stack{{row, col}};
      seen[row][col] = true;
      while (!stack.empty()) {
        auto [r, c] = stack.back();
        stack.pop_back();
        ++comp.cell_count;
        comp.row_lo = std::min(comp.row_lo, r);
        comp.row_hi = std::max(comp.row_hi, r);
        comp.col_lo = std::min(comp.col_lo, c);
        comp.col_hi = std::max(comp.col_hi, c);
        const int dr[] = {1, -1, 0, 0};
        const int dc[] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
          int nr = r + dr[d], nc = c + dc[d];
          if (in_skew(nr, nc) && !seen[nr][nc]) {
            seen[nr][nc] = true;
            stack.emplace_back(nr, nc);
          }
        }
      }
      comp.is_rectangle = comp.cell_count == (comp.row_hi - comp.row_lo + 1) *
                                                 (comp.col_hi - comp.col_lo + 1);
      report.admissible = report.admissible && comp.is_rectangle;
      report.components.push_back(comp);
    }
  }
  std::sort(report.components.begin(), report.components.end(),
            [](const SkewComponent& lhs, const SkewComponent& rhs) {
              return std::tie(lhs.row_lo, lhs.col_lo) <
                     std::tie(rhs.row_lo, rhs.col_lo);
            });
  return report;
}

DominantElement dominant_from_pair(const PartitionPair& pair) {
  validate_pair(pair);
  auto h = find_realizing(pair);
  if (!h)
    throw incompatible_pair("pair " + to_string(pair) +
                                " is not realizable by any dominant element",
                            is_admissible_skew(pair));
  return *h;
}

DegreeInfo cohomological_degree(const PartitionPair& pair) {
  if (!is_compatible(pair))
    throw incompatible_pair("pair " + to_string(pair) + " is not compatible",
                            is_admissible_skew(pair));
  const int box = pair.shape.a * pair.shape.b;
  const int k = pair.alpha.size();
  const int l = box - pair.beta.size();
  return DegreeInfo{k + l, Bidegree{k, l}};
}

PartitionPair rectangle_pair(int i, int j, const GroupShape& shape) {
  validate_shape(shape);
  if (i < 0 || j < 0 || i + j > shape.b)
    throw invalid_input("rectangle pair requires 0 <= i, 0 <= j, i + j <= b");
  std::vector<int> alpha(static_cast<size_t>(shape.a), i);
  std::vector<int> beta(static_cast<size_t>(shape.a), shape.b - j);
  return PartitionPair{Partition(std::move(alpha)), Partition(std::move(beta)),
                       shape};
}

std::vector<PartitionPair> enumerate_compatible(const GroupShape& shape) {
  validate_shape(shape);
  const int levels = shape.a + shape.b;
  std::set<PartitionPair, decltype(&pair_less)> found(&pair_less);
  std::vector<int> x(static_cast<size_t>(shape.a), 0);
  while (true) {
    std::vector<int> y(static_cast<size_t>(shape.b), 0);
    while (true) {
      found.insert(partitions_from_dominant(DominantElement{x, y}, shape));
      if (!next_nonincreasing(y, levels)) break;
    }
    if (!next_nonincreasing(x, levels)) break;
  }
  return {found.begin(), found.end()};
}

std::string to_string(const Partition& p) {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out << ',';
    out << p.parts()[i];
  }
  out << ']';
  return out.str();
}

std::string to_string(const PartitionPair& pair) {
  return "(alpha=" + to_string(pair.alpha) + ", beta=" + to_string(pair.beta) +
         " in " + std::to_string(pair.shape.a) + "x" +
         std::to_string(pair.shape.b) + ")";
}

}  // namespace vzk
