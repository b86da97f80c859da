#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vzk {

// Thrown on any precondition violation; the CLI maps it to exit code 2.
class invalid_input : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank data of U(a,b): a is the first (compact row) factor, b the second.
struct GroupShape {
  int a{1};
  int b{1};
  bool operator==(const GroupShape&) const = default;
};

void validate_shape(const GroupShape& shape);

/// Bidegree (k,l) of a bihomogeneous element: k slots from the plus block,
/// l from the minus block.
struct Bidegree {
  int k{0};
  int l{0};
  bool operator==(const Bidegree&) const = default;
};

/// Non-increasing sequence of non-negative integers; trailing zeros are
/// normalized away, so (3,1,0) and (3,1) are the same partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;  // 1-based row length, 0 past the last row
  int size() const;       // number of cells
  bool contains(const Partition& inner) const;  // inner fits inside *this
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Nested pair alpha <= beta inside the a x b box.
struct PartitionPair {
  Partition alpha;
  Partition beta;
  GroupShape shape;
  bool operator==(const PartitionPair&) const = default;
};

void validate_pair(const PartitionPair& pair);

// Canonical order: alpha as an a-tuple lexicographically, then beta.
bool pair_less(const PartitionPair& lhs, const PartitionPair& rhs);

/// Integer vector H = (x_1 >= ... >= x_a; y_1 >= ... >= y_b). Only the order
/// type of the a+b entries matters, so integer levels lose nothing.
struct DominantElement {
  std::vector<int> x;
  std::vector<int> y;
  bool operator==(const DominantElement&) const = default;
};

bool is_dominant(const DominantElement& h);

struct SkewComponent {
  int row_lo{0}, row_hi{0};  // 1-based inclusive bounding box
  int col_lo{0}, col_hi{0};
  int cell_count{0};
  bool is_rectangle{false};
  bool operator==(const SkewComponent&) const = default;
};

/// Edge-connected components of the skew diagram beta \ alpha.
struct SkewReport {
  std::vector<SkewComponent> components;
  bool admissible{false};
};

class incompatible_pair : public invalid_input {
 public:
  incompatible_pair(std::string message, SkewReport report)
      : invalid_input(std::move(message)), report(std::move(report)) {}
  SkewReport report;
};

struct DegreeInfo {
  int r{0};
  Bidegree bidegree;
  bool operator==(const DegreeInfo&) const = default;
};

PartitionPair partitions_from_dominant(const DominantElement& h,
                                       const GroupShape& shape);

// Realizability by some dominant integer vector with entries in 0..a+b.
bool is_compatible(const PartitionPair& pair);

// Rectangle predicate on the skew shape; compared against realizability in
// the test suite rather than trusted on its own.
SkewReport is_admissible_skew(const PartitionPair& pair);

// First realizing vector in a fixed search order (y ascending
// lexicographically, x maximal); deterministic.
DominantElement dominant_from_pair(const PartitionPair& pair);

DegreeInfo cohomological_degree(const PartitionPair& pair);

// The pair (i^a, (b-j)^a); requires i + j <= b.
PartitionPair rectangle_pair(int i, int j, const GroupShape& shape);

// All compatible pairs in the a x b box, each once, in pair_less order.
std::vector<PartitionPair> enumerate_compatible(const GroupShape& shape);

std::string to_string(const Partition& p);
std::string to_string(const PartitionPair& pair);

}  // namespace vzk
