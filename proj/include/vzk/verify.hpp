#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vzk/ktypes.hpp"
#include "vzk/liealg.hpp"

namespace vzk {

struct WitnessEntry {
  std::string label;
  Multivector vector;
};

/// Machine verdict for one check. A computed fail always carries witness
/// vectors (the offending vector and its residual, or the zero image where
/// a nonzero one was claimed); reports produced from a thrown error carry
/// the reason string instead. elapsed is the one field outside the
/// canonical serialized section.
struct CheckReport {
  std::string check_id;
  EmbeddingShape embedding;
  std::optional<int> i;
  std::optional<int> j;
  bool pass{false};
  std::map<std::string, int> dims;
  std::map<std::string, std::string> values;  // exact rationals as "num/den"
  std::vector<WitnessEntry> witness;
  std::string reason;
  std::chrono::microseconds elapsed{0};
};

/// Memoizes rectangle K-type subspaces and their projectors across checks.
class VerifyContext {
 public:
  const KTypeSubspace& rect_subspace(const GroupShape& shape, int i, int j);
  const Projector& rect_projector(const GroupShape& shape, int i, int j);

 private:
  std::map<std::vector<int>, KTypeSubspace> subspaces_;
  std::map<std::vector<int>, Projector> projectors_;
};

// Wedge of all of p cap r in canonical order; degree 2pr, bidegree (pr,pr).
// Requires r >= 1.
Multivector omega_vector(const EmbeddingShape& e);

// omega_H^prim = projection of omega_H onto V_{r,r} of the big group;
// passes iff it is nonzero. Requires r >= 1 and r <= q.
CheckReport check_omega_prim(const EmbeddingShape& e,
                             VerifyContext* ctx = nullptr);

// Every basis vector of V^H_{i,j}, pushed through the embedding, must lie
// in V^G_{i,j}. Requires i + j + r <= q.
CheckReport check_restriction(const EmbeddingShape& e, int i, int j,
                              VerifyContext* ctx = nullptr);

// Every embedded basis vector of V^H_{i,j} wedged with omega_H must lie in
// V^G_{i+r,j+r}. The computed verdict is authoritative; it is known to fail
// at i = j = 0. Requires i + j + r <= q.
CheckReport check_tensor_inclusion(const EmbeddingShape& e, int i, int j,
                                   VerifyContext* ctx = nullptr);

enum class TDomain { full_bidegree, vrr };

// Image of T = (project onto V_{i+r,j+r}) after wedging V_{i,j} with either
// the whole (rp,rp) slice or just V_{r,r}. The result carries the target
// pair as its tag; its span may be a proper subspace of the target.
KTypeSubspace t_map_image(const EmbeddingShape& e, int i, int j,
                          TDomain domain, VerifyContext* ctx = nullptr);

// T restricted to V_{i,j} (x) V_{r,r} has nonzero image.
CheckReport check_t_nonvanishing(const EmbeddingShape& e, int i, int j,
                                 VerifyContext* ctx = nullptr);

// The two T images coincide. The vrr image is contained in the full one by
// construction; a strict inclusion is reported as a failure, never absorbed.
CheckReport check_t_image_equality(const EmbeddingShape& e, int i, int j,
                                   VerifyContext* ctx = nullptr);

// All registered checks over i + j + r <= q (and i,j <= max_ij when
// max_ij >= 0), in a fixed order. Errors become failed reports with a
// reason.
std::vector<CheckReport> run_suite(const EmbeddingShape& e, int max_ij = -1);

bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace vzk
