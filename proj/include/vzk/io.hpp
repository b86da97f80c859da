#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "vzk/ktypes.hpp"
#include "vzk/verify.hpp"

namespace vzk {

inline constexpr int kMultivectorFormat = 1;
inline constexpr int kSubspaceFormat = 1;
inline constexpr int kReportFormat = 1;

// Multivector wire format: {format_version, shape, bidegree, terms} with
// terms = [[sorted positions...], "num/den"] in mask order.
nlohmann::json multivector_to_json(const Multivector& v);
Multivector multivector_from_json(const nlohmann::json& j);

nlohmann::json skew_report_to_json(const SkewReport& report);
nlohmann::json pair_to_json(const PartitionPair& pair);
nlohmann::json dominant_to_json(const DominantElement& h);

nlohmann::json subspace_to_json(const KTypeSubspace& s);
KTypeSubspace subspace_from_json(const nlohmann::json& j);

// Full report including the volatile elapsed_us field.
nlohmann::json report_to_json(const CheckReport& report);
// The byte-stable part: everything except elapsed_us.
nlohmann::json report_canonical_json(const CheckReport& report);
// Strips elapsed_us keys recursively; used to compare suite outputs.
nlohmann::json strip_volatile(nlohmann::json j);

std::uint64_t fnv1a64(std::string_view data);

/// One file per (a, b, alpha, beta). Entries embed a checksum; anything that
/// fails validation on load is treated as absent and recomputed.
class SubspaceCache {
 public:
  explicit SubspaceCache(std::filesystem::path dir);

  std::filesystem::path entry_path(const PartitionPair& pair) const;
  std::optional<KTypeSubspace> load(const PartitionPair& pair) const;
  void store(const KTypeSubspace& s) const;  // write to temp, then rename

 private:
  std::filesystem::path dir_;
};

}  // namespace vzk
