#include "vzk/io.hpp"

#include <fstream>
#include <sstream>

namespace vzk {
namespace {

nlohmann::json terms_to_json(const Multivector& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Term& t : v.terms())
    terms.push_back({mask_positions(t.mono), rational_to_string(t.coeff)});
  return terms;
}

std::vector<Term> terms_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw invalid_input("terms must be an array");
  std::vector<Term> terms;
  Mask previous = 0;
  bool first = true;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw invalid_input("each term must be [positions, rational]");
    Mask m = mask_from_positions(entry.at(0).get<std::vector<int>>());
    if (!first && m <= previous)
      throw invalid_input("terms must be strictly increasing by monomial");
    first = false;
    previous = m;
    mpq_class c = rational_from_string(entry.at(1).get<std::string>());
    if (c == 0) throw invalid_input("stored terms must be nonzero");
    terms.push_back(Term{m, std::move(c)});
  }
  return terms;
}

std::vector<int> partition_parts(const nlohmann::json& j) {
  return j.get<std::vector<int>>();
}

}  // namespace

nlohmann::json multivector_to_json(const Multivector& v) {
  return nlohmann::json{
      {"format_version", kMultivectorFormat},
      {"shape", {{"a", v.shape().a}, {"b", v.shape().b}}},
      {"bidegree", {v.bidegree().k, v.bidegree().l}},
      {"terms", terms_to_json(v)},
  };
}

Multivector multivector_from_json(const nlohmann::json& j) {
  if (j.value("format_version", -1) != kMultivectorFormat)
    throw invalid_input("unsupported multivector format version");
  GroupShape shape{j.at("shape").at("a").get<int>(),
                   j.at("shape").at("b").get<int>()};
  auto bd = j.at("bidegree").get<std::vector<int>>();
  if (bd.size() != 2) throw invalid_input("bidegree must be [k, l]");
  return Multivector::from_sorted_terms(shape, Bidegree{bd[0], bd[1]},
                                        terms_from_json(j.at("terms")));
}

nlohmann::json skew_report_to_json(const SkewReport& report) {
  nlohmann::json components = nlohmann::json::array();
  for (const SkewComponent& c : report.components)
    components.push_back({
        {"rows", {c.row_lo, c.row_hi}},
        {"cols", {c.col_lo, c.col_hi}},
        {"cells", c.cell_count},
        {"is_rectangle", c.is_rectangle},
    });
  return nlohmann::json{{"admissible", report.admissible},
                        {"components", components}};
}

nlohmann::json pair_to_json(const PartitionPair& pair) {
  return nlohmann::json{
      {"shape", {{"a", pair.shape.a}, {"b", pair.shape.b}}},
      {"alpha", pair.alpha.parts()},
      {"beta", pair.beta.parts()},
  };
}

nlohmann::json dominant_to_json(const DominantElement& h) {
  return nlohmann::json{{"x", h.x}, {"y", h.y}};
}

nlohmann::json subspace_to_json(const KTypeSubspace& s) {
  nlohmann::json basis = nlohmann::json::array();
  for (const Multivector& row : s.space.rows()) basis.push_back(terms_to_json(row));
  nlohmann::json payload{
      {"format_version", kSubspaceFormat},
      {"shape", {{"a", s.shape.a}, {"b", s.shape.b}}},
      {"alpha", s.pair.alpha.parts()},
      {"beta", s.pair.beta.parts()},
      {"bidegree", {s.bidegree.k, s.bidegree.l}},
      {"dim", s.dim()},
      {"basis", basis},
  };
  std::ostringstream hex;
  hex << std::hex << fnv1a64(payload.dump());
  payload["checksum"] = hex.str();
  return payload;
}

KTypeSubspace subspace_from_json(const nlohmann::json& j) {
  if (j.value("format_version", -1) != kSubspaceFormat)
    throw invalid_input("unsupported subspace format version");
  nlohmann::json body = j;
  std::string stored = body.value("checksum", "");
  body.erase("checksum");
  std::ostringstream hex;
  hex << std::hex << fnv1a64(body.dump());
  if (stored != hex.str()) throw invalid_input("subspace checksum mismatch");

  GroupShape shape{j.at("shape").at("a").get<int>(),
                   j.at("shape").at("b").get<int>()};
  PartitionPair pair{Partition(partition_parts(j.at("alpha"))),
                     Partition(partition_parts(j.at("beta"))), shape};
  validate_pair(pair);
  auto bd = j.at("bidegree").get<std::vector<int>>();
  if (bd.size() != 2) throw invalid_input("bidegree must be [k, l]");
  Bidegree bidegree{bd[0], bd[1]};
  RowSpace space(shape, bidegree);
  int loaded = 0;
  for (const auto& row : j.at("basis")) {
    if (!space.insert(Multivector::from_sorted_terms(shape, bidegree,
                                                     terms_from_json(row))))
      throw invalid_input("stored basis rows are not independent");
    ++loaded;
  }
  if (loaded != j.at("dim").get<int>())
    throw invalid_input("stored dimension does not match the basis");
  return KTypeSubspace{shape, pair, bidegree, std::move(space)};
}

nlohmann::json report_canonical_json(const CheckReport& report) {
  nlohmann::json params{
      {"p", report.embedding.p}, {"q", report.embedding.q},
      {"r", report.embedding.r}};
  if (report.i) params["i"] = *report.i;
  if (report.j) params["j"] = *report.j;
  nlohmann::json witness = nlohmann::json::array();
  for (const WitnessEntry& w : report.witness)
    witness.push_back(
        {{"label", w.label}, {"vector", multivector_to_json(w.vector)}});
  return nlohmann::json{
      {"format_version", kReportFormat},
      {"checkId", report.check_id},
      {"params", params},
      {"verdict", report.pass ? "pass" : "fail"},
      {"dims", report.dims},
      {"values", report.values},
      {"witness", witness},
      {"reason", report.reason},
  };
}

nlohmann::json report_to_json(const CheckReport& report) {
  nlohmann::json j = report_canonical_json(report);
  j["elapsed_us"] = report.elapsed.count();
  return j;
}

nlohmann::json strip_volatile(nlohmann::json j) {
  if (j.is_object()) {
    j.erase("elapsed_us");
    for (auto& [key, value] : j.items()) value = strip_volatile(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_volatile(value);
  }
  return j;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

SubspaceCache::SubspaceCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path SubspaceCache::entry_path(const PartitionPair& pair) const {
  std::ostringstream name;
  name << "ktype_a" << pair.shape.a << "_b" << pair.shape.b << "_alpha";
  for (int part : pair.alpha.parts()) name << "_" << part;
  name << "_beta";
  for (int part : pair.beta.parts()) name << "_" << part;
  name << "_v" << kSubspaceFormat << ".json";
  return dir_ / name.str();
}

std::optional<KTypeSubspace> SubspaceCache::load(const PartitionPair& pair) const {
  const auto path = entry_path(pair);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    KTypeSubspace s = subspace_from_json(j);
    if (s.shape != pair.shape || s.pair.alpha != pair.alpha ||
        s.pair.beta != pair.beta)
      return std::nullopt;
    return s;
  } catch (const std::exception&) {
    return std::nullopt;  // corrupt entries are recomputed, never trusted
  }
}

void SubspaceCache::store(const KTypeSubspace& s) const {
  const auto path = entry_path(s.pair);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw invalid_input("cannot write cache file " + tmp);
    out << subspace_to_json(s).dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace vzk
