#include "vzk/verify.hpp"

#include <chrono>
#include <functional>

namespace vzk {
namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  std::chrono::microseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() -
                                                                 start);
  }
};

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

int slice_dimension(const GroupShape& shape, const Bidegree& bd) {
  const int box = shape.a * shape.b;
  return static_cast<int>(binomial(box, bd.k) * binomial(box, bd.l));
}

void require_range(const EmbeddingShape& e, int i, int j) {
  validate_embedding(e);
  if (i < 0 || j < 0 || i + j + e.r > e.q)
    throw invalid_input("check requires i >= 0, j >= 0 and i + j + r <= q");
}

std::vector<int> rect_key(const GroupShape& shape, int i, int j) {
  return {shape.a, shape.b, i, j};
}

}  // namespace

const KTypeSubspace& VerifyContext::rect_subspace(const GroupShape& shape,
                                                  int i, int j) {
  auto key = rect_key(shape, i, j);
  auto it = subspaces_.find(key);
  if (it == subspaces_.end())
    it = subspaces_
             .emplace(key, ktype_subspace(rectangle_pair(i, j, shape), shape))
             .first;
  return it->second;
}

const Projector& VerifyContext::rect_projector(const GroupShape& shape, int i,
                                               int j) {
  auto key = rect_key(shape, i, j);
  auto it = projectors_.find(key);
  if (it == projectors_.end())
    it = projectors_.emplace(key, Projector(rect_subspace(shape, i, j).space))
             .first;
  return it->second;
}

Multivector omega_vector(const EmbeddingShape& e) {
  validate_embedding(e);
  if (e.r < 1) throw invalid_input("omega requires r >= 1");
  EmbeddingMap map = embedding_basis_map(e);
  const GroupShape big = e.g_shape();
  Mask m = 0;
  for (const BasisIndex& v : map.p_cap_r)
    m |= Mask{1} << basis_position(v, big);
  return Multivector::monomial(big, m);
}

CheckReport check_omega_prim(const EmbeddingShape& e, VerifyContext* ctx) {
  Timer timer;
  validate_embedding(e);
  if (e.r < 1 || e.r > e.q)
    throw invalid_input("omega-prim requires 1 <= r <= q");
  VerifyContext local;
  VerifyContext& c = ctx ? *ctx : local;
  const GroupShape big = e.g_shape();

  CheckReport report;
  report.check_id = "omega-prim";
  report.embedding = e;
  const KTypeSubspace& vrr = c.rect_subspace(big, e.r, e.r);
  Multivector omega = omega_vector(e);
  Multivector prim = c.rect_projector(big, e.r, e.r).project(omega);
  report.pass = !prim.is_zero();
  report.dims["dim_V_rr"] = vrr.dim();
  report.dims["ambient_dim"] = slice_dimension(big, omega.bidegree());
  report.values["omega_prim_norm_sq"] = rational_to_string(prim.norm_squared());
  report.witness.push_back(WitnessEntry{"omega_prim", prim});
  report.elapsed = timer.elapsed();
  return report;
}

CheckReport check_restriction(const EmbeddingShape& e, int i, int j,
                              VerifyContext* ctx) {
  Timer timer;
  require_range(e, i, j);
  VerifyContext local;
  VerifyContext& c = ctx ? *ctx : local;
  const GroupShape small = e.h_shape();
  const GroupShape big = e.g_shape();
  EmbeddingMap map = embedding_basis_map(e);

  CheckReport report;
  report.check_id = "restriction";
  report.embedding = e;
  report.i = i;
  report.j = j;
  const KTypeSubspace& vh = c.rect_subspace(small, i, j);
  const KTypeSubspace& vg = c.rect_subspace(big, i, j);
  report.dims["dim_VH_ij"] = vh.dim();
  report.dims["dim_VG_ij"] = vg.dim();
  report.pass = true;
  for (const Multivector& v : vh.space.rows()) {
    Multivector mapped = embed(map, v);
    if (vg.space.contains(mapped)) continue;
    report.pass = false;
    Multivector residual =
        mapped - c.rect_projector(big, i, j).project(mapped);
    report.values["residual_norm_sq"] =
        rational_to_string(residual.norm_squared());
    report.witness.push_back(WitnessEntry{"embedded_vector", mapped});
    report.witness.push_back(WitnessEntry{"residual", residual});
    break;
  }
  report.elapsed = timer.elapsed();
  return report;
}

CheckReport check_tensor_inclusion(const EmbeddingShape& e, int i, int j,
                                   VerifyContext* ctx) {
  Timer timer;
  require_range(e, i, j);
  VerifyContext local;
  VerifyContext& c = ctx ? *ctx : local;
  const GroupShape small = e.h_shape();
  const GroupShape big = e.g_shape();
  EmbeddingMap map = embedding_basis_map(e);

  CheckReport report;
  report.check_id = "tensor-inclusion";
  report.embedding = e;
  report.i = i;
  report.j = j;
  const KTypeSubspace& vh = c.rect_subspace(small, i, j);
  const KTypeSubspace& target = c.rect_subspace(big, i + e.r, j + e.r);
  Multivector omega =
      e.r >= 1 ? omega_vector(e) : Multivector::scalar_one(big);
  report.dims["dim_VH_ij"] = vh.dim();
  report.dims["dim_VG_target"] = target.dim();
  report.pass = true;
  for (const Multivector& v : vh.space.rows()) {
    Multivector product = wedge(embed(map, v), omega);
    if (target.space.contains(product)) continue;
    report.pass = false;
    Multivector residual =
        product - c.rect_projector(big, i + e.r, j + e.r).project(product);
    report.values["residual_norm_sq"] =
        rational_to_string(residual.norm_squared());
    report.witness.push_back(WitnessEntry{"product", product});
    report.witness.push_back(WitnessEntry{"residual", residual});
    break;
  }
  report.elapsed = timer.elapsed();
  return report;
}

KTypeSubspace t_map_image(const EmbeddingShape& e, int i, int j,
                          TDomain domain, VerifyContext* ctx) {
  require_range(e, i, j);
  VerifyContext local;
  VerifyContext& c = ctx ? *ctx : local;
  const GroupShape big = e.g_shape();
  const KTypeSubspace& vij = c.rect_subspace(big, i, j);
  const KTypeSubspace& target = c.rect_subspace(big, i + e.r, j + e.r);
  const Projector& onto_target = c.rect_projector(big, i + e.r, j + e.r);

  // Right tensor factors: only the (rp,rp) bidegree slice matters; every
  // other slice of degree 2rp wedges into a bidegree orthogonal to the
  // target, so its image projects to zero.
  std::vector<Multivector> right;
  if (domain == TDomain::vrr) {
    const KTypeSubspace& vrr = c.rect_subspace(big, e.r, e.r);
    right = vrr.space.rows();
  } else {
    const int box = big.a * big.b;
    const int d = e.r * e.p;
    const std::vector<Mask> halves = masks_of_weight(box, d);
    for (Mask plus : halves)
      for (Mask minus : halves)
        right.push_back(Multivector::monomial(big, plus | (minus << box)));
  }

  RowSpace image(big, target.bidegree);
  for (const Multivector& v : vij.space.rows()) {
    for (const Multivector& w : right) {
      if (image.dim() == target.dim()) break;  // cannot grow past the target
      Multivector product = wedge(v, w);
      if (product.is_zero()) continue;
      image.insert(onto_target.project(product));
    }
    if (image.dim() == target.dim()) break;
  }
  return KTypeSubspace{big, rectangle_pair(i + e.r, j + e.r, big),
                       target.bidegree, std::move(image)};
}

CheckReport check_t_nonvanishing(const EmbeddingShape& e, int i, int j,
                                 VerifyContext* ctx) {
  Timer timer;
  require_range(e, i, j);
  VerifyContext local;
  VerifyContext& c = ctx ? *ctx : local;
  const GroupShape big = e.g_shape();

  CheckReport report;
  report.check_id = "t-nonvanishing";
  report.embedding = e;
  report.i = i;
  report.j = j;
  KTypeSubspace image = t_map_image(e, i, j, TDomain::vrr, &c);
  report.dims["dim_V_ij"] = c.rect_subspace(big, i, j).dim();
  report.dims["dim_V_rr"] = c.rect_subspace(big, e.r, e.r).dim();
  report.dims["dim_target"] = c.rect_subspace(big, i + e.r, j + e.r).dim();
  report.dims["image_dim"] = image.dim();
  report.pass = image.dim() >= 1;
  if (report.pass) {
    report.witness.push_back(
        WitnessEntry{"image_basis_vector", image.space.rows().front()});
  } else {
    // A vanished image: record the projected product of the first pair.
    const auto& vij = c.rect_subspace(big, i, j);
    const auto& vrr = c.rect_subspace(big, e.r, e.r);
    Multivector product =
        wedge(vij.space.rows().front(), vrr.space.rows().front());
    report.witness.push_back(WitnessEntry{
        "zero_image",
        c.rect_projector(big, i + e.r, j + e.r).project(product)});
  }
  report.elapsed = timer.elapsed();
  return report;
}

CheckReport check_t_image_equality(const EmbeddingShape& e, int i, int j,
                                   VerifyContext* ctx) {
  Timer timer;
  require_range(e, i, j);
  VerifyContext local;
  VerifyContext& c = ctx ? *ctx : local;

  CheckReport report;
  report.check_id = "t-image-equality";
  report.embedding = e;
  report.i = i;
  report.j = j;
  KTypeSubspace vrr_image = t_map_image(e, i, j, TDomain::vrr, &c);
  KTypeSubspace full_image = t_map_image(e, i, j, TDomain::full_bidegree, &c);
  report.dims["vrr_image_dim"] = vrr_image.dim();
  report.dims["full_image_dim"] = full_image.dim();

  bool subset = true;
  for (const Multivector& row : vrr_image.space.rows()) {
    if (full_image.space.contains(row)) continue;
    subset = false;
    report.witness.push_back(WitnessEntry{"vrr_vector_outside_full", row});
    report.witness.push_back(
        WitnessEntry{"residual", full_image.space.reduce(row)});
    break;
  }
  report.values["vrr_subset_of_full"] = subset ? "true" : "false";
  report.pass = subset && vrr_image.dim() == full_image.dim();
  if (subset && !report.pass) {
    // Strict inclusion: surface a vector the restricted domain misses.
    for (const Multivector& row : full_image.space.rows()) {
      if (vrr_image.space.contains(row)) continue;
      report.witness.push_back(
          WitnessEntry{"full_vector_outside_vrr", row});
      break;
    }
  }
  report.elapsed = timer.elapsed();
  return report;
}

std::vector<CheckReport> run_suite(const EmbeddingShape& e, int max_ij) {
  validate_embedding(e);
  VerifyContext ctx;
  std::vector<CheckReport> reports;
  auto guarded = [&](const std::string& id, std::optional<int> i,
                     std::optional<int> j,
                     const std::function<CheckReport()>& run) {
    Timer timer;
    try {
      reports.push_back(run());
    } catch (const std::exception& ex) {
      CheckReport report;
      report.check_id = id;
      report.embedding = e;
      report.i = i;
      report.j = j;
      report.pass = false;
      report.reason = ex.what();
      report.elapsed = timer.elapsed();
      reports.push_back(std::move(report));
    }
  };

  if (e.r >= 1)
    guarded("omega-prim", std::nullopt, std::nullopt,
            [&] { return check_omega_prim(e, &ctx); });
  for (int i = 0; i + e.r <= e.q; ++i) {
    if (max_ij >= 0 && i > max_ij) break;
    for (int j = 0; i + j + e.r <= e.q; ++j) {
      if (max_ij >= 0 && j > max_ij) break;
      guarded("restriction", i, j,
              [&] { return check_restriction(e, i, j, &ctx); });
      guarded("tensor-inclusion", i, j,
              [&] { return check_tensor_inclusion(e, i, j, &ctx); });
      guarded("t-nonvanishing", i, j,
              [&] { return check_t_nonvanishing(e, i, j, &ctx); });
      guarded("t-image-equality", i, j,
              [&] { return check_t_image_equality(e, i, j, &ctx); });
    }
  }
  return reports;
}

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const CheckReport& report : reports)
    if (!report.pass) return false;
  return true;
}

}  // namespace vzk
