// vzk: exact K-type and exterior-algebra toolkit for U(a,b).
//
// Exit codes: 0 = success / all checks pass, 1 = a check failed,
// 2 = invalid parameters or usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vzk/io.hpp"
#include "vzk/ktypes.hpp"
#include "vzk/shapes.hpp"
#include "vzk/verify.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::string output;
  std::string cache_dir;
  unsigned long seed = 0;
  bool have_seed = false;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::trunc);
  if (!out) throw vzk::invalid_input("cannot open output file " + opt.output);
  out << text;
}

void emit_json(const Options& opt, const json& j) {
  emit(opt, j.dump(2) + "\n");
}

std::string cache_directory(const Options& opt) {
  if (!opt.cache_dir.empty()) return opt.cache_dir;
  if (const char* env = std::getenv("VZK_CACHE_DIR")) return env;
  return "";
}

vzk::PartitionPair make_pair(int a, int b, const std::vector<int>& alpha,
                             const std::vector<int>& beta, bool beta_given) {
  vzk::GroupShape shape{a, b};
  vzk::validate_shape(shape);
  std::vector<int> beta_parts = beta;
  if (!beta_given) beta_parts.assign(static_cast<size_t>(a), b);
  vzk::PartitionPair pair{vzk::Partition(alpha), vzk::Partition(beta_parts),
                          shape};
  vzk::validate_pair(pair);
  return pair;
}

int cmd_enumerate(const Options& opt, int a, int b) {
  auto pairs = vzk::enumerate_compatible(vzk::GroupShape{a, b});
  if (opt.format == "json") {
    json rows = json::array();
    for (const auto& pair : pairs) {
      auto info = vzk::cohomological_degree(pair);
      json row = vzk::pair_to_json(pair);
      row["R"] = info.r;
      row["bidegree"] = {info.bidegree.k, info.bidegree.l};
      row["admissible_skew"] = vzk::is_admissible_skew(pair).admissible;
      rows.push_back(std::move(row));
    }
    emit_json(opt, json{{"shape", {{"a", a}, {"b", b}}},
                        {"count", pairs.size()},
                        {"pairs", rows}});
  } else {
    std::string text;
    for (const auto& pair : pairs) {
      auto info = vzk::cohomological_degree(pair);
      text += "alpha=" + vzk::to_string(pair.alpha) +
              " beta=" + vzk::to_string(pair.beta) +
              " R=" + std::to_string(info.r) + " bidegree=(" +
              std::to_string(info.bidegree.k) + "," +
              std::to_string(info.bidegree.l) + ") admissible=" +
              (vzk::is_admissible_skew(pair).admissible ? "yes" : "no") + "\n";
    }
    text += "total " + std::to_string(pairs.size()) + " compatible pairs\n";
    emit(opt, text);
  }
  return 0;
}

int cmd_classify(const Options& opt, const vzk::PartitionPair& pair) {
  json out = vzk::pair_to_json(pair);
  vzk::SkewReport skew = vzk::is_admissible_skew(pair);
  out["skew"] = vzk::skew_report_to_json(skew);
  bool compatible = vzk::is_compatible(pair);
  out["compatible"] = compatible;
  if (compatible) {
    auto info = vzk::cohomological_degree(pair);
    out["R"] = info.r;
    out["bidegree"] = {info.bidegree.k, info.bidegree.l};
    out["dominant_witness"] = vzk::dominant_to_json(vzk::dominant_from_pair(pair));
  }
  if (opt.format == "json") {
    emit_json(opt, out);
  } else {
    std::string text = vzk::to_string(pair) + "\n";
    text += std::string("compatible: ") + (compatible ? "yes" : "no") + "\n";
    text += std::string("admissible skew: ") + (skew.admissible ? "yes" : "no") +
            " (" + std::to_string(skew.components.size()) + " components)\n";
    if (compatible) {
      auto info = vzk::cohomological_degree(pair);
      text += "R=" + std::to_string(info.r) + " bidegree=(" +
              std::to_string(info.bidegree.k) + "," +
              std::to_string(info.bidegree.l) + ")\n";
    }
    emit(opt, text);
  }
  return 0;
}

vzk::KTypeSubspace load_or_build(const Options& opt,
                                 const vzk::PartitionPair& pair) {
  const std::string dir = cache_directory(opt);
  if (dir.empty()) return vzk::ktype_subspace(pair, pair.shape);
  vzk::SubspaceCache cache(dir);
  if (auto cached = cache.load(pair)) {
    std::cerr << "cache hit: " << cache.entry_path(pair).string() << "\n";
    return std::move(*cached);
  }
  vzk::KTypeSubspace s = vzk::ktype_subspace(pair, pair.shape);
  cache.store(s);
  std::cerr << "cache store: " << cache.entry_path(pair).string() << "\n";
  return s;
}

int cmd_ktype(const Options& opt, const vzk::PartitionPair& pair,
              bool hw_probe) {
  vzk::KTypeSubspace s = load_or_build(opt, pair);
  if (opt.format == "json") {
    json out = vzk::subspace_to_json(s);
    if (hw_probe)
      out["highest_weight_multiplicity"] =
          vzk::highest_weight_multiplicity(pair, pair.shape);
    emit_json(opt, out);
  } else {
    std::string text = vzk::to_string(pair) + "\n";
    text += "dim " + std::to_string(s.dim()) + ", bidegree (" +
            std::to_string(s.bidegree.k) + "," + std::to_string(s.bidegree.l) +
            ")\n";
    text += "generator " +
            vzk::generator_vector(vzk::dominant_from_pair(pair), pair.shape)
                .display() +
            "\n";
    for (const auto& row : s.space.rows())
      text += "  " + row.display() + "\n";
    if (hw_probe)
      text += "highest weight multiplicity " +
              std::to_string(vzk::highest_weight_multiplicity(pair, pair.shape)) +
              "\n";
    emit(opt, text);
  }
  return 0;
}

vzk::Multivector random_vector(const vzk::GroupShape& shape,
                               const vzk::Bidegree& bd, unsigned long seed) {
  std::mt19937_64 rng(seed);
  const int box = shape.a * shape.b;
  auto plus = vzk::masks_of_weight(box, bd.k);
  auto minus = vzk::masks_of_weight(box, bd.l);
  vzk::Multivector v(shape, bd);
  std::uniform_int_distribution<size_t> pick_plus(0, plus.size() - 1);
  std::uniform_int_distribution<size_t> pick_minus(0, minus.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int n = 0; n < 3; ++n) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    vzk::Mask m = plus[pick_plus(rng)] | (minus[pick_minus(rng)] << box);
    v += vzk::Multivector::monomial(shape, m, c);
  }
  return v;
}

int cmd_project(const Options& opt, const vzk::PartitionPair& pair,
                const std::string& input) {
  vzk::KTypeSubspace s = load_or_build(opt, pair);
  vzk::Multivector v(pair.shape, s.bidegree);
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw vzk::invalid_input("cannot open input file " + input);
    v = vzk::multivector_from_json(json::parse(in));
  } else if (opt.have_seed) {
    v = random_vector(pair.shape, s.bidegree, opt.seed);
  } else {
    throw vzk::invalid_input("project requires --input FILE or --seed N");
  }
  vzk::Multivector image = vzk::project_onto(s, v);
  if (opt.format == "json") {
    emit_json(opt, json{{"input", vzk::multivector_to_json(v)},
                        {"projection", vzk::multivector_to_json(image)},
                        {"projection_norm_sq",
                         vzk::rational_to_string(image.norm_squared())},
                        {"in_subspace", vzk::contains(s, v)}});
  } else {
    emit(opt, "input      " + v.display() + "\nprojection " +
                  image.display() + "\n");
  }
  return 0;
}

vzk::CheckReport dispatch_check(const std::string& id,
                                const vzk::EmbeddingShape& e, int i, int j) {
  if (id == "omega-prim") return vzk::check_omega_prim(e);
  if (id == "restriction") return vzk::check_restriction(e, i, j);
  if (id == "tensor-inclusion") return vzk::check_tensor_inclusion(e, i, j);
  if (id == "t-nonvanishing") return vzk::check_t_nonvanishing(e, i, j);
  if (id == "t-image-equality") return vzk::check_t_image_equality(e, i, j);
  throw vzk::invalid_input(
      "unknown check id: " + id +
      " (expected omega-prim, restriction, tensor-inclusion, t-nonvanishing "
      "or t-image-equality)");
}

int cmd_verify(const Options& opt, const std::string& id,
               const vzk::EmbeddingShape& e, int i, int j) {
  vzk::CheckReport report = dispatch_check(id, e, i, j);
  if (opt.format == "json") {
    emit_json(opt, vzk::report_to_json(report));
  } else {
    emit(opt, report.check_id + ": " + (report.pass ? "pass" : "fail") + "\n");
  }
  return report.pass ? 0 : 1;
}

int cmd_suite(const Options& opt, const vzk::EmbeddingShape& e, int max_ij) {
  auto reports = vzk::run_suite(e, max_ij);
  bool ok = vzk::all_pass(reports);
  if (opt.format == "json") {
    json out{{"format_version", vzk::kReportFormat},
             {"embedding", {{"p", e.p}, {"q", e.q}, {"r", e.r}}},
             {"max_ij", max_ij},
             {"all_pass", ok}};
    json list = json::array();
    for (const auto& report : reports) list.push_back(vzk::report_to_json(report));
    out["reports"] = list;
    emit_json(opt, out);
  } else {
    std::string text;
    for (const auto& report : reports) {
      text += report.check_id;
      if (report.i) text += " i=" + std::to_string(*report.i);
      if (report.j) text += " j=" + std::to_string(*report.j);
      text += report.pass ? ": pass" : ": FAIL";
      if (!report.reason.empty()) text += " (" + report.reason + ")";
      text += "\n";
    }
    text += ok ? "suite: all pass\n" : "suite: FAIL\n";
    emit(opt, text);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact K-type and exterior-algebra toolkit for U(a,b)"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global flags after the subcommand name

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("-o,--output", opt.output, "Write output to a file");
  app.add_option("--cache-dir", opt.cache_dir,
                 "Subspace cache directory (or VZK_CACHE_DIR)");
  auto* seed_opt =
      app.add_option("--seed", opt.seed, "Seed for sampled inputs");

  int a = 1, b = 1, p = 1, q = 1, r = 0, i = 0, j = 0, max_ij = -1;
  std::vector<int> alpha, beta;
  std::string check_id, input;
  bool hw_probe = false;

  auto* enumerate = app.add_subcommand("enumerate", "List compatible pairs");
  enumerate->add_option("-a", a, "rank of U(a)")->required();
  enumerate->add_option("-b", b, "rank of U(b)")->required();

  auto add_pair_options = [&](CLI::App* cmd) {
    cmd->add_option("-a", a, "rank of U(a)")->required();
    cmd->add_option("-b", b, "rank of U(b)")->required();
    cmd->add_option("--alpha", alpha, "parts of alpha (default empty)")
        ->delimiter(',');
    return cmd->add_option("--beta", beta, "parts of beta (default full box)")
        ->delimiter(',');
  };

  auto* classify =
      app.add_subcommand("classify", "Compatibility and skew report");
  CLI::Option* classify_beta = add_pair_options(classify);

  auto* ktype = app.add_subcommand("ktype", "Build a K-type subspace");
  CLI::Option* ktype_beta = add_pair_options(ktype);
  ktype->add_flag("--hw-probe", hw_probe,
                  "Also report the highest-weight multiplicity");

  auto* project = app.add_subcommand("project", "Project a vector onto V_{alpha,beta}");
  CLI::Option* project_beta = add_pair_options(project);
  project->add_option("--input", input, "Multivector JSON file");

  auto* verify = app.add_subcommand("verify", "Run a single check");
  verify->add_option("--check", check_id, "Check id")->required();
  verify->add_option("-p", p, "p")->required();
  verify->add_option("-q", q, "q")->required();
  verify->add_option("-r", r, "r")->required();
  verify->add_option("-i", i, "i");
  verify->add_option("-j", j, "j");

  auto* suite = app.add_subcommand("suite", "Run every check in range");
  suite->add_option("-p", p, "p")->required();
  suite->add_option("-q", q, "q")->required();
  suite->add_option("-r", r, "r")->required();
  suite->add_option("--max-ij", max_ij, "Cap on i and j (-1 = unbounded)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }
  opt.have_seed = seed_opt->count() > 0;

  try {
    if (*enumerate) return cmd_enumerate(opt, a, b);
    if (*classify)
      return cmd_classify(
          opt, make_pair(a, b, alpha, beta, classify_beta->count() > 0));
    if (*ktype) {
      vzk::PartitionPair pair =
          make_pair(a, b, alpha, beta, ktype_beta->count() > 0);
      if (!vzk::is_compatible(pair)) {
        nlohmann::json out = vzk::pair_to_json(pair);
        out["compatible"] = false;
        out["skew"] = vzk::skew_report_to_json(vzk::is_admissible_skew(pair));
        std::cerr << out.dump(2) << "\n";
        return 2;
      }
      return cmd_ktype(opt, pair, hw_probe);
    }
    if (*project)
      return cmd_project(
          opt, make_pair(a, b, alpha, beta, project_beta->count() > 0), input);
    if (*verify)
      return cmd_verify(opt, check_id, vzk::EmbeddingShape{p, q, r}, i, j);
    if (*suite) return cmd_suite(opt, vzk::EmbeddingShape{p, q, r}, max_ij);
  } catch (const vzk::incompatible_pair& ex) {
    nlohmann::json out{{"error", ex.what()},
                       {"skew", vzk::skew_report_to_json(ex.report)}};
    std::cerr << out.dump(2) << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
