// ghzlab: parameter sweeps for dephased GHZ and graph-state resources.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <thread>

#include "CLI11.hpp"
#include "ghzlab/graph.hpp"
#include "ghzlab/sweeps.hpp"
#include "json.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

struct Options {
  std::string n, p_grid, p, visibility;
  std::optional<double> alpha_x, alpha_y, alpha_z, epsilon;
  std::string graph, output, manifest, format = "csv";
  unsigned workers = 1;
  std::optional<double> tol_oracle, tol_chain, tol_qs_chain, tol_basis;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Comma-separated qubit counts");
  sub->add_option("--p-grid", o.p_grid, "Noise grid start:end:step (or a list)");
  sub->add_option("--p", o.p, "Single noise strength or comma-separated values");
  sub->add_option("--alpha-x", o.alpha_x, "Pauli-X weight");
  sub->add_option("--alpha-y", o.alpha_y, "Pauli-Y weight");
  sub->add_option("--alpha-z", o.alpha_z, "Pauli-Z weight");
  sub->add_option("--epsilon", o.epsilon, "Deviation from dephasing, split evenly between X and Y");
  sub->add_option("--visibility", o.visibility, "White-noise visibility (list allowed)");
  sub->add_option("--graph", o.graph, "Edge-list file for graph-state chains");
  sub->add_option("--output", o.output, "CSV destination (default: stdout)");
  sub->add_option("--manifest", o.manifest, "Manifest destination (default: <output>.manifest.json or stderr)");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv"}));
  sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  sub->add_option("--tol-oracle", o.tol_oracle, "Closed form vs oracle tolerance");
  sub->add_option("--tol-chain", o.tol_chain, "Negativity chain slack");
  sub->add_option("--tol-qs-chain", o.tol_qs_chain, "Q_S chain slack");
  sub->add_option("--tol-basis", o.tol_basis, "Basis-scan tolerance");
}

ghzlab::SweepConfig resolve(const Options& o, nlohmann::json& overrides) {
  ghzlab::SweepConfig cfg;
  if (!o.n.empty()) cfg.ns = ghzlab::parse_int_list(o.n);
  if (!o.p_grid.empty() && !o.p.empty()) throw std::invalid_argument("use either --p-grid or --p");
  if (!o.p_grid.empty()) cfg.ps = ghzlab::parse_real_list(o.p_grid);
  if (!o.p.empty()) cfg.ps = ghzlab::parse_real_list(o.p);
  if (o.epsilon && (o.alpha_x || o.alpha_y || o.alpha_z))
    throw std::invalid_argument("use either --epsilon or --alpha-*");
  cfg.epsilon = o.epsilon;
  if (o.alpha_x || o.alpha_y || o.alpha_z) {
    cfg.alpha_x = o.alpha_x.value_or(0.0);
    cfg.alpha_y = o.alpha_y.value_or(0.0);
    cfg.alpha_z = o.alpha_z.value_or(1.0 - cfg.alpha_x - cfg.alpha_y);
  }
  if (!o.visibility.empty()) cfg.visibilities = ghzlab::parse_real_list(o.visibility);
  else cfg.visibilities = {1.0, 0.8};
  if (!o.graph.empty()) {
    ghzlab::read_edge_list(o.graph);  // a bad file is a usage error, surface it before running
    cfg.graph_path = o.graph;
  }
  cfg.workers = o.workers;
  auto take = [&](const std::optional<double>& v, double& slot, const char* name) {
    if (!v) return;
    slot = *v;
    overrides[name] = *v;
  };
  take(o.tol_oracle, cfg.tol.oracle, "oracle");
  take(o.tol_chain, cfg.tol.chain, "chain");
  take(o.tol_qs_chain, cfg.tol.qs_chain, "qs_chain");
  take(o.tol_basis, cfg.tol.basis, "basis");
  return cfg;
}

nlohmann::json config_json(const ghzlab::SweepConfig& cfg) {
  nlohmann::json j;
  j["n"] = cfg.ns;
  j["p"] = cfg.ps;
  if (cfg.epsilon) j["epsilon"] = *cfg.epsilon;
  j["alpha"] = {cfg.alpha_x, cfg.alpha_y, cfg.alpha_z};
  j["visibility"] = cfg.visibilities;
  if (cfg.graph_path) j["graph"] = *cfg.graph_path;
  j["workers"] = cfg.workers;
  return j;
}

const char* kind_name(ghzlab::CheckKind k) {
  switch (k) {
    case ghzlab::CheckKind::Invariant: return "invariant";
    case ghzlab::CheckKind::Claim: return "claim";
    case ghzlab::CheckKind::Informational: return "informational";
  }
  return "?";
}

int run(const std::string& name, const std::function<ghzlab::SweepOutcome(const ghzlab::SweepConfig&)>& sweep,
        const Options& o) {
  nlohmann::json overrides = nlohmann::json::object();
  ghzlab::SweepConfig cfg;
  try {
    cfg = resolve(o, overrides);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  ghzlab::SweepOutcome outcome;
  try {
    outcome = sweep(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }

  if (o.output.empty()) {
    ghzlab::write_csv(std::cout, outcome.records);
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << o.output << '\n';
      return 2;
    }
    ghzlab::write_csv(f, outcome.records);
  }

  for (const auto& c : outcome.checks)
    std::cerr << (c.passed ? "[PASS] " : "[FAIL] ") << '(' << kind_name(c.kind) << ") " << c.name << ": " << c.detail
              << '\n';

  nlohmann::json m;
  m["tool"] = "ghzlab";
  m["version"] = kVersion;
  m["subcommand"] = name;
  m["config"] = config_json(cfg);
  m["entropy_log_base"] = 2;
  m["tolerances"] = {{"oracle", cfg.tol.oracle},
                     {"chain", cfg.tol.chain},
                     {"qs_chain", cfg.tol.qs_chain},
                     {"basis", cfg.tol.basis},
                     {"jacobi_offdiag", 1e-12},
                     {"noise_normalization", 1e-12}};
  m["tolerance_overrides"] = overrides;
  m["wall_clock_seconds"] = {{name, outcome.seconds}};
  m["records"] = outcome.records.size();
  for (const auto& c : outcome.checks)
    m["checks"].push_back({{"name", c.name}, {"kind", kind_name(c.kind)}, {"passed", c.passed}, {"detail", c.detail}});
  const int code = ghzlab::exit_code_for(outcome.checks);
  m["exit_code"] = code;

  const std::string manifest_path = !o.manifest.empty() ? o.manifest
                                    : !o.output.empty() ? o.output + ".manifest.json"
                                                        : std::string{};
  if (manifest_path.empty()) {
    std::cerr << m.dump(2) << '\n';
  } else {
    std::ofstream f(manifest_path);
    f << m.dump(2) << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robustness sweeps for transversally encoded GHZ and graph states under local Pauli noise"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Options opts;
  const std::map<std::string, std::pair<std::string, std::function<ghzlab::SweepOutcome(const ghzlab::SweepConfig&)>>>
      commands{
          {"negativity-sweep", {"One-vs-rest negativity: closed forms and brute force", ghzlab::negativity_sweep}},
          {"fisher-sweep", {"Quantum Fisher information, bare vs transversal", ghzlab::fisher_sweep}},
          {"mk-sweep", {"Mermin-Klyshko values and CCP success probabilities", ghzlab::mk_sweep}},
          {"quantumness-chain", {"Relative entropy of quantumness along n", ghzlab::quantumness_chain_sweep}},
          {"chain-checks", {"Ordering chains for GHZ and graph families", ghzlab::chain_checks}},
          {"asymptotic-check", {"Large-n approach of the dephasing negativity to 1-p", ghzlab::asymptotic_check}},
          {"basis-scan", {"Search over shared encoding bases", ghzlab::basis_scan_sweep}},
      };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, entry] : commands) {
    auto* sub = app.add_subcommand(name, entry.first);
    add_common(sub, opts);
    subs[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const auto& [name, sub] : subs)
    if (sub->parsed()) return run(name, commands.at(name).second, opts);
  return 2;
}
