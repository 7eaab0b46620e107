// Parameter sweeps behind the command-line tool: records, CSV emission and the checks each
// subcommand runs on its own output.

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ghzlab {

struct SweepRecord {
  int n = 0;
  double p = 0.0;
  double alpha_x = 0.0;
  double alpha_y = 0.0;
  double alpha_z = 1.0;
  double epsilon = 0.0;
  double visibility = 1.0;
  std::string family;    // which state family or reference curve the row belongs to
  std::string quantity;  // negativity | qfi | sqrt_qfi_quarter | mk_beta | p_success | qs | asymptotic_gap
  std::string method;    // closed_form | brute_force | spectral | optimized | approximation
  double value = 0.0;
};

/// Shortest-round-trip-safe rendering: 17 significant digits.
std::string format_double(double v);
std::string csv_header();
std::string csv_row(const SweepRecord& r);
void write_csv(std::ostream& out, std::span<const SweepRecord> records);
/// Stable sort by (n, p); rows sharing a grid point keep their emission order.
void sort_canonical(std::vector<SweepRecord>& records);

/// "start:end:step" or a single number. The end is always a grid point; a regular point
/// within half a step of it is dropped in its favour.
std::vector<double> parse_grid(const std::string& spec);
/// Comma-separated list of grids or numbers, e.g. "0.2,0.5" or "0:1:0.1".
std::vector<double> parse_real_list(const std::string& spec);
std::vector<int> parse_int_list(const std::string& spec);

struct Tolerances {
  double oracle = 1e-8;    // closed form vs brute force / spectral
  double chain = 1e-9;     // negativity chain slack
  double qs_chain = 2e-3;  // Q_S chain slack (optimizer error)
  double basis = 1e-6;     // basis-scan optimum vs transversal value
};

struct SweepConfig {
  std::vector<int> ns;
  std::vector<double> ps;
  double alpha_x = 0.0, alpha_y = 0.0, alpha_z = 1.0;
  std::optional<double> epsilon;
  std::vector<double> visibilities{1.0};
  std::optional<std::string> graph_path;
  unsigned workers = 1;
  Tolerances tol;
};

enum class CheckKind {
  Invariant,      // internal consistency; failure exits 3
  Claim,          // a published robustness claim; failure exits 4
  Informational,  // reported only
};

struct CheckResult {
  std::string name;
  CheckKind kind;
  bool passed;
  std::string detail;
};

struct SweepOutcome {
  std::vector<SweepRecord> records;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
};

SweepOutcome negativity_sweep(const SweepConfig& cfg);
SweepOutcome fisher_sweep(const SweepConfig& cfg);
SweepOutcome mk_sweep(const SweepConfig& cfg);
SweepOutcome quantumness_chain_sweep(const SweepConfig& cfg);
SweepOutcome chain_checks(const SweepConfig& cfg);
SweepOutcome asymptotic_check(const SweepConfig& cfg);
SweepOutcome basis_scan_sweep(const SweepConfig& cfg);

/// 0 when every non-informational check passed, 3 for an invariant failure, else 4.
int exit_code_for(std::span<const CheckResult> checks);

}  // namespace ghzlab
