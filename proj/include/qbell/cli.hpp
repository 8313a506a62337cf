// Subcommand implementations behind the command-line front end. Kept apart
// from argument parsing so tests can drive them directly.
//
// Exit codes: 0 = computed, 1 = audit discrepancy, 2 = input error.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace qbell::cli {

struct AnalyzeOptions {
  std::string state;
  bool optimize = false;
  bool chsh = false;
  std::optional<std::string> settings;  // evaluate at a user-supplied setting too
  std::optional<std::string> json_out;
  std::uint64_t seed = 0;
};

struct SweepOptions {
  double from = 0.0;
  double to = 1.0;
  int steps = 101;
  std::optional<std::string> out_csv;
};

struct AuditOptions {
  int n = 0;
  std::uint64_t seed = 0;
  std::string ensemble = "mixed";  // mixed | separable | pure
  double deadband = 1e-4;
};

struct SimulateOptions {
  std::string state;
  std::string settings = "aligned";
  long shots = 0;
  std::uint64_t seed = 0;
  int bootstrap = 1000;
};

int run_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);
int run_sweep_werner(const SweepOptions& opt, std::ostream& out, std::ostream& err);
int run_audit(const AuditOptions& opt, std::ostream& out, std::ostream& err);
int run_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace qbell::cli
