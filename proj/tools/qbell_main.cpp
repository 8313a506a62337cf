// qbell: two-qubit entanglement testing from the command line.
//
//   qbell analyze <state> [--optimize] [--chsh] [--settings S] [--json OUT]
//   qbell sweep-werner [--from A] [--to B] [--steps N] [--out CSV]
//   qbell audit --n N [--seed S] [--ensemble E] [--deadband D]
//   qbell simulate <state> --shots N [--settings S] [--seed S] [--bootstrap B]
//
// Exit codes: 0 computed, 1 audit discrepancy, 2 input error.

#include <cstdint>
#include <iostream>

#include <CLI11.hpp>

#include "qbell/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit entanglement tests: 3-setting inequality, optimal settings, "
               "PPT audit, finite-shot simulation"};
  app.require_subcommand(1);

  qbell::cli::AnalyzeOptions an;
  auto* analyze = app.add_subcommand("analyze", "Evaluate the test for one state");
  analyze->add_option("state", an.state, "Preset (singlet, phi+, phi-, psi+, werner:<b>, "
                                         "mixed:<seed>:<rank>) or JSON file")
      ->required();
  analyze->add_flag("--optimize", an.optimize, "Also run the settings optimizer");
  analyze->add_flag("--chsh", an.chsh, "Also report the CHSH baseline");
  std::string an_settings;
  auto* an_settings_opt =
      analyze->add_option("--settings", an_settings, "Evaluate at this setting too");
  std::string an_json;
  auto* an_json_opt = analyze->add_option("--json", an_json, "Write the report to a file");
  analyze->add_option("--seed", an.seed, "Optimizer seed")->envname("QBELL_SEED");

  qbell::cli::SweepOptions sw;
  auto* sweep = app.add_subcommand("sweep-werner", "CSV sweep over the Werner family");
  sweep->add_option("--from", sw.from, "Lower beta (default 0)");
  sweep->add_option("--to", sw.to, "Upper beta (default 1)");
  sweep->add_option("--steps", sw.steps, "Grid points (default 101)");
  std::string sw_out;
  auto* sw_out_opt = sweep->add_option("--out", sw_out, "Write CSV to a file");

  qbell::cli::AuditOptions au;
  auto* audit = app.add_subcommand("audit", "Randomized PPT-equivalence audit");
  audit->add_option("--n", au.n, "Number of sampled states")->required();
  audit->add_option("--seed", au.seed, "Ensemble seed")->envname("QBELL_SEED");
  audit->add_option("--ensemble", au.ensemble, "mixed | separable | pure");
  audit->add_option("--deadband", au.deadband, "No classification for |lambda_min| below this");

  qbell::cli::SimulateOptions si;
  auto* simulate = app.add_subcommand("simulate", "Finite-shot experiment simulation");
  simulate->add_option("state", si.state, "Preset or JSON file")->required();
  simulate->add_option("--settings", si.settings, "Setting preset or JSON file (default aligned)");
  simulate->add_option("--shots", si.shots, "Shots per setting")->required();
  simulate->add_option("--seed", si.seed, "Sampling seed")->envname("QBELL_SEED");
  simulate->add_option("--bootstrap", si.bootstrap, "Bootstrap resamples (0 = delta method)");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    if (*an_settings_opt) an.settings = an_settings;
    if (*an_json_opt) an.json_out = an_json;
    return qbell::cli::run_analyze(an, std::cout, std::cerr);
  }
  if (sweep->parsed()) {
    if (*sw_out_opt) sw.out_csv = sw_out;
    return qbell::cli::run_sweep_werner(sw, std::cout, std::cerr);
  }
  if (audit->parsed()) {
    return qbell::cli::run_audit(au, std::cout, std::cerr);
  }
  if (simulate->parsed()) {
    return qbell::cli::run_simulate(si, std::cout, std::cerr);
  }
  return 2;
}
