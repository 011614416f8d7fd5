#pragma once

#include "koszul/report.hpp"

namespace koszul {

struct RunOptions {
    int arity_cap = 4;  // identity-residual / emission arity bound
};

// Reads the arity cap from KOSZUL_ARITY_CAP (default 4).
RunOptions default_run_options();

// Run one check against a scenario (the kind/arg validation that the
// parser could not do — missing theta, wrong roles — surfaces as
// Outcome::Error with the engine diagnostic).
CheckResult run_check(const Scenario& sc, const CheckRequest& req,
                      const RunOptions& opt);

// Run the scenario's inline checks (or `master` when it declares none).
Report run_scenario(const Scenario& sc, const RunOptions& opt);

// Run a single synthesized check (CLI subcommands).
Report run_single(const Scenario& sc, const CheckRequest& req,
                  const RunOptions& opt);

// The embedded Casimir demonstration scenario (a copy of
// scenarios/weil-casimir.scn; a unit test keeps the two in sync).
const char* casimir_scenario_text();

}  // namespace koszul
