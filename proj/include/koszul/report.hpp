#pragma once

#include <json.hpp>

#include "koszul/scenario.hpp"

namespace koszul {

using OrderedJson = nlohmann::ordered_json;

enum class Outcome { Pass, Fail, Error };

// Result of one check.  `details` carries canonical renderings (residuals,
// obstruction polynomials, emitted structure constants); `ms` is wall time,
// reported on stderr only so stdout stays byte-identical across runs.
struct CheckResult {
    std::string kind;
    std::vector<std::string> args;
    Outcome outcome = Outcome::Pass;
    std::string message;       // diagnostic for Fail / Error
    OrderedJson details = OrderedJson::object();
    double ms = 0.0;
};

struct Report {
    std::string scenario_path;
    std::string chart_line;    // rendered chart summary
    int shift = -1;
    std::string theta;         // canonical rendering ("" when absent)
    std::vector<CheckResult> results;

    int passed() const;
    int failed() const;
    int errors() const;
    // exit code contract: 0 all pass, 2 any failure/error
    int exit_code() const { return (failed() + errors()) ? 2 : 0; }
};

// The resolved sign conventions, computed on embedded miniature charts so
// every report pins down the convention fingerprint it was produced under.
OrderedJson sign_fingerprint();

// Deterministic renderings.  Text and structured modes carry the same
// content; timings are excluded from both (see render_timings).
std::string render_text(const Report& r, bool verbose);
std::string render_structured(const Report& r);
// One line per check with wall time, for stderr.
std::string render_timings(const Report& r);

}  // namespace koszul
