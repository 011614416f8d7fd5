#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszul/forms.hpp"

namespace koszul {

// Scenario parse failure with 1-based line/column position.
struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

// Named elements declared in a scenario.  Roles fix the expected degree:
//   mc       base polynomial, degree n   (Maurer-Cartan candidates)
//   gauge    base polynomial, degree n-1 (gauge parameters)
//   ambient  chart polynomial, degree n+1 (Hamiltonian deformations)
//   oneform  base 1-form of form degree n (graph candidates)
enum class Role { MC, Gauge, Ambient, OneFormRole };

struct Element {
    std::string name;
    Role role;
    GradedPoly poly;          // for mc / gauge / ambient
    std::optional<OneForm> form;  // for oneform
};

// A requested check.  kind is one of: master, brackets, mc, mc-formal,
// gauge, kuranishi, extended, graph-lagrangian; args are the raw words.
struct CheckRequest {
    std::string kind;
    std::vector<std::string> args;
    int line = 0;
};

// A parsed scenario: base chart + shift, the Hamiltonian, named elements,
// and the inline check list.  The Hamiltonian is optional at parse time;
// checks that need it fail with a diagnostic at run time.
struct Scenario {
    std::string path;
    std::vector<Coordinate> base;
    int shift = -1;
    ChartPtr chart;                     // cotangent chart (once shift seen)
    std::optional<GradedPoly> theta;
    std::vector<Element> elements;
    std::vector<CheckRequest> checks;

    const Element* find(const std::string& name) const;
    // Canonical re-rendering; parse(render(parse(text))) == parse(text).
    std::string render() const;
};

// Line-oriented grammar:
//   coord <name> : <degree>
//   shift <n>
//   theta = <expr>
//   element <name> : <role> = <expr>
//   check <kind> [args...]
// '#' starts a comment; blank lines are skipped.  Expressions build from
// rationals, coordinate names, + - *, parentheses, p(<coord>) momenta and,
// for oneform elements, d(<coord>) factors leading each term.  The parser
// never reorders odd products: normal ordering happens in the algebra.
Scenario parse_scenario(const std::string& text, const std::string& path = "");
Scenario load_scenario(const std::string& file_path);

// Expression parser, exposed for the bindings and tests.  Parses a
// polynomial over the given chart (no d() forms allowed).
GradedPoly parse_poly(const ChartPtr& chart, const std::string& text);

}  // namespace koszul
