#include "koszul/report.hpp"

#include <cstdio>

#include "koszul/linfty.hpp"

namespace koszul {

namespace {

int count(const Report& r, Outcome o) {
    int k = 0;
    for (const auto& c : r.results) k += (c.outcome == o) ? 1 : 0;
    return k;
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        case Outcome::Error: return "error";
    }
    return "?";
}

const char* outcome_tag(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "[PASS]";
        case Outcome::Fail: return "[FAIL]";
        case Outcome::Error: return "[ERROR]";
    }
    return "[?]";
}

std::string check_label(const CheckResult& c) {
    std::string s = c.kind;
    for (const auto& a : c.args) s += " " + a;
    return s;
}

void append_details(std::string& out, const OrderedJson& details) {
    for (const auto& [k, v] : details.items()) {
        out += "    " + k + " = ";
        out += v.is_string() ? v.get<std::string>() : v.dump();
        out += "\n";
    }
}

}  // namespace

int Report::passed() const { return count(*this, Outcome::Pass); }
int Report::failed() const { return count(*this, Outcome::Fail); }
int Report::errors() const { return count(*this, Outcome::Error); }

OrderedJson sign_fingerprint() {
    OrderedJson fp = OrderedJson::object();

    // Degree-0 base, shift 1: the plane model.
    auto ch1 = Chart::shifted_cotangent({{"x", 0}, {"y", 0}}, 1);
    auto x = GradedPoly::coordinate(ch1, "x");
    auto y = GradedPoly::coordinate(ch1, "y");
    auto px = GradedPoly::coordinate(ch1, "p(x)");
    auto py = GradedPoly::coordinate(ch1, "p(y)");
    fp["{x,p(x)} [|x|=0, n=1]"] = canonical_bracket(x, px).render();
    fp["{p(x),x} [|x|=0, n=1]"] = canonical_bracket(px, x).render();
    auto S = LinftyStructure::build(px * py);
    fp["l2(x,y) [theta=p(x)*p(y), n=1]"] = linfty_bracket(S, {x, y}).render();
    fp["extended-L2(p(x),x) ambient [n=1]"] =
        extended_brackets(S, 2,
                          {ExtendedElement::make(GradedPoly::zero(ch1), px),
                           ExtendedElement::make(GradedPoly::zero(ch1), x)})
            .ambient.render();

    // Degree-1 base, shift 2: odd coordinates.
    auto ch2 = Chart::shifted_cotangent({{"a", 1}, {"b", 1}}, 2);
    auto a = GradedPoly::coordinate(ch2, "a");
    auto b = GradedPoly::coordinate(ch2, "b");
    auto pa = GradedPoly::coordinate(ch2, "p(a)");
    fp["{p(a),a} [|a|=1, n=2]"] = canonical_bracket(pa, a).render();
    fp["d(a*b)/db [|a|=|b|=1]"] = partial_derivative(a * b, "b").render();
    auto dda = Derivation::make(
        ch2, -1,
        {GradedPoly::constant(ch2, 1), GradedPoly::zero(ch2),
         GradedPoly::zero(ch2), GradedPoly::zero(ch2)});
    fp["J(d/da) [|a|=1, n=2]"] = j_map(dda).render();

    fp["decalage(2,2)"] = std::to_string(decalage_sign({2, 2}));
    return fp;
}

std::string render_text(const Report& r, bool verbose) {
    std::string out;
    out += "scenario " + (r.scenario_path.empty() ? "-" : r.scenario_path) +
           "\n";
    out += "chart " + r.chart_line + "\n";
    out += "shift " + std::to_string(r.shift) + "\n";
    if (!r.theta.empty()) out += "theta " + r.theta + "\n";
    out += "\n";
    for (const auto& c : r.results) {
        out += std::string(outcome_tag(c.outcome)) + " " + check_label(c) +
               "\n";
        if (!c.message.empty()) out += "    " + c.message + "\n";
        if (verbose || c.outcome != Outcome::Pass || c.kind == "brackets")
            append_details(out, c.details);
    }
    out += "summary " + std::to_string(r.passed()) + " passed, " +
           std::to_string(r.failed()) + " failed, " +
           std::to_string(r.errors()) + " errors\n";
    return out;
}

std::string render_structured(const Report& r) {
    OrderedJson j = OrderedJson::object();
    j["version"] = kVersion;
    j["scenario"] = r.scenario_path;
    j["chart"] = r.chart_line;
    j["shift"] = r.shift;
    if (r.theta.empty())
        j["theta"] = nullptr;
    else
        j["theta"] = r.theta;
    j["fingerprint"] = sign_fingerprint();
    OrderedJson checks = OrderedJson::array();
    for (const auto& c : r.results) {
        OrderedJson jc = OrderedJson::object();
        jc["kind"] = c.kind;
        jc["args"] = c.args;
        jc["outcome"] = outcome_name(c.outcome);
        jc["message"] = c.message;
        jc["details"] = c.details;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    OrderedJson sum = OrderedJson::object();
    sum["passed"] = r.passed();
    sum["failed"] = r.failed();
    sum["errors"] = r.errors();
    sum["exit"] = r.exit_code();
    j["summary"] = sum;
    return j.dump(2) + "\n";
}

std::string render_timings(const Report& r) {
    std::string out;
    for (const auto& c : r.results) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f ms", c.ms);
        out += "timing " + check_label(c) + ": " + buf + "\n";
    }
    return out;
}

}  // namespace koszul
