#include "koszul/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>

#include "koszul/linfty.hpp"

namespace koszul {

namespace {

const Element& need_element(const Scenario& sc, const std::string& name,
                            Role role, const char* role_word) {
    const Element* el = sc.find(name);
    if (!el) throw std::invalid_argument("unknown element '" + name + "'");
    if (el->role != role)
        throw std::invalid_argument("element '" + name + "' must have role " +
                                    role_word);
    return *el;
}

const GradedPoly& need_theta(const Scenario& sc) {
    if (!sc.theta)
        throw std::invalid_argument("the scenario declares no theta");
    return *sc.theta;
}

// Nonzero l^1..l^K values on tuples of base coordinate generators
// (combinations with repetition, enumerated in ordinal order).
void emit_brackets(const Scenario& sc, const LinftyStructure& S, int K,
                   OrderedJson& details) {
    const ChartPtr& ch = sc.chart;
    const int B = ch->base_count();
    if (B == 0) return;
    for (int j = 1; j <= std::min(K, S.arity_bound()); ++j) {
        std::vector<int> idx(j, 0);
        while (true) {
            std::vector<GradedPoly> args;
            args.reserve(j);
            std::string label = "l^" + std::to_string(j) + "(";
            for (int t = 0; t < j; ++t) {
                args.push_back(GradedPoly::coordinate(ch, idx[t]));
                if (t) label += ",";
                label += ch->name(idx[t]);
            }
            label += ")";
            GradedPoly v = linfty_bracket(S, args);
            if (!v.is_zero()) details[label] = v.render();
            int t = j - 1;
            while (t >= 0 && idx[t] == B - 1) --t;
            if (t < 0) break;
            ++idx[t];
            for (int u = t + 1; u < j; ++u) idx[u] = idx[t];
        }
    }
}

void dispatch(const Scenario& sc, const CheckRequest& req,
              const RunOptions& opt, CheckResult& res) {
    if (req.kind == "master") {
        try {
            LinftyStructure S = LinftyStructure::build(need_theta(sc));
            res.outcome = Outcome::Pass;
            res.details["defect"] = "0";
            res.details["strict"] = S.is_strict() ? "yes" : "no";
            res.details["curvature"] = S.curvature().render();
            res.details["arity bound"] = S.arity_bound();
        } catch (const MasterEquationError& e) {
            res.outcome = Outcome::Fail;
            res.message = "master equation fails";
            res.details["defect"] = e.defect.render();
        }
        return;
    }

    if (req.kind == "brackets") {
        const int K = std::stoi(req.args[0]);
        if (K > opt.arity_cap)
            throw std::invalid_argument(
                "arity " + req.args[0] + " exceeds the cap " +
                std::to_string(opt.arity_cap) + " (raise --arity-cap)");
        LinftyStructure S = LinftyStructure::build(need_theta(sc));
        emit_brackets(sc, S, K, res.details);
        res.outcome = Outcome::Pass;
        if (res.details.empty())
            res.message = "no nonzero structure constants through arity " +
                          req.args[0];
        return;
    }

    if (req.kind == "mc") {
        const Element& el = need_element(sc, req.args[0], Role::MC, "mc");
        LinftyStructure S = LinftyStructure::build(need_theta(sc));
        GradedPoly r = mc_residual(S, el.poly);
        res.outcome = r.is_zero() ? Outcome::Pass : Outcome::Fail;
        if (!r.is_zero()) res.message = "Maurer-Cartan residual is nonzero";
        res.details["residual"] = r.render();
        return;
    }

    if (req.kind == "mc-formal") {
        const Element& el = need_element(sc, req.args[0], Role::MC, "mc");
        const int order = std::stoi(req.args[1]);
        LinftyStructure S = LinftyStructure::build(need_theta(sc));
        FormalElement F{{el.poly}};
        const auto rs = mc_formal_residual(S, F, order);
        res.outcome = Outcome::Pass;
        for (int m = 1; m <= order; ++m) {
            const GradedPoly& r = rs[m - 1];
            if (!r.is_zero() && res.outcome == Outcome::Pass) {
                res.outcome = Outcome::Fail;
                res.message = "formal Maurer-Cartan residual is nonzero at "
                              "order " + std::to_string(m);
            }
            res.details["nu^" + std::to_string(m)] = r.render();
        }
        return;
    }

    if (req.kind == "gauge") {
        const Element& f = need_element(sc, req.args[0], Role::MC, "mc");
        const Element& lam =
            need_element(sc, req.args[1], Role::Gauge, "gauge");
        LinftyStructure S = LinftyStructure::build(need_theta(sc));
        GradedPoly rhs = gauge_rhs(S, f.poly, lam.poly);
        GradedPoly flow = zero_section_pullback(
            canonical_bracket(lam.poly, exp_flow(S, f.poly, S.theta())));
        res.outcome = (rhs == flow) ? Outcome::Pass : Outcome::Fail;
        if (res.outcome == Outcome::Fail)
            res.message = "gauge series and exponential flow disagree";
        res.details["bracket route"] = rhs.render();
        res.details["flow route"] = flow.render();
        return;
    }

    if (req.kind == "kuranishi") {
        const Element& el = need_element(sc, req.args[0], Role::MC, "mc");
        LinftyStructure S = LinftyStructure::build(need_theta(sc));
        GradedPoly ob = kuranishi(S, el.poly);
        res.outcome = ob.is_zero() ? Outcome::Pass : Outcome::Fail;
        if (!ob.is_zero())
            res.message = "quadratic obstruction class is nonzero";
        res.details["obstruction"] = ob.render();
        return;
    }

    if (req.kind == "extended") {
        const Element& f = need_element(sc, req.args[0], Role::MC, "mc");
        const Element& t =
            need_element(sc, req.args[1], Role::Ambient, "ambient");
        LinftyStructure S = LinftyStructure::build(need_theta(sc));
        auto [amb, base] = mc_extended_residual(S, f.poly, t.poly);
        res.outcome = (amb.is_zero() && base.is_zero()) ? Outcome::Pass
                                                        : Outcome::Fail;
        if (res.outcome == Outcome::Fail)
            res.message = "extended Maurer-Cartan residual is nonzero";
        res.details["ambient residual"] = amb.render();
        res.details["base residual"] = base.render();
        return;
    }

    if (req.kind == "graph-lagrangian") {
        const Element& el =
            need_element(sc, req.args[0], Role::OneFormRole, "oneform");
        TwoFormSkeleton sk = curl(*el.form);
        res.outcome = sk.is_zero() ? Outcome::Pass : Outcome::Fail;
        if (!sk.is_zero())
            res.message = "the graph is not Lagrangian: d(alpha) != 0";
        for (const auto& [key, val] : sk.comps)
            res.details["curl(" + sc.chart->name(key.first) + "," +
                        sc.chart->name(key.second) + ")"] = val.render();
        return;
    }

    throw std::invalid_argument("unknown check kind '" + req.kind + "'");
}

std::string chart_summary(const ChartPtr& ch) {
    std::string out;
    for (int i = 0; i < ch->size(); ++i) {
        if (i) out += " ";
        out += ch->name(i) + ":" + std::to_string(ch->degree(i));
    }
    return out;
}

}  // namespace

RunOptions default_run_options() {
    RunOptions opt;
    if (const char* e = std::getenv("KOSZUL_ARITY_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(e, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 64)
            opt.arity_cap = static_cast<int>(v);
    }
    return opt;
}

CheckResult run_check(const Scenario& sc, const CheckRequest& req,
                      const RunOptions& opt) {
    CheckResult res;
    res.kind = req.kind;
    res.args = req.args;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        dispatch(sc, req, opt, res);
    } catch (const std::exception& e) {
        res.outcome = Outcome::Error;
        res.message = e.what();
    }
    res.ms = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
    return res;
}

Report run_scenario(const Scenario& sc, const RunOptions& opt) {
    Report r;
    r.scenario_path = sc.path;
    r.chart_line = chart_summary(sc.chart);
    r.shift = sc.shift;
    r.theta = sc.theta ? sc.theta->render() : "";
    if (sc.checks.empty()) {
        CheckRequest master{"master", {}, 0};
        r.results.push_back(run_check(sc, master, opt));
    } else {
        for (const auto& req : sc.checks)
            r.results.push_back(run_check(sc, req, opt));
    }
    return r;
}

Report run_single(const Scenario& sc, const CheckRequest& req,
                  const RunOptions& opt) {
    Report r;
    r.scenario_path = sc.path;
    r.chart_line = chart_summary(sc.chart);
    r.shift = sc.shift;
    r.theta = sc.theta ? sc.theta->render() : "";
    r.results.push_back(run_check(sc, req, opt));
    return r;
}

const char* casimir_scenario_text() {
    return R"scn(# Weil-type chart: odd generators e1..e3 in degree 1 and even partners
# E1..E3 in degree 2, with shift 3.  theta combines a quadratic momentum
# term (so l^2(e_i, e_j) = 2*delta_ij is a pairing on the odd generators)
# with the epsilon-tensor term on the even ones (l^2(E_i, E_j) = E_k,
# i j k cyclic).
#
# The element D = e1*E1 + e2*E2 + e3*E3 - 1/2*e1*e2*e3 is l^1-closed and
# its quadratic obstruction is the Casimir
#     kuranishi(D) = 2*(E1^2 + E2^2 + E3^2),
# which no choice of the cubic coefficient can cancel: the mc and
# kuranishi checks on D FAIL and the run reports the obstruction class.
# The volume element vol = e1*e2*e3 is by contrast an exact Maurer-Cartan
# ray (every l^k of it vanishes), which mc and mc-formal confirm.
#
# Expected exit code: 2 BY DESIGN (the two failing checks on D are the
# point of the scenario).

coord e1 : 1
coord e2 : 1
coord e3 : 1
coord E1 : 2
coord E2 : 2
coord E3 : 2
shift 3

theta = p(e1)*p(e1) + p(e2)*p(e2) + p(e3)*p(e3) + E1*p(E2)*p(E3) + E2*p(E3)*p(E1) + E3*p(E1)*p(E2)

element D   : mc      = e1*E1 + e2*E2 + e3*E3 - 1/2*e1*e2*e3
element vol : mc      = e1*e2*e3
element lam : gauge   = e1*e2
element tht : ambient = p(e1)*p(e1) + p(e2)*p(e2) + p(e3)*p(e3) + E1*p(E2)*p(E3) + E2*p(E3)*p(E1) + E3*p(E1)*p(E2)

check master
check brackets 2
check mc vol
check mc-formal vol 5
check gauge D lam
check extended vol tht
check mc D
check kuranishi D
)scn";
}

}  // namespace koszul
