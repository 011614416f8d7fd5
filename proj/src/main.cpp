#include <CLI11.hpp>
#include <iostream>

#include "koszul/runner.hpp"

namespace {

using namespace koszul;

int emit(const Report& r, const std::string& output, bool verbose) {
    std::cout << (output == "structured" ? render_structured(r)
                                         : render_text(r, verbose));
    std::cerr << render_timings(r);
    return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "koszul - exact engine for N-graded polynomial algebras on shifted "
        "cotangent charts:\ncanonical brackets, derived L-infinity brackets, "
        "Maurer-Cartan / gauge / obstruction checks."};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    std::string output = "text";
    bool verbose = false;
    int arity_cap = default_run_options().arity_cap;
    app.add_option("--output", output, "report format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_flag("--verbose", verbose,
                 "include per-check detail values for passing checks too");
    app.add_option("--arity-cap", arity_cap,
                   "largest bracket arity the engine will expand "
                   "(default: KOSZUL_ARITY_CAP or 4)")
        ->check(CLI::Range(1, 1 << 20));

    std::string path, element, f_name, lambda_name, theta_t_name, demo_name;
    int arity = 2, order = 2;

    auto* c_check = app.add_subcommand(
        "check", "run every inline check of a scenario file");
    c_check->add_option("scenario", path, "scenario file (.scn)")->required();

    auto* c_master = app.add_subcommand(
        "master", "check the master equation {theta,theta} = 0");
    c_master->add_option("scenario", path, "scenario file (.scn)")->required();

    auto* c_brackets = app.add_subcommand(
        "brackets",
        "emit the nonzero derived brackets l^1..l^K on coordinate tuples");
    c_brackets->add_option("--arity", arity, "largest arity K to emit")
        ->required()
        ->check(CLI::Range(1, 1 << 20));
    c_brackets->add_option("scenario", path, "scenario file (.scn)")
        ->required();

    auto* c_mc = app.add_subcommand(
        "mc", "evaluate the Maurer-Cartan residual of a named element");
    c_mc->add_option("--element", element, "mc element name")->required();
    c_mc->add_option("scenario", path, "scenario file (.scn)")->required();

    auto* c_formal = app.add_subcommand(
        "formal",
        "order-by-order Maurer-Cartan residuals of the formal ray nu*f");
    c_formal->add_option("--element", element, "mc element name")->required();
    c_formal->add_option("--order", order, "highest nu-order to expand")
        ->required()
        ->check(CLI::Range(1, 1 << 20));
    c_formal->add_option("scenario", path, "scenario file (.scn)")->required();

    auto* c_gauge = app.add_subcommand(
        "gauge",
        "compare the gauge bracket series with the exponential flow route");
    c_gauge->add_option("--f", f_name, "mc element generating the flow")
        ->required();
    c_gauge->add_option("--lambda", lambda_name, "gauge parameter element")
        ->required();
    c_gauge->add_option("scenario", path, "scenario file (.scn)")->required();

    auto* c_kuranishi = app.add_subcommand(
        "kuranishi",
        "quadratic obstruction l^2(f,f) of an l^1-closed element");
    c_kuranishi->add_option("--element", element, "mc element name")
        ->required();
    c_kuranishi->add_option("scenario", path, "scenario file (.scn)")
        ->required();

    auto* c_extended = app.add_subcommand(
        "extended",
        "extended Maurer-Cartan residual of a base + ambient deformation");
    c_extended->add_option("--f", f_name, "mc element name")->required();
    c_extended->add_option("--theta-t", theta_t_name, "ambient element name")
        ->required();
    c_extended->add_option("scenario", path, "scenario file (.scn)")
        ->required();

    auto* c_demo = app.add_subcommand(
        "demo", "run an embedded demonstration scenario");
    c_demo->add_option("name", demo_name, "demo name (casimir)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    RunOptions opt;
    opt.arity_cap = arity_cap;

    try {
        Scenario sc;
        if (*c_demo) {
            if (demo_name != "casimir") {
                std::cerr << "error: unknown demo '" << demo_name
                          << "' (available: casimir)\n";
                return 1;
            }
            sc = parse_scenario(casimir_scenario_text(), "demo:casimir");
        } else {
            sc = load_scenario(path);
        }

        if (*c_check || *c_demo) return emit(run_scenario(sc, opt), output, verbose);
        CheckRequest req;
        if (*c_master) {
            req = {"master", {}, 0};
        } else if (*c_brackets) {
            req = {"brackets", {std::to_string(arity)}, 0};
        } else if (*c_mc) {
            req = {"mc", {element}, 0};
        } else if (*c_formal) {
            req = {"mc-formal", {element, std::to_string(order)}, 0};
        } else if (*c_gauge) {
            req = {"gauge", {f_name, lambda_name}, 0};
        } else if (*c_kuranishi) {
            req = {"kuranishi", {element}, 0};
        } else if (*c_extended) {
            req = {"extended", {f_name, theta_t_name}, 0};
        } else {
            std::cerr << "error: no subcommand selected\n";
            return 1;
        }
        return emit(run_single(sc, req, opt), output, verbose);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
