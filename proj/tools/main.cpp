// Command-line front end: parse arguments into a RunConfig, run the
// requested analysis, print the report, and map verdicts to exit codes
// (0 ok, 1 input error, 2 consistency violation).

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "hb/driver.hpp"
#include "hb/fixtures.hpp"
#include "hb/schur.hpp"

namespace {

void add_spec_options(CLI::App* cmd, hb::RunConfig& cfg, std::string& fixture,
                      std::string& spec_path, std::string& format) {
    cmd->add_option("--fixture", fixture,
                    "built-in spec: single-zero|atom-at-1|tangential-family|"
                    "two-zero-blaschke|outer-half");
    cmd->add_option("--spec", spec_path, "path to a JSON spec file");
    cmd->add_option("--format", format, "text|json")->default_str("text");
    cmd->callback([&cfg, &fixture, &spec_path, &format] {
        if (!fixture.empty()) cfg.fixture = fixture;
        if (!spec_path.empty()) cfg.spec_path = spec_path;
        cfg.format = format == "json" ? hb::RunConfig::Format::Json
                                      : hb::RunConfig::Format::Text;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Factorization-based diagnostics for H(b) boundary behavior"};
    app.require_subcommand(1);

    hb::RunConfig cfg;
    std::string fixture, spec_path, format = "text";

    auto* describe = app.add_subcommand(
        "describe", "factorization summary, extreme-point verdict, spectrum");
    add_spec_options(describe, cfg, fixture, spec_path, format);

    auto* criterion = app.add_subcommand(
        "criterion", "three-term convergence report at a boundary point");
    criterion->add_option("--zeta", cfg.zeta_over_pi,
                          "boundary angle in units of pi");
    criterion->add_option("--order", cfg.order, "derivative order N >= 0");
    add_spec_options(criterion, cfg, fixture, spec_path, format);

    auto* probe = app.add_subcommand(
        "probe", "kernel-norm trace along the radius toward a boundary point");
    probe->add_option("--zeta", cfg.zeta_over_pi, "boundary angle in units of pi");
    probe->add_option("--order", cfg.order, "derivative order N >= 0");
    probe->add_option("--grid-k-max", cfg.grid_k_max,
                      "grid reaches 1 - 10^-k (default 6)");
    add_spec_options(probe, cfg, fixture, spec_path, format);

    auto* model = app.add_subcommand(
        "model", "finite-dimensional model verification residuals");
    add_spec_options(model, cfg, fixture, spec_path, format);

    auto* arc = app.add_subcommand(
        "arc", "continuation verdict for an open boundary arc");
    arc->add_option("--start", cfg.arc_start_over_pi, "arc start, units of pi");
    arc->add_option("--end", cfg.arc_end_over_pi, "arc end, units of pi");
    add_spec_options(arc, cfg, fixture, spec_path, format);

    auto* transfer = app.add_subcommand(
        "transfer", "half-plane transfer: samples, unitarity, intertwining");
    add_spec_options(transfer, cfg, fixture, spec_path, format);

    auto* bernstein = app.add_subcommand(
        "bernstein", "half-plane derivative-boundedness criterion");
    add_spec_options(bernstein, cfg, fixture, spec_path, format);

    auto* verify = app.add_subcommand(
        "verify-all", "cross-module consistency suite on one spec");
    add_spec_options(verify, cfg, fixture, spec_path, format);

    CLI11_PARSE(app, argc, argv);

    for (auto* sub : {describe, criterion, probe, model, arc, transfer,
                      bernstein, verify})
        if (sub->parsed()) cfg.command = sub->get_name();

    const hb::RunResult result = hb::run(cfg);
    std::cout << result.output << std::endl;
    return result.exit_code;
}
