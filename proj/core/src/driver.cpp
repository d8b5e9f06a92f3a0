#include "hb/driver.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hb/continuation.hpp"
#include "hb/criterion.hpp"
#include "hb/errors.hpp"
#include "hb/fixtures.hpp"
#include "hb/halfplane.hpp"
#include "hb/kernels.hpp"
#include "hb/model_space.hpp"
#include "hb/spec_io.hpp"

namespace hb {

namespace {

using nlohmann::ordered_json;

ordered_json term_json(const TermReport& t) {
    ordered_json j;
    j["verdict"] = to_string(t.verdict);
    if (t.verdict == Verdict3::Finite) j["value"] = t.value;
    j["evidence"] = t.evidence;
    if (!t.partial_sums.empty()) j["partial_sums"] = t.partial_sums;
    return j;
}

ordered_json criterion_json(const CriterionReport& rep) {
    ordered_json j;
    j["zeta0_angle"] = rep.zeta0_angle;
    j["order"] = rep.order;
    j["blaschke_term"] = term_json(rep.blaschke);
    j["atomic_term"] = term_json(rep.atomic);
    j["outer_term"] = term_json(rep.outer);
    j["total_verdict"] = to_string(rep.total);
    if (rep.total == Verdict3::Finite) j["total_value"] = rep.total_value;
    j["evidence"] = rep.evidence;
    return j;
}

ordered_json probe_json(const ProbeReport& rep) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : rep.rows) {
        ordered_json r;
        r["r"] = row.r;
        r["value"] = row.value;
        r["reliable"] = row.reliable;
        if (!row.note.empty()) r["note"] = row.note;
        rows.push_back(std::move(r));
    }
    ordered_json j;
    j["order"] = rep.order;
    j["rows"] = std::move(rows);
    j["verdict"] = to_string(rep.verdict);
    j["growth_ratio"] = rep.growth_ratio;
    j["evidence"] = rep.evidence;
    return j;
}

ordered_json arc_json(const ArcVerdict& v) {
    ordered_json j;
    j["arc_start"] = v.arc.start;
    j["arc_end"] = v.arc.end;
    j["passes"] = v.passes;
    j["blocking_points"] = v.blocking_points;
    j["channel_evidence"] = v.channel_evidence;
    if (v.min_resolvent_sv) j["min_resolvent_sv"] = *v.min_resolvent_sv;
    return j;
}

ordered_json bernstein_json(const BernsteinReport& rep) {
    ordered_json j;
    j["verdict"] = to_string(rep.verdict);
    j["sup_derivative"] = rep.sup_derivative;
    ordered_json levels = ordered_json::array();
    for (const auto& [y, s] : rep.level_sups)
        levels.push_back({{"im", y}, {"sup", s}});
    j["level_sups"] = std::move(levels);
    j["evidence"] = rep.evidence;
    return j;
}

SchurSpec resolve_spec(const RunConfig& cfg) {
    if (cfg.fixture && cfg.spec_path)
        throw ParseError("give either --fixture or --spec, not both");
    if (cfg.fixture) return fixture(*cfg.fixture);
    if (cfg.spec_path) return load_spec_file(*cfg.spec_path);
    throw ParseError("no spec given: use --fixture or --spec");
}

ordered_json cmd_describe(const SchurSpec& spec) {
    ordered_json j;
    j["factorization"] = spec.describe();
    j["inner"] = spec.is_inner();
    j["finite_blaschke"] = spec.is_finite_blaschke();
    const ExtremePointReport ext = is_extreme_point(spec);
    j["extreme_point"] = {{"verdict", to_string(ext.verdict)},
                          {"is_extreme", ext.is_extreme},
                          {"evidence", ext.evidence}};
    if (ext.log_gap_integral)
        j["extreme_point"]["log_gap_integral"] = *ext.log_gap_integral;
    const SpectrumReport sp = spectrum(spec);
    ordered_json zeros = ordered_json::array();
    const size_t show = std::min<size_t>(sp.interior_zeros.size(), 16);
    for (size_t i = 0; i < show; ++i)
        zeros.push_back({sp.interior_zeros[i].real(), sp.interior_zeros[i].imag()});
    j["spectrum"] = {{"interior_zero_count", sp.interior_zeros.size()},
                     {"interior_zeros_head", std::move(zeros)},
                     {"boundary_points", sp.boundary.points},
                     {"boundary_whole_circle", sp.boundary.whole_circle}};
    return j;
}

ordered_json cmd_model(const SchurSpec& spec) {
    const ModelSpaceRep rep = ModelSpaceRep::build(spec);
    ordered_json j;
    j["dim"] = rep.dim();
    j["quadrature_nodes"] = rep.quadrature_nodes();
    double max_eig = 0.0;
    for (const Complex& ev : rep.xstar_eigenvalues())
        max_eig = std::max(max_eig, std::abs(ev));
    j["max_xstar_eigenvalue_modulus"] = max_eig;
    j["xstar_identity_residual"] = verify_xstar_identity(rep);

    std::mt19937 rng(20240);
    std::uniform_real_distribution<double> radial(0.0, 0.8), ang(0.0, kTwoPi);
    double max_route_diff = 0.0, max_dk_diff = 0.0;
    for (int i = 0; i < 8; ++i) {
        const Complex lambda = std::polar(radial(rng), ang(rng));
        max_route_diff =
            std::max(max_route_diff, kernel_in_model(rep, lambda).max_coeff_diff);
        for (int order = 0; order <= 2; ++order) {
            const auto coeffs = derivative_kernel_resolvent(rep, lambda, order);
            const Complex z = std::polar(radial(rng), ang(rng));
            const Complex direct = derivative_kernel(rep.spec(), lambda, order, z);
            max_dk_diff = std::max(max_dk_diff,
                                   std::abs(rep.evaluate(coeffs, z) - direct));
        }
    }
    j["kernel_route_residual"] = max_route_diff;
    j["derivative_kernel_route_residual"] = max_dk_diff;
    return j;
}

ordered_json cmd_transfer(const SchurSpec& spec) {
    const HalfPlaneFunction b1(spec);
    ordered_json j;
    ordered_json samples = ordered_json::array();
    const Complex pts[] = {{0.0, 1.0}, {1.0, 1.0}, {-2.0, 0.5}, {0.0, 2.0}};
    bool contractive = true;
    for (const Complex& w : pts) {
        const Complex v = b1(w);
        contractive = contractive && std::abs(v) <= 1.0 + 1e-10;
        samples.push_back({{"re", w.real()},
                           {"im", w.imag()},
                           {"value_re", v.real()},
                           {"value_im", v.imag()}});
    }
    j["samples"] = std::move(samples);
    j["contractive_on_samples"] = contractive;

    const std::vector<DiscFunction> fs = {
        {"one", [](Complex) { return Complex{1.0, 0.0}; }, {1.0, 0.0}},
        {"z", [](Complex z) { return z; }, {0.0, 0.0}},
        {"cauchy-half", [](Complex z) { return 1.0 / (1.0 - 0.5 * z); }, {1.0, 0.0}},
    };
    double max_unitarity = 0.0;
    for (const auto& f : fs) {
        const double disc = disc_l2_norm_sq(f);
        const double line = halfplane_l2_norm_sq(
            [&](double x) { return apply_U(f, x); });
        max_unitarity = std::max(max_unitarity, std::fabs(disc - line));
    }
    j["unitarity_residual"] = max_unitarity;

    std::vector<double> xs;
    for (int m = -10; m <= 10; ++m) xs.push_back(0.7 * m);
    double max_intertwine = 0.0;
    for (auto sym : {ToeplitzSymbol::One, ToeplitzSymbol::Shift,
                     ToeplitzSymbol::Backshift})
        for (const auto& f : fs)
            max_intertwine =
                std::max(max_intertwine, verify_intertwining(sym, f, xs));
    j["intertwining_residual"] = max_intertwine;
    return j;
}

// Cross-module consistency suite for one spec. Throws ConsistencyViolation.
ordered_json cmd_verify_all(const SchurSpec& spec) {
    ordered_json j;
    std::mt19937 rng(7011);
    std::uniform_real_distribution<double> radial(0.0, 0.8), ang(0.0, kTwoPi);

    // Kernel identities.
    double herm = 0.0;
    for (int i = 0; i < 40; ++i) {
        const Complex a = std::polar(radial(rng), ang(rng));
        const Complex b = std::polar(radial(rng), ang(rng));
        herm = std::max(herm,
                        std::abs(kernel(spec, a, b) - std::conj(kernel(spec, b, a))));
    }
    j["hermitian_residual"] = herm;
    bool kernels_ok = herm < 1e-10;

    // Boundary classification at two angles on the two decidable channels.
    ordered_json points = ordered_json::array();
    bool all_consistent = true;
    for (double zeta : {0.0, kPi}) {
        const BoundaryClassification cls = classify_boundary_point(spec, zeta, 0);
        ordered_json p;
        p["zeta0_angle"] = zeta;
        p["criterion"] = to_string(cls.criterion.total);
        p["probe"] = to_string(cls.probe.verdict);
        if (cls.range) p["range_in_range"] = cls.range->in_range;
        p["summary"] = cls.summary;
        points.push_back(std::move(p));
        all_consistent = all_consistent && cls.consistent;
    }
    j["boundary_points"] = std::move(points);

    // Arc / extreme-point coherence.
    const ExtremePointReport ext = is_extreme_point(spec);
    j["extreme"] = {{"verdict", to_string(ext.verdict)},
                    {"is_extreme", ext.is_extreme}};
    ordered_json arcs = ordered_json::array();
    bool arc_extreme_ok = true;
    for (const Arc arc : {Arc{-0.1, 0.1}, Arc{kPi / 2, kPi}}) {
        const ArcVerdict v = arc_classification(spec, arc);
        if (v.passes && ext.verdict == Verdict3::Finite && !ext.is_extreme)
            arc_extreme_ok = false;  // passing arc forces extremality
        arcs.push_back(arc_json(v));
    }
    j["arcs"] = std::move(arcs);

    // Exterior reflection identity.
    double refl = 0.0;
    for (int i = 0; i < 25; ++i) {
        const Complex z = std::polar(1.1 + 0.8 * radial(rng), ang(rng));
        bool skip = false;
        for (const Complex& a : spec.zeros())
            if (a != Complex{0.0, 0.0} &&
                std::abs(z - 1.0 / std::conj(a)) < 0.05)
                skip = true;
        if (skip) continue;
        refl = std::max(refl, std::abs(eval_b(spec, z) *
                                           std::conj(eval_b(spec, 1.0 / std::conj(z))) -
                                       1.0));
    }
    j["reflection_residual"] = refl;

    const bool ok = kernels_ok && all_consistent && arc_extreme_ok && refl < 1e-8;
    j["consistent"] = ok;
    if (!ok)
        throw ConsistencyViolation("verify-all: cross-module checks disagree");
    return j;
}

std::string render_text(const ordered_json& j, int indent = 0) {
    std::ostringstream os;
    const std::string pad(indent, ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            os << pad << key << ":\n" << render_text(value, indent + 2);
        } else if (value.is_array() && !value.empty() && value[0].is_object()) {
            os << pad << key << ":\n";
            for (const auto& item : value)
                os << pad << "  -\n" << render_text(item, indent + 4);
        } else {
            os << pad << key << ": " << value.dump() << "\n";
        }
    }
    return os.str();
}

}  // namespace

RunResult run(const RunConfig& cfg) {
    ordered_json report;
    report["command"] = cfg.command;
    int exit_code = 0;
    try {
        const SchurSpec spec = resolve_spec(cfg);
        ordered_json& params = report["params"];
        params = ordered_json::object();
        if (cfg.fixture) params["fixture"] = *cfg.fixture;
        if (cfg.spec_path) params["spec"] = *cfg.spec_path;

        if (cfg.command == "describe") {
            report["result"] = cmd_describe(spec);
        } else if (cfg.command == "criterion") {
            params["zeta_over_pi"] = cfg.zeta_over_pi;
            params["order"] = cfg.order;
            if (cfg.order < 0) throw ParseError("--order must be >= 0");
            report["result"] = criterion_json(
                criterion(spec, cfg.zeta_over_pi * kPi, cfg.order));
        } else if (cfg.command == "probe") {
            params["zeta_over_pi"] = cfg.zeta_over_pi;
            params["order"] = cfg.order;
            params["grid_k_max"] = cfg.grid_k_max;
            if (cfg.order < 0) throw ParseError("--order must be >= 0");
            if (cfg.grid_k_max < 1 || cfg.grid_k_max > 8)
                throw ParseError("--grid-k-max must be in 1..8");
            const SchurSpec rotated =
                normalize_boundary_point(spec, cfg.zeta_over_pi * kPi);
            report["result"] = probe_json(radial_norm_probe(
                rotated, cfg.order, default_radial_grid(cfg.grid_k_max)));
        } else if (cfg.command == "model") {
            report["result"] = cmd_model(spec);
        } else if (cfg.command == "arc") {
            if (same_angle(cfg.arc_start_over_pi * kPi, cfg.arc_end_over_pi * kPi))
                throw ParseError("arc endpoints must be distinct mod 2pi");
            params["arc_start_over_pi"] = cfg.arc_start_over_pi;
            params["arc_end_over_pi"] = cfg.arc_end_over_pi;
            report["result"] = arc_json(arc_classification(
                spec, Arc{cfg.arc_start_over_pi * kPi, cfg.arc_end_over_pi * kPi}));
        } else if (cfg.command == "transfer") {
            report["result"] = cmd_transfer(spec);
        } else if (cfg.command == "bernstein") {
            report["result"] = bernstein_json(bernstein_check(spec));
        } else if (cfg.command == "verify-all") {
            report["result"] = cmd_verify_all(spec);
        } else {
            throw ParseError("unknown command '" + cfg.command + "'");
        }
    } catch (const ConsistencyViolation& e) {
        report["error"] = e.what();
        exit_code = 2;
    } catch (const Error& e) {
        report["error"] = e.what();
        exit_code = 1;
    }

    RunResult out;
    out.exit_code = exit_code;
    out.output = cfg.format == RunConfig::Format::Json ? report.dump(2)
                                                       : render_text(report);
    return out;
}

}  // namespace hb
