#include "hb/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hb/errors.hpp"

namespace hb {

namespace {

using nlohmann::ordered_json;

double number_at(const ordered_json& j, const std::string& context) {
    if (!j.is_number())
        throw ParseError(context + ": expected a number");
    return j.get<double>();
}

}  // namespace

SchurSpec parse_spec_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("spec file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("spec document must be an object");

    SchurData d;
    if (doc.contains("gamma")) {
        const auto& g = doc["gamma"];
        if (!g.is_array() || g.size() != 2)
            throw ParseError("gamma: expected [re, im]");
        d.gamma = Complex{number_at(g[0], "gamma[0]"), number_at(g[1], "gamma[1]")};
    }
    if (doc.contains("zeros")) {
        const auto& zs = doc["zeros"];
        if (!zs.is_array()) throw ParseError("zeros: expected a list of [re, im]");
        for (size_t i = 0; i < zs.size(); ++i) {
            const auto& z = zs[i];
            std::ostringstream ctx;
            ctx << "zeros[" << i << "]";
            if (!z.is_array() || z.size() != 2)
                throw ParseError(ctx.str() + ": expected [re, im]");
            d.zeros.emplace_back(number_at(z[0], ctx.str()),
                                 number_at(z[1], ctx.str()));
        }
    }
    if (doc.contains("zero_family")) {
        const auto& f = doc["zero_family"];
        if (!f.is_object())
            throw ParseError("zero_family: expected an object");
        ZeroFamily fam;
        if (!f.contains("modulus_exponent") || !f.contains("argument_exponent") ||
            !f.contains("count"))
            throw ParseError(
                "zero_family: needs modulus_exponent, argument_exponent, count");
        fam.modulus_exponent = number_at(f["modulus_exponent"],
                                         "zero_family.modulus_exponent");
        fam.argument_exponent = number_at(f["argument_exponent"],
                                          "zero_family.argument_exponent");
        fam.count = static_cast<int>(number_at(f["count"], "zero_family.count"));
        d.zero_family = fam;
    }
    if (doc.contains("atoms")) {
        const auto& atoms = doc["atoms"];
        if (!atoms.is_array())
            throw ParseError("atoms: expected a list of [theta, sigma]");
        for (size_t i = 0; i < atoms.size(); ++i) {
            const auto& a = atoms[i];
            std::ostringstream ctx;
            ctx << "atoms[" << i << "]";
            if (!a.is_array() || a.size() != 2)
                throw ParseError(ctx.str() + ": expected [theta, sigma]");
            const double theta = number_at(a[0], ctx.str() + ".theta");
            const double sigma = number_at(a[1], ctx.str() + ".sigma");
            if (!(sigma > 0.0))
                throw ParseError(ctx.str() + ": weight must be strictly positive");
            d.atoms.push_back({theta, sigma});
        }
    }
    if (doc.contains("outer")) {
        const auto& o = doc["outer"];
        if (!o.is_object() || !o.contains("density_id"))
            throw ParseError("outer: expected an object with density_id");
        OuterPart outer;
        outer.density = outer_density(o["density_id"].get<std::string>());
        if (o.contains("integrability_flags")) {
            const auto& flags = o["integrability_flags"];
            if (!flags.is_array())
                throw ParseError("outer.integrability_flags: expected a list");
            for (size_t i = 0; i < flags.size(); ++i) {
                const auto& fl = flags[i];
                std::ostringstream ctx;
                ctx << "outer.integrability_flags[" << i << "]";
                if (!fl.is_object() || !fl.contains("theta") ||
                    !fl.contains("max_finite_order"))
                    throw ParseError(ctx.str() +
                                     ": expected {theta, max_finite_order}");
                outer.overrides.push_back(
                    {number_at(fl["theta"], ctx.str() + ".theta"),
                     static_cast<int>(number_at(fl["max_finite_order"],
                                                ctx.str() + ".max_finite_order"))});
            }
        }
        d.outer = std::move(outer);
    }
    try {
        return SchurSpec(std::move(d));
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid spec data: ") + e.what());
    }
}

SchurSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_json(buf.str());
}

std::string spec_to_json(const SchurSpec& spec) {
    ordered_json doc;
    doc["gamma"] = {spec.gamma().real(), spec.gamma().imag()};
    if (spec.family()) {
        const auto& f = *spec.family();
        doc["zero_family"] = {{"modulus_exponent", f.modulus_exponent},
                              {"argument_exponent", f.argument_exponent},
                              {"count", f.count}};
    } else if (!spec.zeros().empty()) {
        ordered_json zs = ordered_json::array();
        for (const Complex& a : spec.zeros())
            zs.push_back({a.real(), a.imag()});
        doc["zeros"] = std::move(zs);
    }
    if (!spec.atoms().empty()) {
        ordered_json atoms = ordered_json::array();
        for (const Atom& a : spec.atoms()) atoms.push_back({a.angle, a.weight});
        doc["atoms"] = std::move(atoms);
    }
    if (spec.outer()) {
        ordered_json o;
        o["density_id"] = spec.outer()->density.id;
        if (!spec.outer()->overrides.empty()) {
            ordered_json flags = ordered_json::array();
            for (const auto& ov : spec.outer()->overrides)
                flags.push_back({{"theta", ov.angle},
                                 {"max_finite_order", ov.max_finite_order}});
            o["integrability_flags"] = std::move(flags);
        }
        doc["outer"] = std::move(o);
    }
    return doc.dump(2);
}

std::string reserialize_report(const std::string& report_json) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(report_json);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("report is not valid JSON: ") + e.what());
    }
    return doc.dump(2);
}

}  // namespace hb
