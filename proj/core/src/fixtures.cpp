#include "hb/fixtures.hpp"

#include "hb/errors.hpp"

namespace hb {

SchurSpec fixture(const std::string& name) {
    SchurData d;
    if (name == "single-zero") {
        d.zeros = {Complex{0.0, 0.0}};
    } else if (name == "two-zero-blaschke") {
        d.zeros = {Complex{0.0, 0.0}, Complex{0.5, 0.0}};
    } else if (name == "atom-at-1") {
        d.atoms = {{0.0, 1.0}};
    } else if (name == "tangential-family") {
        d.zero_family = ZeroFamily{4.0, 1.0, 10000, 0.0};
    } else if (name == "outer-half") {
        OuterPart outer;
        outer.density = outer_density("log-cos-half");
        d.outer = std::move(outer);
    } else {
        throw ParseError("unknown fixture '" + name + "'");
    }
    return SchurSpec(std::move(d));
}

std::vector<std::string> fixture_names() {
    return {"single-zero", "two-zero-blaschke", "atom-at-1",
            "tangential-family", "outer-half"};
}

}  // namespace hb
