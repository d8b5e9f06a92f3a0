#pragma once

#include <string>
#include <vector>

#include "hb/schur.hpp"

namespace hb {

/// Built-in example specs so the CLI and the acceptance suite need no
/// external files:
///   single-zero        b(z) = z
///   two-zero-blaschke  zeros {0, 1/2}
///   atom-at-1          unit point mass at angle 0
///   tangential-family  a_n = (1 - n^-4) e^{i/n}, 10^4 zeros
///   outer-half         b = (1+z)/2 via its boundary log-modulus
SchurSpec fixture(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace hb
