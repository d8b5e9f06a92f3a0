#pragma once

#include <string>

#include "hb/schur.hpp"

namespace hb {

/// Spec file schema (JSON, one document per function):
///
///   {
///     "gamma": [re, im],                      // optional, default [1, 0]
///     "zeros": [[re, im], ...],               // exclusive with zero_family
///     "zero_family": {"modulus_exponent": a, "argument_exponent": b,
///                     "count": n},
///     "atoms": [[theta, sigma], ...],         // theta in radians
///     "outer": {"density_id": "log-cos-half",
///               "integrability_flags": [{"theta": t, "max_finite_order": N}]}
///   }
///
/// Parse failures throw ParseError naming the offending field.
SchurSpec parse_spec_json(const std::string& text);
SchurSpec load_spec_file(const std::string& path);
std::string spec_to_json(const SchurSpec& spec);

/// Parse + re-emit a structured report; used to check that emitted reports
/// round-trip byte for byte.
std::string reserialize_report(const std::string& report_json);

}  // namespace hb
