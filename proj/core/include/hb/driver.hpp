#pragma once

#include <optional>
#include <string>

#include "hb/schur.hpp"

namespace hb {

/// One CLI invocation: which analysis to run on which spec, with parameters.
/// Angles arrive in units of pi (0.5 means e^{i pi/2}) so common fixtures
/// stay exact in text form.
struct RunConfig {
    std::string command;  // describe|criterion|probe|model|arc|transfer|bernstein|verify-all
    std::optional<std::string> fixture;
    std::optional<std::string> spec_path;
    double zeta_over_pi = 0.0;
    int order = 0;
    double arc_start_over_pi = -0.25;
    double arc_end_over_pi = 0.25;
    int grid_k_max = 6;
    enum class Format { Text, Json } format = Format::Text;
};

struct RunResult {
    int exit_code = 0;  // 0 ok, 1 input error, 2 consistency violation
    std::string output;
};

/// Execute a command; never throws. Input problems surface as exit code 1
/// with the diagnostic in the output stream, decidable-channel disagreement
/// as exit code 2.
RunResult run(const RunConfig& config);

}  // namespace hb
