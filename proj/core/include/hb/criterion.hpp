#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hb/kernels.hpp"
#include "hb/model_space.hpp"
#include "hb/schur.hpp"

namespace hb {

struct TermReport {
    Verdict3 verdict = Verdict3::Inconclusive;
    double value = 0.0;  ///< meaningful when verdict == Finite
    std::string evidence;
    std::vector<double> partial_sums;  ///< trace for generated zero families
};

/// The three-term criterion sum at a boundary point: Blaschke-zero sum,
/// atomic-measure sum, and outer log-modulus integral, each against the
/// kernel |zeta0 - .|^{-(2N+2)}, with a combined verdict.
struct CriterionReport {
    double zeta0_angle = 0.0;
    int order = 0;
    TermReport blaschke;
    TermReport atomic;
    TermReport outer;
    Verdict3 total = Verdict3::Inconclusive;
    double total_value = 0.0;
    std::string evidence;
};

CriterionReport criterion(const SchurSpec& spec, double zeta0_angle, int order);

/// Bundle of the decidable channels at one boundary point: the criterion
/// sum, the radial kernel-norm probe, and (finite Blaschke only) the
/// resolvent range test. Throws ConsistencyViolation when two decidable
/// channels disagree.
struct BoundaryClassification {
    CriterionReport criterion;
    ProbeReport probe;
    std::optional<RangeTestResult> range;
    bool consistent = true;
    std::string summary;
};

BoundaryClassification classify_boundary_point(const SchurSpec& spec,
                                               double zeta0_angle, int order);

}  // namespace hb
