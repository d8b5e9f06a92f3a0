#include "hb/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hb/errors.hpp"
#include "hb/quadrature.hpp"

namespace hb {

namespace {

constexpr double kDivergenceThreshold = 1e6;
constexpr double kNonVanishingTail = 1e-4;

TermReport blaschke_term(const SchurSpec& spec, Complex zeta0,
                         double zeta0_angle, int order) {
    TermReport rep;
    const int p2 = 2 * order + 2;
    const auto& zeros = spec.zeros();

    double sum = 0.0;
    double tail_acc = 0.0;
    size_t tail_count = 0;
    const size_t n = zeros.size();
    const size_t tail_start = n - std::min<size_t>(n, std::max<size_t>(n / 10, 1));
    size_t next_checkpoint = 8;
    bool threshold_hit = false;

    for (size_t i = 0; i < n; ++i) {
        const double term = (1.0 - std::norm(zeros[i])) /
                            std::pow(std::abs(zeta0 - zeros[i]), p2);
        sum += term;
        if (i >= tail_start) {
            tail_acc += term;
            ++tail_count;
        }
        if (spec.family() && (i + 1 == next_checkpoint || i + 1 == n)) {
            rep.partial_sums.push_back(sum);
            next_checkpoint *= 8;
        }
        if (sum > kDivergenceThreshold) {
            threshold_hit = true;
            break;
        }
    }

    if (!spec.family()) {
        rep.verdict = Verdict3::Finite;
        rep.value = sum;
        std::ostringstream os;
        os << "exact sum over " << n << " zeros";
        rep.evidence = os.str();
        return rep;
    }

    const auto& fam = *spec.family();
    if (threshold_hit) {
        rep.verdict = Verdict3::Diverges;
        std::ostringstream os;
        os << "partial sums exceed " << kDivergenceThreshold;
        rep.evidence = os.str();
        return rep;
    }
    const double tail_mean = tail_count ? tail_acc / tail_count : 0.0;
    if (tail_mean > kNonVanishingTail) {
        rep.verdict = Verdict3::Diverges;
        std::ostringstream os;
        os << "terms do not vanish (tail mean " << tail_mean << " over last "
           << tail_count << " terms)";
        rep.evidence = os.str();
        return rep;
    }

    // Declared comparison: at the accumulation point the terms decay like
    // n^{-p}; elsewhere the distance to zeta0 stays bounded below and the
    // Blaschke condition itself dominates.
    const bool at_accumulation = same_angle(zeta0_angle, fam.accumulation_angle);
    const double p = at_accumulation ? fam.tail_exponent_at_accumulation(order)
                                     : fam.modulus_exponent;
    std::ostringstream os;
    os << "truncated at " << fam.count << " zeros; declared comparison sum n^-"
       << p << (at_accumulation ? " (at accumulation point)" : "");
    if (p > 1.0) {
        rep.verdict = Verdict3::Finite;
        rep.value = sum;
    } else {
        rep.verdict = Verdict3::Inconclusive;
        os << "; comparison not convergent while terms vanish numerically";
    }
    rep.evidence = os.str();
    return rep;
}

TermReport atomic_term(const SchurSpec& spec, Complex zeta0,
                       double zeta0_angle, int order) {
    TermReport rep;
    const int p2 = 2 * order + 2;
    double sum = 0.0;
    for (const Atom& atom : spec.atoms()) {
        if (same_angle(atom.angle, zeta0_angle)) {
            rep.verdict = Verdict3::Diverges;
            std::ostringstream os;
            os << "atom at zeta0 (angle " << atom.angle << ", weight "
               << atom.weight << ")";
            rep.evidence = os.str();
            return rep;
        }
        sum += atom.weight /
               std::pow(std::abs(zeta0 - unit_point(atom.angle)), p2);
    }
    rep.verdict = Verdict3::Finite;
    rep.value = sum;
    rep.evidence = spec.atoms().empty() ? "no atoms" : "exact finite sum";
    return rep;
}

TermReport outer_term(const SchurSpec& spec, Complex zeta0,
                      double zeta0_angle, int order) {
    TermReport rep;
    if (!spec.outer()) {
        rep.verdict = Verdict3::Finite;
        rep.value = 0.0;
        rep.evidence = "no outer part";
        return rep;
    }
    const auto& outer = *spec.outer();
    const Verdict3 flag = outer.criterion_flag(zeta0_angle, order);
    if (flag == Verdict3::Diverges) {
        rep.verdict = Verdict3::Diverges;
        rep.evidence = "analytic flag: kernel not integrable against |log|b|| at zeta0";
        return rep;
    }
    if (flag == Verdict3::Inconclusive) {
        rep.verdict = Verdict3::Inconclusive;
        rep.evidence = "no integrability flag for this density at zeta0";
        return rep;
    }

    const int p2 = 2 * order + 2;
    auto integrand = [&](double t) {
        return std::fabs(outer.density.log_modulus(t)) /
               std::pow(std::abs(zeta0 - unit_point(t)), p2);
    };
    // Geometric refinement toward zeta0 plus the density's own marked angles.
    std::vector<double> targets{wrap_angle(zeta0_angle)};
    for (double s : outer.density.singular_angles) targets.push_back(s);
    for (double s : outer.density.zero_angles) targets.push_back(s);
    const auto mesh =
        quad::geometric_mesh(0.0, kTwoPi, quad::circle_targets(targets), 1e-13);
    std::vector<double> breakpoints(mesh.begin() + 1, mesh.end() - 1);
    rep.value = quad::adaptive_gl(integrand, 0.0, kTwoPi, 1e-8, breakpoints) / kTwoPi;
    rep.verdict = Verdict3::Finite;
    rep.evidence = "flagged integrable; adaptive quadrature value";
    return rep;
}

}  // namespace

CriterionReport criterion(const SchurSpec& spec, double zeta0_angle,
                          int order) {
    if (order < 0) throw DomainError("criterion: order must be >= 0");
    CriterionReport rep;
    rep.order = order;

    // Snap to the nearest atom angle so "atom at zeta0" is well defined.
    double angle = wrap_angle(zeta0_angle);
    for (const Atom& atom : spec.atoms())
        if (same_angle(atom.angle, angle)) angle = atom.angle;
    rep.zeta0_angle = angle;
    const Complex zeta0 = unit_point(angle);

    rep.blaschke = blaschke_term(spec, zeta0, angle, order);
    rep.atomic = atomic_term(spec, zeta0, angle, order);
    rep.outer = outer_term(spec, zeta0, angle, order);

    const Verdict3 verdicts[3] = {rep.blaschke.verdict, rep.atomic.verdict,
                                  rep.outer.verdict};
    const std::string names[3] = {"blaschke", "atomic", "outer"};
    std::ostringstream ev;
    rep.total = Verdict3::Finite;
    for (int i = 0; i < 3; ++i) {
        if (verdicts[i] == Verdict3::Diverges) {
            rep.total = Verdict3::Diverges;
            ev << names[i] << " term diverges; ";
        }
    }
    if (rep.total != Verdict3::Diverges) {
        for (int i = 0; i < 3; ++i) {
            if (verdicts[i] == Verdict3::Inconclusive) {
                rep.total = Verdict3::Inconclusive;
                ev << names[i] << " term inconclusive; ";
            }
        }
    }
    if (rep.total == Verdict3::Finite) {
        rep.total_value =
            rep.blaschke.value + rep.atomic.value + rep.outer.value;
        ev << "all terms finite";
    }
    rep.evidence = ev.str();
    return rep;
}

BoundaryClassification classify_boundary_point(const SchurSpec& spec,
                                               double zeta0_angle, int order) {
    BoundaryClassification out;
    out.criterion = criterion(spec, zeta0_angle, order);

    const SchurSpec rotated = normalize_boundary_point(spec, zeta0_angle);
    out.probe = radial_norm_probe(rotated, order);

    if (spec.is_finite_blaschke()) {
        const ModelSpaceRep rep = ModelSpaceRep::build(spec);
        out.range = range_test(rep, unit_point(zeta0_angle), order);
    }

    // +1 / -1 / 0 per channel; decidable channels must agree in sign.
    auto crit_sign = [&] {
        if (out.criterion.total == Verdict3::Finite) return +1;
        if (out.criterion.total == Verdict3::Diverges) return -1;
        return 0;
    }();
    auto probe_sign = [&] {
        if (out.probe.verdict == GrowthVerdict::Bounded) return +1;
        if (out.probe.verdict == GrowthVerdict::Divergent) return -1;
        return 0;
    }();
    const int range_sign = out.range ? (out.range->in_range ? +1 : -1) : 0;

    std::ostringstream os;
    os << "criterion " << to_string(out.criterion.total) << ", probe "
       << to_string(out.probe.verdict);
    if (out.range)
        os << ", range test " << (out.range->in_range ? "in range" : "not in range");
    out.summary = os.str();

    const int signs[3] = {crit_sign, probe_sign, range_sign};
    bool pos = false, neg = false;
    for (int s : signs) {
        if (s > 0) pos = true;
        if (s < 0) neg = true;
    }
    if (pos && neg) {
        out.consistent = false;
        throw ConsistencyViolation("boundary point channels disagree: " +
                                   out.summary);
    }
    return out;
}

}  // namespace hb
