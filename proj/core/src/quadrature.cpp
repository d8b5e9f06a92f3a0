#include "hb/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hb/errors.hpp"

namespace hb::quad {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr int kGL = 15;
constexpr double kGLx[kGL] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
    -0.7244177313601701, -0.5709721726085388, -0.3941513470775634,
    -0.2011940939974345, 0.0,                 0.2011940939974345,
    0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
constexpr double kGLw[kGL] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719,
    0.1395706779261543, 0.1662692058169939, 0.1861610000155622,
    0.1984314853271116, 0.2025782419255613, 0.1984314853271116,
    0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173};

double gl_panel(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < kGL; ++i) s += kGLw[i] * f(mid + half * kGLx[i]);
    return half * s;
}

struct PanelBudget {
    int remaining;
};

double adaptive_panel(const std::function<double(double)>& f, double a,
                      double b, double whole, double rtol, double scale,
                      int depth, PanelBudget& budget) {
    if (--budget.remaining < 0)
        throw QuadratureFailure("adaptive_gl: panel budget exhausted");
    const double mid = 0.5 * (a + b);
    const double left = gl_panel(f, a, mid);
    const double right = gl_panel(f, mid, b);
    const double two = left + right;
    if (!std::isfinite(two))
        throw QuadratureFailure("adaptive_gl: non-finite integrand");
    if (std::fabs(two - whole) <= rtol * std::max(scale, std::fabs(two)) ||
        depth >= 48) {
        return two;
    }
    return adaptive_panel(f, a, mid, left, rtol, scale, depth + 1, budget) +
           adaptive_panel(f, mid, b, right, rtol, scale, depth + 1, budget);
}

}  // namespace

Complex circle_mean(const std::function<Complex(double)>& f, int nodes) {
    Complex acc = 0.0;
    for (int m = 0; m < nodes; ++m) acc += f(kTwoPi * m / nodes);
    return acc / static_cast<double>(nodes);
}

CircleMean refined_circle_mean(const std::function<Complex(double)>& f,
                               double rtol, int start, int cap,
                               double abs_floor) {
    // Values are kept so a doubling step only evaluates the new (odd) nodes.
    std::vector<Complex> vals(start);
    for (int m = 0; m < start; ++m) vals[m] = f(kTwoPi * m / start);

    auto mean = [&](const std::vector<Complex>& v) {
        Complex acc = 0.0;
        for (const Complex& x : v) acc += x;
        return acc / static_cast<double>(v.size());
    };

    Complex prev = mean(vals);
    int n = start;
    while (n < cap) {
        std::vector<Complex> next(2 * n);
        for (int m = 0; m < n; ++m) next[2 * m] = vals[m];
        for (int m = 0; m < n; ++m) next[2 * m + 1] = f(kTwoPi * (2 * m + 1) / (2.0 * n));
        vals.swap(next);
        n *= 2;
        Complex cur = mean(vals);
        double diff = std::abs(cur - prev);
        if (diff <= std::max(rtol * std::abs(cur), abs_floor))
            return {cur, n, diff};
        prev = cur;
    }
    throw QuadratureFailure("refined_circle_mean: no agreement at node cap");
}

CauchyDerivatives cauchy_derivatives(const std::function<Complex(Complex)>& f,
                                     Complex center, double rho, int max_order,
                                     double rtol, int start, int cap) {
    if (rho <= 0.0)
        throw DomainError("cauchy_derivatives: radius must be positive");

    std::vector<Complex> vals(start);
    auto eval_at = [&](int m, int n) {
        return f(center + rho * unit_point(kTwoPi * m / n));
    };
    for (int m = 0; m < start; ++m) vals[m] = eval_at(m, start);

    auto derivs = [&](const std::vector<Complex>& v) {
        const int n = static_cast<int>(v.size());
        std::vector<Complex> out(max_order + 1);
        double fact = 1.0;
        for (int j = 0; j <= max_order; ++j) {
            if (j > 0) fact *= j;
            Complex acc = 0.0;
            for (int m = 0; m < n; ++m) {
                const double t = kTwoPi * m / n;
                acc += v[m] * unit_point(-j * t);
            }
            out[j] = fact * std::pow(rho, -j) * acc / static_cast<double>(n);
        }
        return out;
    };
    auto mean_abs = [](const std::vector<Complex>& v) {
        double s = 0.0;
        for (const Complex& x : v) s += std::abs(x);
        return s / static_cast<double>(v.size());
    };

    std::vector<Complex> prev = derivs(vals);
    int n = start;
    while (n < cap) {
        std::vector<Complex> next(2 * n);
        for (int m = 0; m < n; ++m) next[2 * m] = vals[m];
        for (int m = 0; m < n; ++m) next[2 * m + 1] = eval_at(2 * m + 1, 2 * n);
        vals.swap(next);
        n *= 2;
        std::vector<Complex> cur = derivs(vals);

        // Roundoff floor: extracting the j-th Fourier mode cannot do better
        // than eps * j! * rho^{-j} * mean|f| regardless of node count.
        const double scale = mean_abs(vals);
        bool ok = true;
        std::vector<double> errs(max_order + 1);
        double fact = 1.0;
        for (int j = 0; j <= max_order; ++j) {
            if (j > 0) fact *= j;
            const double floor = 16.0 * kEps * fact * std::pow(rho, -j) * scale;
            const double diff = std::abs(cur[j] - prev[j]);
            errs[j] = std::max(diff, floor);
            if (diff > std::max(rtol * std::abs(cur[j]), floor)) ok = false;
        }
        if (ok) return {cur, errs, n};
        prev = std::move(cur);
    }
    throw QuadratureFailure("cauchy_derivatives: no agreement at node cap");
}

double adaptive_gl(const std::function<double(double)>& f, double a, double b,
                   double rtol, const std::vector<double>& breakpoints,
                   int max_panels) {
    if (!(a < b)) return 0.0;
    std::vector<double> edges{a};
    for (double x : breakpoints)
        if (x > a && x < b) edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    // First pass fixes the scale so relative tolerance is meaningful on
    // panels whose contribution nearly cancels.
    double scale = 0.0;
    std::vector<double> coarse(edges.size() - 1);
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        coarse[i] = gl_panel(f, edges[i], edges[i + 1]);
        scale += std::fabs(coarse[i]);
    }
    scale = std::max(scale, 1e-300);

    PanelBudget budget{max_panels};
    double total = 0.0;
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        total += adaptive_panel(f, edges[i], edges[i + 1], coarse[i], rtol,
                                scale, 0, budget);
    return total;
}

std::vector<double> geometric_mesh(double a, double b,
                                   const std::vector<double>& targets,
                                   double min_width) {
    std::set<double> edges{a, b};
    for (double t : targets) {
        // Targets outside [a, b] still shape the mesh: edges cluster toward
        // the nearer endpoint at the scale of the distance to the target.
        const double reach = std::max(std::fabs(t - a), std::fabs(b - t));
        for (double w = reach; w > min_width; w *= 0.5) {
            if (t - w > a && t - w < b) edges.insert(t - w);
            if (t + w > a && t + w < b) edges.insert(t + w);
        }
    }
    return {edges.begin(), edges.end()};
}

std::vector<double> circle_targets(const std::vector<double>& angles) {
    std::vector<double> out;
    out.reserve(3 * angles.size());
    for (double t : angles) {
        const double w = wrap_angle(t);
        out.push_back(w);
        out.push_back(w + kTwoPi);
        out.push_back(w - kTwoPi);
    }
    return out;
}

double composite_gl(const std::function<double(double)>& f,
                    const std::vector<double>& mesh) {
    double total = 0.0;
    for (size_t i = 0; i + 1 < mesh.size(); ++i)
        total += gl_panel(f, mesh[i], mesh[i + 1]);
    if (!std::isfinite(total))
        throw QuadratureFailure("composite_gl: non-finite integrand");
    return total;
}

}  // namespace hb::quad
