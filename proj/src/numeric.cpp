#include "archcop/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>

namespace archcop {

namespace {

// Kronrod abscissae (positive half, descending) and weights; the odd-index
// nodes are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[static_cast<std::size_t>(j)];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[static_cast<std::size_t>(j)] * sum;
        if (j % 2 == 1) gauss += kWg[static_cast<std::size_t>(j / 2)] * sum;
    }
    return Segment{a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult adaptive_quad(const std::function<double(double)>& f, double a, double b,
                               double abs_tol, std::size_t max_evaluations) {
    if (!(a < b)) throw DomainError("adaptive_quad requires a < b");
    if (!(abs_tol > 0.0)) throw DomainError("adaptive_quad requires abs_tol > 0");

    constexpr std::size_t kPerSegment = 15;
    std::priority_queue<Segment> heap;
    heap.push(gk15(f, a, b));
    std::size_t evaluations = kPerSegment;
    double total_error = heap.top().error;

    while (total_error > abs_tol && evaluations + 2 * kPerSegment <= max_evaluations) {
        const Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) break;  // cannot refine further
        heap.pop();
        const Segment left = gk15(f, worst.a, mid);
        const Segment right = gk15(f, mid, worst.b);
        evaluations += 2 * kPerSegment;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Sum in interval order so the result does not depend on heap layout.
    std::vector<Segment> segments;
    segments.reserve(heap.size());
    while (!heap.empty()) {
        segments.push_back(heap.top());
        heap.pop();
    }
    std::sort(segments.begin(), segments.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    QuadratureResult result;
    for (const auto& s : segments) {
        result.value += s.value;
        result.abs_error_estimate += s.error;
    }
    result.evaluations = evaluations;
    result.converged = std::isfinite(result.value) && result.abs_error_estimate <= abs_tol;
    return result;
}

RootResult bisect_monotone(const std::function<double(double)>& g, double target, double lo,
                           double hi, double abs_tol) {
    if (!(lo < hi)) throw BracketError("bisect_monotone requires lo < hi");
    if (!(abs_tol > 0.0)) throw BracketError("bisect_monotone requires abs_tol > 0");
    if (!(g(lo) <= target && target <= g(hi))) {
        throw BracketError("target is not bracketed by g(lo), g(hi)");
    }
    RootResult r;
    for (int it = 1; it <= kMaxBisectionIterations; ++it) {
        const double mid = lo + 0.5 * (hi - lo);
        const double residual = g(mid) - target;
        r = RootResult{mid, residual, it, false};
        if (std::abs(residual) <= abs_tol) {
            r.converged = true;
            return r;
        }
        if (residual < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= abs_tol) {
            r.converged = true;
            return r;
        }
    }
    return r;
}

double central_mixed_second(const std::function<double(double, double)>& f, double u,
                            double v, double h) {
    if (!(h > 0.0) || !(u - h > 0.0 && u + h < 1.0 && v - h > 0.0 && v + h < 1.0)) {
        throw DomainError("finite-difference stencil leaves the open unit square");
    }
    const double num = f(u + h, v + h) - f(u + h, v - h) - f(u - h, v + h) + f(u - h, v - h);
    return num / (4.0 * h * h);
}

GaussLegendreRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw DomainError("gauss_legendre requires n >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const double half = 0.5 * (b - a);
    const double center = 0.5 * (a + b);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton on P_n starting from the Chebyshev-like guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo_idx = static_cast<std::size_t>(i);
        const auto hi_idx = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo_idx] = center - half * x;
        rule.nodes[hi_idx] = center + half * x;
        rule.weights[lo_idx] = half * w;
        rule.weights[hi_idx] = half * w;
    }
    return rule;
}

}  // namespace archcop
