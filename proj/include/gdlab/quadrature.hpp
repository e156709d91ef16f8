#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <vector>

namespace gdlab::quad {

struct Options {
    double abs_tol = 1e-10;
    std::size_t max_subdivisions = 200000;
};

struct Result {
    std::complex<double> value{};
    double abs_error = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK constants).
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    std::complex<double> value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const std::complex<double> fc = f(c);
    std::complex<double> rk = fc * wgk[7];
    std::complex<double> rg = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const std::complex<double> s = f(c - dx) + f(c + dx);
        rk += wgk[j] * s;
        if (j % 2 == 1) rg += wg[j / 2] * s;
    }
    return {a, b, rk * h, std::abs((rk - rg) * h)};
}

}  // namespace detail

// Adaptive Gauss-Kronrod (G7-K15) over the panels [breaks[i], breaks[i+1]].
// The panel with the largest |K15 - G7| estimate is bisected until the summed
// estimate drops below abs_tol or the subdivision budget runs out; in the
// latter case converged = false and abs_error reports the honest estimate.
template <class F>
Result integrate(F&& f, const std::vector<double>& breaks, const Options& opt = {}) {
    Result out;
    if (breaks.size() < 2) return out;
    std::priority_queue<detail::Panel> heap;
    double err = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (!(breaks[i + 1] > breaks[i])) continue;
        auto p = detail::gk15(f, breaks[i], breaks[i + 1]);
        err += p.error;
        heap.push(p);
        out.evaluations += 15;
    }
    std::size_t splits = 0;
    while (err > opt.abs_tol && !heap.empty()) {
        if (splits >= opt.max_subdivisions) {
            out.converged = false;
            break;
        }
        auto worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Cannot bisect further in double precision.
            out.converged = false;
            break;
        }
        heap.pop();
        auto l = detail::gk15(f, worst.a, mid);
        auto r = detail::gk15(f, mid, worst.b);
        out.evaluations += 30;
        err += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
        ++splits;
    }
    // Resum from scratch so the reported totals carry no running-sum drift.
    // Summation order is fixed by the heap contents, hence deterministic.
    std::vector<detail::Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const detail::Panel& x, const detail::Panel& y) { return x.a < y.a; });
    out.abs_error = 0.0;
    for (const auto& p : panels) {
        out.value += p.value;
        out.abs_error += p.error;
    }
    if (out.abs_error > opt.abs_tol) out.converged = false;
    return out;
}

// Breakpoints on [a, b] such that the phase, whose local rate is bounded by
// rate(x), advances by at most dphi per panel; panels never exceed hmax.
template <class R>
std::vector<double> panelize(double a, double b, R&& rate, double dphi, double hmax) {
    std::vector<double> br{a};
    if (!(b > a)) return br;
    double x = a;
    while (x < b) {
        double h = std::min(hmax, dphi / std::max(std::abs(rate(x)), 1e-300));
        const double r2 = std::abs(rate(std::min(x + h, b)));
        if (r2 * h > dphi) h = dphi / r2;
        x = (b - x <= 1.0001 * h) ? b : x + h;
        br.push_back(x);
    }
    return br;
}

}  // namespace gdlab::quad
