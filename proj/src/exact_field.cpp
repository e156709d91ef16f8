#include "gdlab/exact_field.hpp"

#include "gdlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gdlab {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

cplx prefactor(double sigma) { return std::polar(1.0, -kPi / 4) / (2.0 * std::sqrt(kPi * sigma)); }

// Which exponentials enter: -1 -> e^{i(p-nu)^2/4s}, +1 -> e^{i(p+nu)^2/4s}, 0 -> both.
PartialValue integrate_range(double lo, double hi, int which, double sigma, double nu, double t, double tol,
                             const QuadConfig& cfg) {
    PartialValue out;
    if (!(hi > lo)) return out;
    const double inv = 1.0 / (4.0 * sigma);
    auto f = [&](double p) {
        const double v = airy_v(p - t).v;
        cplx e = 0.0;
        if (which <= 0) e += std::exp(kI * ((p - nu) * (p - nu) * inv));
        if (which >= 0) e += std::exp(kI * ((p + nu) * (p + nu) * inv));
        return v * e;
    };
    auto rate = [&](double p) {
        double r = 0.0;
        if (which <= 0) r = std::max(r, std::fabs(p - nu));
        if (which >= 0) r = std::max(r, std::fabs(p + nu));
        return r * 2.0 * inv + std::sqrt(std::max(t - p, 0.0)) + 1.0;
    };
    const auto br = quad::panelize(lo, hi, rate, 2.0 * kPi / cfg.points_per_period, 0.5);
    const cplx pre = prefactor(sigma);
    // Rounding floor: the phase (p + nu)^2/4 sigma is carried with absolute
    // error ~ eps * phase, which bounds the attainable accuracy at small sigma.
    const double phase_max = (hi + nu) * (hi + nu) * inv;
    const double floor = 4.0 * std::abs(pre) * (hi - lo) * std::numeric_limits<double>::epsilon() * phase_max;
    tol = std::max(tol, floor);
    quad::Options opt;
    opt.abs_tol = tol / std::abs(pre);
    opt.max_subdivisions = cfg.max_subdivisions;
    const auto res = quad::integrate(f, br, opt);
    out.value = pre * res.value;
    out.est_error = std::abs(pre) * res.abs_error;
    out.converged = res.converged;
    return out;
}

void check_args(double sigma, double nu, double t) {
    if (!(sigma > 0.0)) throw std::domain_error("exact_attenuation: sigma must be > 0");
    if (!(nu >= 0.0)) throw std::domain_error("exact_attenuation: nu must be >= 0");
    if (!(t > 0.0)) throw std::domain_error("exact_attenuation: t must be > 0");
}

// Bound on |pre| * 2 int_{t+delta}^inf v(p - t) dp using v(z) <= z^{-1/4} e^{-2/3 z^{3/2}}/2
// and int_D^inf e^{-2/3 z^{3/2}} dz <= e^{-2/3 D^{3/2}} / sqrt(D).
double tail_bound(double sigma, double delta) {
    return std::abs(prefactor(sigma)) * 2.0 * 1.1 * airy_v(delta).v / std::sqrt(delta);
}

}  // namespace

void validate(const QuadConfig& cfg) {
    if (!(cfg.delta >= 10.0)) throw std::invalid_argument("QuadConfig: truncation margin delta must be >= 10");
    if (!(cfg.abs_tol >= 1e-12 && cfg.abs_tol <= 1e-4))
        throw std::invalid_argument("QuadConfig: tolerance must lie in [1e-12, 1e-4]");
    if (!(cfg.l2_halfwidth > 0.0 && cfg.l2_halfwidth <= cfg.delta))
        throw std::invalid_argument("QuadConfig: need 0 < w <= delta");
    if (!(cfg.points_per_period >= 1.0)) throw std::invalid_argument("QuadConfig: points_per_period must be >= 1");
    if (cfg.max_subdivisions < 1) throw std::invalid_argument("QuadConfig: max_subdivisions must be >= 1");
}

cplx incident_attenuation(double sigma, double nu, double t) {
    return std::polar(1.0, -t * sigma) * airy_v(nu - t).v;
}

Partition interval_partition(double t, const QuadConfig& cfg) {
    const double w = cfg.l2_halfwidth;
    Partition P;
    const double a = std::max(0.0, t - w);
    P.L1 = {0.0, a};
    P.L2 = {a, t + w};
    P.L3 = {t + w, t + cfg.delta};
    return P;
}

PartialValue partial_integral(PartialKind which, double sigma, double nu, double t, const QuadConfig& cfg) {
    check_args(sigma, nu, t);
    validate(cfg);
    const auto P = interval_partition(t, cfg);
    switch (which) {
        case PartialKind::I1: return integrate_range(P.L1.lo, P.L1.hi, 0, sigma, nu, t, cfg.abs_tol, cfg);
        case PartialKind::I3: return integrate_range(P.L3.lo, P.L3.hi, 0, sigma, nu, t, cfg.abs_tol, cfg);
        case PartialKind::I2_plus: return integrate_range(P.L2.lo, P.L2.hi, +1, sigma, nu, t, cfg.abs_tol, cfg);
        case PartialKind::I2_minus: return integrate_range(P.L2.lo, P.L2.hi, -1, sigma, nu, t, cfg.abs_tol, cfg);
        case PartialKind::I2: {
            const auto a = integrate_range(P.L2.lo, P.L2.hi, +1, sigma, nu, t, cfg.abs_tol / 2, cfg);
            const auto b = integrate_range(P.L2.lo, P.L2.hi, -1, sigma, nu, t, cfg.abs_tol / 2, cfg);
            return {a.value + b.value, a.est_error + b.est_error, a.converged && b.converged};
        }
    }
    return {};
}

AttenuationValue exact_attenuation(double sigma, double nu, double t, const QuadConfig& cfg) {
    check_args(sigma, nu, t);
    validate(cfg);
    const auto P = interval_partition(t, cfg);
    const double tol = cfg.abs_tol / 4.0;
    const auto i1 = integrate_range(P.L1.lo, P.L1.hi, 0, sigma, nu, t, tol, cfg);
    const auto ip = integrate_range(P.L2.lo, P.L2.hi, +1, sigma, nu, t, tol, cfg);
    const auto im = integrate_range(P.L2.lo, P.L2.hi, -1, sigma, nu, t, tol, cfg);
    const auto i3 = integrate_range(P.L3.lo, P.L3.hi, 0, sigma, nu, t, tol, cfg);
    AttenuationValue out;
    out.I1 = i1.value;
    out.I2_plus = ip.value;
    out.I2_minus = im.value;
    out.I2 = ip.value + im.value;
    out.I3 = i3.value;
    out.value = out.I1 + out.I2 + out.I3;
    out.est_error = i1.est_error + ip.est_error + im.est_error + i3.est_error + tail_bound(sigma, cfg.delta);
    out.converged = i1.converged && ip.converged && im.converged && i3.converged;
    return out;
}

cplx pde_residual(double sigma, double nu, double t, double step, const QuadConfig& cfg) {
    if (!(sigma > step) || !(nu > step) || !(step > 0.0))
        throw std::domain_error("pde_residual: need sigma > step > 0 and nu > step");
    auto U = [&](double s, double n) { return exact_attenuation(s, n, t, cfg).value; };
    const cplx u0 = U(sigma, nu);
    const cplx us = (U(sigma + step, nu) - U(sigma - step, nu)) / (2.0 * step);
    const cplx unn = (U(sigma, nu + step) - 2.0 * u0 + U(sigma, nu - step)) / (step * step);
    return kI * us + unn;
}

cplx neumann_derivative(double sigma, double t, double step, const QuadConfig& cfg) {
    if (!(step > 0.0)) throw std::domain_error("neumann_derivative: step must be > 0");
    auto U = [&](double n) { return exact_attenuation(sigma, n, t, cfg).value; };
    return (-3.0 * U(0.0) + 4.0 * U(step) - U(2.0 * step)) / (2.0 * step);
}

NormValue field_norm(double sigma, double t, double nu_max, const QuadConfig& cfg) {
    auto f = [&](double n) {
        const cplx u = exact_attenuation(sigma, n, t, cfg).value;
        return cplx(std::norm(u), 0.0);
    };
    // U oscillates in nu with local wavenumber at most ~ sqrt(t) + nu/(2 sigma).
    auto rate = [&](double n) { return std::sqrt(t) + n / (2.0 * sigma) + 1.0; };
    quad::Options opt;
    opt.abs_tol = 1e-8;
    const auto br = quad::panelize(0.0, nu_max, rate, kPi / 2, 1.0);
    const auto r = quad::integrate(f, br, opt);
    return {r.value.real(), r.abs_error};
}

NormValue incident_norm(double t, double nu_max) {
    auto f = [&](double n) {
        const double v = airy_v(n - t).v;
        return cplx(v * v, 0.0);
    };
    auto rate = [&](double n) { return std::sqrt(std::max(t - n, 0.0)) + 1.0; };
    quad::Options opt;
    opt.abs_tol = 1e-13;
    const auto r = quad::integrate(f, quad::panelize(0.0, nu_max, rate, kPi / 4, 0.5), opt);
    return {r.value.real(), r.abs_error};
}

}  // namespace gdlab
