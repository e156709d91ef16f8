#include "gdlab/quadrature.hpp"
#include "gdlab/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gdlab {
namespace {

constexpr double kDphi = std::numbers::pi / 4;

cplx kernel(double eta, cplx q) { return std::exp(cplx(0.0, 1.0) * (eta * q - q * q * q / 3.0)); }

// d * int_0^R kernel(start + r d) dr along a ray on which the integrand decays
// at least like exp(-(q0^2 - eta) r / 2 - r^3 / 3).
cplx ray_integral(double eta, double start, cplx d, const quad::Options& opt) {
    const double decay = std::max(start * start - eta, 1.0);
    const double R = std::min(6.0, 100.0 / decay);
    auto f = [&](double r) { return kernel(eta, start + r * d); };
    auto rate = [&](double r) {
        const cplx q = start + r * d;
        return std::abs(eta - q * q) + 1.0;
    };
    const auto br = quad::panelize(0.0, R, rate, kDphi, 0.5);
    return d * quad::integrate(f, br, opt).value;
}

}  // namespace

cplx incomplete_airy(double eta, double xi) {
    if (!std::isfinite(eta) || !std::isfinite(xi)) throw std::domain_error("incomplete_airy: non-finite argument");
    quad::Options opt;
    opt.abs_tol = 1e-12;
    const double c = std::sqrt(std::fabs(eta)) + 5.0;
    if (xi >= -c) {
        // All stationary points q = +-sqrt(eta) lie on the real segment.
        const double xi0 = std::max(xi, c);
        cplx seg = 0.0;
        if (xi0 > xi) {
            auto f = [&](double q) { return kernel(eta, cplx(q, 0.0)); };
            auto rate = [&](double q) { return std::fabs(eta - q * q) + 1.0; };
            seg = quad::integrate(f, quad::panelize(xi, xi0, rate, kDphi, 0.5), opt).value;
        }
        return seg + ray_integral(eta, xi0, std::polar(1.0, -std::numbers::pi / 6), opt);
    }
    // Far left: complete integral minus the left tail, the latter moved onto
    // the ray arg(q - xi) = 7pi/6 (integrated outward, hence the sign).
    const cplx d = std::polar(1.0, 7.0 * std::numbers::pi / 6);
    return complete_airy_integral(eta) + ray_integral(eta, xi, d, opt);
}

}  // namespace gdlab
