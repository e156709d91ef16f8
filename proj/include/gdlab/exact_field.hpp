#pragma once

#include "gdlab/specfun.hpp"

#include <cstddef>

namespace gdlab {

struct QuadConfig {
    double delta = 12.0;              // integrate p over [0, t + delta]
    double abs_tol = 1e-10;           // target absolute error of U
    std::size_t max_subdivisions = 400000;
    double points_per_period = 8.0;   // panels per 2 pi of phase (pi/4 each)
    double l2_halfwidth = 8.0;        // w: L2 = [t - w, t + w]
};

// Throws std::invalid_argument unless delta >= 10, abs_tol in [1e-12, 1e-4],
// delta >= l2_halfwidth > 0 and points_per_period >= 1.
void validate(const QuadConfig& cfg);

// Incident whispering gallery mode e^{-i t sigma} v(nu - t).
[[nodiscard]] cplx incident_attenuation(double sigma, double nu, double t);

struct Interval {
    double lo = 0.0, hi = 0.0;
    [[nodiscard]] bool empty() const { return !(hi > lo); }
};
struct Partition {
    Interval L1, L2, L3;
};
// L1 = [0, t - w], L2 = [t - w, t + w], L3 = [t + w, t + delta]; L1 is empty
// (and L2 starts at 0) when t <= w.
[[nodiscard]] Partition interval_partition(double t, const QuadConfig& cfg);

enum class PartialKind { I1, I2, I3, I2_plus, I2_minus };

struct PartialValue {
    cplx value{};
    double est_error = 0.0;
    bool converged = true;
};

struct AttenuationValue {
    cplx value{};
    double est_error = 0.0;
    cplx I1{}, I2{}, I3{}, I2_plus{}, I2_minus{};
    bool converged = true;
};

// U(sigma, nu) = e^{-i pi/4}/(2 sqrt(pi sigma)) int_0^{t+delta} v(p - t)
//                (e^{i(p-nu)^2/4sigma} + e^{i(p+nu)^2/4sigma}) dp
// by adaptive Gauss-Kronrod on panels over which the phase advances by at
// most 2 pi / points_per_period.  est_error includes a bound for the
// truncated tail beyond t + delta.  Throws std::domain_error for sigma <= 0,
// nu < 0 or t <= 0; non-convergence is reported through `converged`.
[[nodiscard]] AttenuationValue exact_attenuation(double sigma, double nu, double t, const QuadConfig& cfg = {});

// The same integrand restricted to one interval (and, for I2_plus/I2_minus,
// to one of the two exponentials e^{i(p +- nu)^2/4sigma}).
[[nodiscard]] PartialValue partial_integral(PartialKind which, double sigma, double nu, double t,
                                            const QuadConfig& cfg = {});

// Central-difference i U_sigma + U_nunu at (sigma, nu); the equation holds
// with zero potential for sigma > 0.
[[nodiscard]] cplx pde_residual(double sigma, double nu, double t, double step, const QuadConfig& cfg = {});

// dU/dnu at nu = 0: second-order one-sided difference (the central one is
// identically zero because the integrand is even in nu).
[[nodiscard]] cplx neumann_derivative(double sigma, double t, double step, const QuadConfig& cfg = {});

struct NormValue {
    double value = 0.0;
    double est_error = 0.0;
};
// int_0^{nu_max} |U(sigma, nu)|^2 d nu.
[[nodiscard]] NormValue field_norm(double sigma, double t, double nu_max, const QuadConfig& cfg = {});
// int_0^{nu_max} v(nu - t)^2 d nu, the same quantity at sigma = 0.
[[nodiscard]] NormValue incident_norm(double t, double nu_max);

}  // namespace gdlab
