#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gdlab/exact_field.hpp"

#include <cmath>
#include <stdexcept>

using namespace gdlab;

namespace {

const double t20 = vprime_zero(20);

}  // namespace

TEST_CASE("exact attenuation factor matches frozen values") {
    struct Ref {
        double sigma, nu;
        cplx value;
    };
    const Ref refs[] = {
        {2.0, t20 + 4.0, {-0.5577998968800513, 0.2869151268382262}},
        {1.0, t20, {0.7459563026605259, -0.5870187248770764}},
        {12.0, 44.0, {-0.014129620170017523, -0.2515133423934808}},
    };
    for (const auto& r : refs) {
        CAPTURE(r.sigma);
        CAPTURE(r.nu);
        const auto u = exact_attenuation(r.sigma, r.nu, t20);
        CHECK(u.converged);
        CHECK(std::abs(u.value - r.value) <= 1e-8);
        CHECK(u.est_error <= 1e-8);
    }
}

TEST_CASE("partials sum to the total") {
    const auto u = exact_attenuation(3.0, 30.0, t20);
    CHECK(std::abs(u.I1 + u.I2 + u.I3 - u.value) <= 1e-10);
    CHECK(std::abs(u.I2_plus + u.I2_minus - u.I2) <= 1e-10);
    const auto i2m = partial_integral(PartialKind::I2_minus, 3.0, 30.0, t20);
    CHECK(std::abs(i2m.value - u.I2_minus) <= 1e-9);
}

TEST_CASE("interval partition") {
    QuadConfig q;
    const auto part = interval_partition(t20, q);
    CHECK(part.L1.lo == 0.0);
    CHECK(part.L1.hi == doctest::Approx(t20 - q.l2_halfwidth));
    CHECK(part.L2.hi == doctest::Approx(t20 + q.l2_halfwidth));
    CHECK(part.L3.hi == doctest::Approx(t20 + q.delta));
    const auto small = interval_partition(5.0, q);
    CHECK(small.L1.empty());
    CHECK(small.L2.lo == 0.0);
}

TEST_CASE("Neumann condition, PDE and norm") {
    CHECK(std::abs(neumann_derivative(2.0, t20, 1e-3)) <= 1e-6);
    const auto u = exact_attenuation(1.0, t20, t20);
    CHECK(std::abs(pde_residual(1.0, t20, t20, 0.005)) <= 1e-3 * std::abs(u.value));
    const double t5 = vprime_zero(5);
    const auto n0 = incident_norm(t5, t5 + 20.0);
    const auto n1 = field_norm(1.0, t5, t5 + 20.0);
    CHECK(n1.value == doctest::Approx(n0.value).epsilon(1e-6));
    // int v^2 = z v^2 - v'^2, and v'(-t) = 0
    const double vt = airy_v(-t20).v;
    CHECK(incident_norm(t20, t20 + 20.0).value == doctest::Approx(t20 * vt * vt).epsilon(1e-10));
}

TEST_CASE("configuration and domain errors") {
    QuadConfig bad;
    bad.delta = 5.0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = {};
    bad.abs_tol = 1e-3;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    CHECK_THROWS_AS((void)exact_attenuation(0.0, 1.0, t20), std::domain_error);
    CHECK_THROWS_AS((void)exact_attenuation(1.0, -1.0, t20), std::domain_error);
}
