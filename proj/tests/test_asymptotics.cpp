#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gdlab/asymptotics.hpp"

#include <algorithm>
#include <cmath>

using namespace gdlab;

namespace {

const ProblemParams P = make_params_m(4000.0, 1.0, 20);
const double t = P.t, st = std::sqrt(P.t);

}  // namespace

TEST_CASE("critical points of the phases are the axis ordinates") {
    for (double sg : {1.0, 3.0, 6.0, 10.0}) {
        for (double nu : {4.0, 15.0, 30.0, 45.0}) {
            const auto o = axis_ordinates(field_point_stretched(P, sg, nu), t);
            std::vector<double> ps{o.p3};
            if (o.p1) ps.push_back(*o.p1);
            if (o.p2) ps.push_back(*o.p2);
            for (double p : ps) {
                if (p <= 0.0 || p >= t) continue;
                double best = INFINITY;
                for (int a : {-1, 1})
                    for (int b : {-1, 1})
                        best = std::min(best, std::fabs(phase_f_prime(a, b, p, sg, nu, t)));
                CAPTURE(sg);
                CAPTURE(nu);
                CHECK(best <= 1e-8);
            }
        }
    }
}

TEST_CASE("phase derivative matches finite differences") {
    constexpr double h = 1e-6;
    for (int a : {-1, 1}) {
        for (int b : {-1, 1}) {
            const double p = 7.0, sg = 2.5, nu = 18.0;
            const double fd = (phase_f(a, b, p + h, sg, nu, t) - phase_f(a, b, p - h, sg, nu, t)) / (2.0 * h);
            CHECK(phase_f_prime(a, b, p, sg, nu, t) == doctest::Approx(fd).epsilon(1e-7));
        }
    }
}

TEST_CASE("end-point contributions combine into the closed forms") {
    for (double sg : {2.0, 5.0}) {
        for (double eps : {-1.5, 0.7, 3.0}) {
            const double nu = 2.0 * sg * (st - eps);
            if (nu < 0.0) continue;
            const auto e = endpoint_contributions(sg, nu, t);
            CHECK(std::abs(e.pm.value + e.mp.value - e.pmmp0) <= 1e-12 * (std::abs(e.pm.value) + std::abs(e.mp.value)));
            REQUIRE(e.mm);
            REQUIRE(e.pp);
            REQUIRE(e.mmpp0);
            // the closed form keeps the same orders as the separate terms
            CHECK(std::abs(e.mm->value + e.pp->value - *e.mmpp0) <=
                  (e.mm->correction_estimate + 1e-12) * std::abs(e.mm->value) +
                      (e.pp->correction_estimate + 1e-12) * std::abs(e.pp->value));
        }
    }
    const auto at_limit = endpoint_contributions(3.0, 6.0 * st, t);
    CHECK_FALSE(at_limit.mm.has_value());
    CHECK_FALSE(at_limit.mmpp0.has_value());
}

TEST_CASE("caustic Airy field") {
    for (double sg : {2.0, 4.0}) {
        const auto c = caustic_field(sg, t + sg * sg, t);
        CHECK(std::abs(c.value) == doctest::Approx(airy_v(0.0).v).epsilon(1e-14));
        CHECK(c.applicable);
        CHECK(c.correction_estimate == doctest::Approx(1.0 / sg));
        // above the caustic (nu~ < 0) the field decays like v(-nu~)
        const auto above = caustic_field(sg, t + sg * sg + 3.0, t);
        CHECK(std::abs(above.value) == doctest::Approx(std::fabs(airy_v(3.0).v)).epsilon(1e-14));
    }
    CHECK_FALSE(caustic_field(0.5, t + 0.25, t).applicable);
}

TEST_CASE("penetration field") {
    const auto at = penetration_field(0.02, t, t);
    REQUIRE(at);
    CHECK(at->correction_estimate == 0.0);
    CHECK(at->value.real() == doctest::Approx(airy_v(0.0).v));
    CHECK_FALSE(penetration_field(0.02, t + 5.0, t).has_value());
    CHECK_FALSE(penetration_field(0.5, t, t).has_value());
}

TEST_CASE("rays") {
    // nu < t, far from l_B: the direct ray of the u1 family
    const auto r = ray_contribution(RayFamily::u1_before, 3.0, 4.0, t);
    REQUIRE(r);
    CHECK(r->applicable);
    // above the caustic there is no caustic-family ray
    CHECK_FALSE(ray_contribution(RayFamily::u2_before, 3.0, t + 9.0 + 5.0, t).has_value());
}

TEST_CASE("transition and Q-zone descriptions") {
    CHECK(transition_field(st, 2.0 * t, t).empty());
    const auto tr = transition_field(1.8 * st, 2.0 * 1.8 * st * st, t);
    REQUIRE(tr.size() == 2);
    CHECK(tr[0].label == ContributionLabel::fresnel_right_u2);
    CHECK(tr[1].label == ContributionLabel::fresnel_u1_reflected);
    const auto q = q_zone_field(st, 2.0 * t, t);
    REQUIRE(q.size() == 2);
    CHECK(q[0].label == ContributionLabel::q_zone);
    CHECK(q[0].applicable);
}

TEST_CASE("assembled field against the oracle in strict zones") {
    struct Case {
        double sigma, nu;
        Zone zone;
        double tol;
    };
    const Case cases[] = {
        {3.0, 4.0, Zone::RayZone, 0.05},
        {2.0, 24.0, Zone::CausticZone, 0.1},
        {4.0, 36.0, Zone::QZone, 0.15},
        {st, 2.0 * t, Zone::QZone, 0.15},
    };
    for (const auto& c : cases) {
        CAPTURE(c.sigma);
        CAPTURE(c.nu);
        const auto pt = field_point_stretched(P, c.sigma, c.nu);
        const auto a = assemble_total(pt, P);
        CHECK(a.zone == c.zone);
        CHECK(a.modeled);
        CHECK(a.dominant.has_value());
        const auto u = exact_attenuation(c.sigma, c.nu, t).value;
        CHECK(std::abs(a.value - u) <= c.tol * std::abs(u));
    }
}

TEST_CASE("unmodeled zones") {
    const auto pt = field_point_stretched(P, 20.0, 10.0);
    CHECK_THROWS_AS((void)assemble_total(pt, P), std::domain_error);
}

TEST_CASE("diffraction coefficient") {
    CHECK_FALSE(diffraction_coefficient(P.gamma, P).has_value());
    // far regime: A_s proportional to 1/(gamma - phi)
    double lo = INFINITY, hi = 0.0;
    for (double ratio = 20.0; ratio <= 40.0; ratio += 2.0) {
        const double d = ratio * P.gamma;
        const double phi = P.gamma + d;
        const double v = std::abs(singular_coefficient(AngleRegime::far, phi, P)) * d;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi / lo - 1.0 <= 0.01);
    const auto dc = diffraction_coefficient(0.5 * P.gamma, P, 1.0);
    REQUIRE(dc);
    CHECK(dc->regime == AngleRegime::intermediate);
    CHECK(dc->att1.has_value());
    CHECK(diffraction_coefficient(1.01 * P.gamma, P)->regime == AngleRegime::near_limit);
    CHECK(diffraction_coefficient(40.0 * P.gamma, P)->regime == AngleRegime::far);
}
