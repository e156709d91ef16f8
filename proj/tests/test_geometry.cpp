#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gdlab/geometry.hpp"
#include "gdlab/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

using namespace gdlab;

namespace {

const ProblemParams P = make_params_m(4000.0, 1.0, 20);

}  // namespace

TEST_CASE("problem parameters") {
    CHECK(P.t == doctest::Approx(20.188631509463377).epsilon(1e-13));
    CHECK(P.gamma * P.m == doctest::Approx(std::sqrt(P.t)).epsilon(1e-15));
    CHECK(P.b == doctest::Approx(P.a * P.t / (2.0 * P.m * P.m)).epsilon(1e-15));
    CHECK(P.k == doctest::Approx(2.0 * P.m * P.m * P.m / P.a).epsilon(1e-15));
    CHECK(P.t_large);
    CHECK(P.t_small_vs_m);
    CHECK_THROWS_AS((void)make_params(-1.0, 1.0, 1), std::domain_error);
    CHECK_THROWS_AS((void)make_params(1.0, 1.0, 1), std::domain_error);
    CHECK_THROWS_AS((void)make_params(1000.0, 1.0, 0), std::domain_error);
}

TEST_CASE("stretched coordinates round-trip") {
    for (double sg : {0.5, 3.0, 11.0}) {
        for (double nu : {0.0, 7.5, 40.0}) {
            const auto s = field_point_stretched(P, sg, nu);
            const auto f = field_point(P, s.x, s.y);
            CHECK(f.sigma == doctest::Approx(sg).epsilon(1e-13));
            CHECK(f.nu == doctest::Approx(nu).epsilon(1e-13));
            CHECK(f.nu_tilde == doctest::Approx(P.t + sg * sg - nu).epsilon(1e-12));
            REQUIRE(f.eps);
            CHECK(*f.eps == doctest::Approx(std::sqrt(P.t) - nu / (2.0 * sg)).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS((void)field_point(P, 0.1, -0.1), std::domain_error);
}

TEST_CASE("caustic distance is nu~ in physical units") {
    for (double sg : {1.0, 4.0, 9.0}) {
        for (double nu : {5.0, 25.0, 60.0}) {
            const auto f = field_point_stretched(P, sg, nu);
            const double n = caustic_distance(P, f.x, f.y);
            CHECK(n == doctest::Approx(P.a * f.nu_tilde / (2.0 * P.m * P.m)).epsilon(1e-10).scale(1e-12));
            CHECK((reflection_discriminant(P, f.x, f.y) > 0.0) == (n > 0.0));
            if (n >= 0.0) {
                const double J = spreading(P, f.x, f.y, false);
                CHECK(J * J * P.a / 2.0 == doctest::Approx(n).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("point Q sits at (sqrt t, 2t)") {
    const auto q = point_q(P);
    const auto f = field_point(P, q.x, q.y);
    CHECK(f.sigma == doctest::Approx(std::sqrt(P.t)).epsilon(1e-5));
    CHECK(f.nu == doctest::Approx(2.0 * P.t).epsilon(1e-5));
    const auto tag = classify_region(field_point_stretched(P, std::sqrt(P.t), 2.0 * P.t), P);
    CHECK(tag.zone == Zone::QZone);
    CHECK(tag.strict);
}

TEST_CASE("ray ordinates agree with the axis ordinates") {
    int matched = 0;
    for (double sg = 0.5; sg <= 12.0; sg += 0.5) {
        for (double nu = 0.0; nu <= 45.0; nu += 1.5) {
            const auto f = field_point_stretched(P, sg, nu);
            const auto o = axis_ordinates(f, P.t);
            for (const auto& r : resolve_rays(P, f.x, f.y)) {
                double want = o.p3;
                if (r.family == RayFamily::u2_after || r.family == RayFamily::u1_before) want = *o.p1;
                if (r.family == RayFamily::u2_before) want = *o.p2;
                CAPTURE(sg);
                CAPTURE(nu);
                CHECK(std::abs(r.p - want) <= 1e-8 * (1.0 + P.t));
                CHECK(r.p >= -1e-9);
                CHECK(r.p <= P.t + 1e-9);
                ++matched;
            }
        }
    }
    CHECK(matched > 100);
}

TEST_CASE("rays coalesce on the caustic and p1 vanishes on the limit ray") {
    for (double sg = 0.5; sg <= 12.0; sg += 0.5) {
        const double x = sg * P.a / P.m, y = P.b + x * x / (2.0 * P.a);
        const auto r = reflection_arclengths(P, x, y);
        CHECK(std::abs(r[0].s_hat - r[1].s_hat) <= 1e-8 * P.a * P.gamma);
    }
    for (double sg = std::sqrt(P.t) + 0.25; sg <= 12.0; sg += 0.25) {
        const auto o = axis_ordinates(field_point_stretched(P, sg, 2.0 * sg * std::sqrt(P.t)), P.t);
        REQUIRE(o.p1);
        CHECK(std::abs(*o.p1) <= 1e-10);
    }
}

TEST_CASE("eikonal identities") {
    const double t = P.t;
    for (double sg : {1.0, 5.0, 10.0}) {
        for (double pp : {0.0, 0.5 * t}) {
            const double d = *reduced_eikonal(EikonalKind::tau_plus, sg, 10.0, t, pp) -
                             *reduced_eikonal(EikonalKind::tau_minus, sg, 10.0, t, pp);
            CHECK(d == doctest::Approx(4.0 / 3.0 * std::pow(t - pp, 1.5)).epsilon(1e-12));
        }
        const double nc = t + sg * sg;
        CHECK(*reduced_eikonal(EikonalKind::phi1, sg, nc, t) ==
              doctest::Approx(*reduced_eikonal(EikonalKind::phi2, sg, nc, t)).epsilon(1e-12));
        CHECK_FALSE(reduced_eikonal(EikonalKind::phi1, sg, nc + 1.0, t).has_value());
    }
}

TEST_CASE("classifier is total and respects the zone topology") {
    std::set<Zone> seen;
    for (double sg = 0.02; sg <= 12.0; sg += 0.13) {
        for (double nu = 0.0; nu <= 45.0; nu += 0.37) {
            const auto f = field_point_stretched(P, sg, nu);
            const auto tag = classify_region(f, P);
            CAPTURE(sg);
            CAPTURE(nu);
            CHECK(tag.zone != Zone::OutOfDomain);
            CHECK(tag.flags.obl);
            seen.insert(tag.zone);
            if (tag.zone == Zone::CausticZone && tag.strict) CHECK(sg < std::sqrt(P.t));
            if (tag.zone == Zone::TransitionLeftOfQ) CHECK(sg < std::sqrt(P.t));
            if (tag.zone == Zone::TransitionRightOfQ) CHECK(sg > std::sqrt(P.t));
            if (tag.zone == Zone::RayZone && tag.strict) {
                CHECK(tag.flags.att1);
                CHECK(tag.flags.att2);
            }
            if (tag.zone == Zone::PenetrationZone) CHECK(sg <= 0.05);
        }
    }
    for (Zone z : {Zone::RayZone, Zone::CausticZone, Zone::TransitionLeftOfQ, Zone::TransitionRightOfQ, Zone::QZone,
                   Zone::PenetrationZone})
        CHECK(seen.count(z) == 1);
    const auto far = field_point_stretched(P, 20.0, 10.0);
    CHECK(classify_region(far, P).zone == Zone::OutOfDomain);
}

TEST_CASE("angle regimes") {
    CHECK(angle_regime(0.01) == AngleRegime::near_limit);
    CHECK(angle_regime(100.0) == AngleRegime::far);
    CHECK(to_string(Zone::NearLB_Unmodeled) == "NearLB_Unmodeled");
    CHECK(to_string(RayFamily::u2_after) == "u2_after");
}
