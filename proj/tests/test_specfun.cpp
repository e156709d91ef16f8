#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gdlab/specfun.hpp"

#include <cmath>
#include <stdexcept>

using namespace gdlab;

namespace {

// Reference values from 30-digit arbitrary-precision evaluation, frozen.
struct AiryRef {
    double z, v, vp;
};
constexpr AiryRef airy_refs[] = {
    {0.0, 0.629270841292952727, -0.45874544894163013},
    {-8.0, -0.0934172694663458647, 1.65823858766636593},
    {10.0, 1.95812416163893223e-10, -6.24016071796355087e-10},
    {7.0, 1.32794526564721479e-6, -3.55935478657912943e-6},
    {-20.0, -0.312671719262701789, 1.58255820875305851},
    {-50.0, -0.286927352671725353, 1.71748976856948326},
};

bool close_rel(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

}  // namespace

TEST_CASE("airy_v matches frozen values on every branch") {
    for (const auto& r : airy_refs) {
        CAPTURE(r.z);
        const auto a = airy_v(r.z);
        CHECK(std::abs(a.v - r.v) <= 1e-11 * std::abs(r.v));
        CHECK(std::abs(a.v_prime - r.vp) <= 1e-11 * std::abs(r.vp));
    }
    CHECK(std::abs(airy_v(5.5).v - 5.9705660811351179e-05) <= 1e-11 * 5.97e-5);
    CHECK(std::abs(airy_v(30.0).v - 5.68641762468649579e-49) <= 1e-11 * 5.69e-49);
}

TEST_CASE("airy_v is continuous across branch seams") {
    for (double seam : {-8.0, 5.0, 9.0}) {
        CAPTURE(seam);
        const auto lo = airy_v(std::nextafter(seam, -1e9));
        const auto hi = airy_v(std::nextafter(seam, 1e9));
        CHECK(std::abs(lo.v - hi.v) <= 1e-11 * std::abs(hi.v) + 1e-300);
        CHECK(std::abs(lo.v_prime - hi.v_prime) <= 1e-11 * std::abs(hi.v_prime) + 1e-300);
    }
}

TEST_CASE("airy_v satisfies v'' = z v") {
    constexpr double h = 1e-4;
    for (double z = -15.0; z <= 12.0; z += 0.7) {
        CAPTURE(z);
        const double d2 = (airy_v(z + h).v - 2.0 * airy_v(z).v + airy_v(z - h).v) / (h * h);
        const double scale = std::abs(airy_v(z).v) + std::abs(airy_v(z).v_prime) * (1.0 + std::abs(z));
        CHECK(std::abs(d2 - z * airy_v(z).v) <= 1e-5 * scale);
    }
}

TEST_CASE("airy_v rejects invalid arguments") {
    CHECK_THROWS_AS((void)airy_v(std::nan("")), std::domain_error);
    CHECK_THROWS_AS((void)airy_v(2e4), std::domain_error);
}

TEST_CASE("zeros of v' and v") {
    CHECK(vprime_zero(1) == doctest::Approx(1.0187929716474711).epsilon(1e-13));
    CHECK(vprime_zero(5) == doctest::Approx(7.37217725504777).epsilon(1e-13));
    CHECK(vprime_zero(10) == doctest::Approx(12.3847883718457473).epsilon(1e-13));
    CHECK(vprime_zero(20) == doctest::Approx(20.188631509463377).epsilon(1e-13));
    CHECK(vprime_zero(30) == doctest::Approx(26.6834103283224498).epsilon(1e-13));
    CHECK(v_zero(1) == doctest::Approx(2.338107410459767).epsilon(1e-13));
    CHECK(v_zero(2) == doctest::Approx(4.08794944413097).epsilon(1e-13));
    for (int n = 1; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(std::abs(airy_v(-vprime_zero(n)).v_prime) <= 1e-12);
        if (n > 1) CHECK(vprime_zero(n - 1) < v_zero(n - 1));
        CHECK(v_zero(n) < vprime_zero(n + 1));
    }
    CHECK_THROWS_AS((void)vprime_zero(0), std::domain_error);
}

TEST_CASE("fresnel_phi matches frozen values and symmetries") {
    CHECK(close_rel(fresnel_phi({0.0, 2.0}), {1.00515585601274475, -0.13696287973176995}, 1e-12));
    CHECK(close_rel(fresnel_phi(-1.5), {-0.169194820058119613, 0.0482508913685953565}, 1e-12));
    CHECK(close_rel(fresnel_phi(0.7), {0.817464792182103099, -0.227792593939735728}, 1e-12));
    CHECK(close_rel(fresnel_phi({1.0, 1.0}), {0.977249868051820793, 0.0}, 1e-12));
    CHECK(close_rel(fresnel_phi({-2.0, 0.5}), {-0.0518551020301070514, -1.03427787800362741}, 1e-12));
    CHECK(std::abs(fresnel_phi(0.0) - 0.5) <= 1e-15);
    for (double x : {0.3, 1.7, 4.0, 11.0}) {
        CAPTURE(x);
        CHECK(std::abs(fresnel_phi(x) + fresnel_phi(-x) - 1.0) <= 1e-13);
    }
    CHECK(std::abs(fresnel_phi(60.0) - 1.0) <= 1e-2);
    CHECK(std::abs(fresnel_phi(-60.0)) <= 1e-2);
}

TEST_CASE("erfc and Faddeeva agree") {
    for (cplx z : {cplx(0.5, 0.2), cplx(-1.0, 2.0), cplx(3.0, -0.5)}) {
        CAPTURE(z);
        CHECK(std::abs(erfc_complex(z) - std::exp(-z * z) * faddeeva_w(cplx(0, 1) * z)) <=
              1e-12 * std::abs(erfc_complex(z)));
    }
    CHECK(std::abs(erfc_complex(0.8) - std::erfc(0.8)) <= 1e-14);
}

TEST_CASE("incomplete_airy matches frozen values") {
    struct Ref {
        double eta, xi;
        cplx value;
    };
    const Ref refs[] = {
        {0.0, 0.0, {1.1153535259122478, -0.643949658427035}},
        {2.0, 1.0, {0.179989330487031902, 1.03495616873442063}},
        {-1.0, -2.0, {0.660595686617320672, 0.0361145322736433741}},
        {1.3, -3.0, {3.0965572800485449, -0.0368376794610522502}},
        {-4.0, 0.5, {-0.219409983904802635, 0.0935711184669240077}},
        {5.0, -1.0, {0.863092972780758246, 0.447219903820865186}},
    };
    for (const auto& r : refs) {
        CAPTURE(r.eta);
        CAPTURE(r.xi);
        CHECK(close_rel(incomplete_airy(r.eta, r.xi), r.value, 1e-10));
    }
}

TEST_CASE("incomplete_airy derivative in xi is minus the integrand") {
    constexpr double h = 1e-5;
    for (double eta : {-2.0, 0.0, 3.0}) {
        for (double xi : {-2.5, 0.0, 1.5}) {
            const cplx fd = (incomplete_airy(eta, xi + h) - incomplete_airy(eta, xi - h)) / (2.0 * h);
            const cplx integrand = std::exp(cplx(0.0, eta * xi - xi * xi * xi / 3.0));
            CHECK(std::abs(fd + integrand) <= 1e-6);
        }
    }
}

TEST_CASE("complete Airy integral") {
    for (double eta : {-3.0, 0.0, 2.0, 6.0}) {
        CAPTURE(eta);
        CHECK(complete_airy_integral(eta) == doctest::Approx(2.0 * std::sqrt(M_PI) * airy_v(-eta).v).epsilon(1e-13));
        // I(eta, -X) tends to the complete integral up to the oscillating endpoint term
        const double X = 30.0;
        const cplx endpoint = std::exp(cplx(0.0, -eta * X + X * X * X / 3.0)) / cplx(0.0, eta - X * X);
        CHECK(std::abs(incomplete_airy(eta, -X) + endpoint - complete_airy_integral(eta)) <= 1e-5);
    }
}
