#include "gdlab/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gdlab {
namespace {

constexpr int kTerms = 40;

// Coefficients of Weideman's rational approximation (SIAM J. Numer. Anal.
// 31, 1994), w(z) = 2 p(Z)/(L - iz)^2 + 1/(sqrt(pi)(L - iz)) with
// Z = (L + iz)/(L - iz).  The cosine transform replaces the FFT of the
// original since the sampled function is even.
struct Weideman {
    double L;
    std::array<double, kTerms + 1> a{};  // a[1..N]
    Weideman() {
        const int M = 2 * kTerms;
        L = std::sqrt(kTerms / std::sqrt(2.0));
        std::array<double, 2 * M> F{};
        for (int k = -M + 1; k <= M - 1; ++k) {
            const double th = k * std::numbers::pi / M;
            const double t = L * std::tan(th / 2);
            F[k + M] = std::exp(-t * t) * (L * L + t * t);
        }
        for (int n = 1; n <= kTerms; ++n) {
            double s = 0.0;
            for (int k = -M + 1; k <= M - 1; ++k) s += F[k + M] * std::cos(std::numbers::pi * k * n / M);
            a[n] = s / (2.0 * M);
        }
    }
};

const Weideman& weideman() {
    static const Weideman w;
    return w;
}

const cplx I{0.0, 1.0};

cplx w_upper(cplx z) {
    const auto& W = weideman();
    const cplx den = W.L - I * z;
    const cplx Z = (W.L + I * z) / den;
    cplx p = W.a[kTerms];
    for (int n = kTerms - 1; n >= 1; --n) p = p * Z + W.a[n];
    return 2.0 * p / (den * den) + 1.0 / (std::sqrt(std::numbers::pi) * den);
}

void check_finite(cplx z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::domain_error(std::string(who) + ": non-finite argument");
}

}  // namespace

cplx faddeeva_w(cplx z) {
    check_finite(z, "faddeeva_w");
    if (z.imag() >= 0.0) return w_upper(z);
    return 2.0 * std::exp(-z * z) - w_upper(-z);
}

cplx erfc_complex(cplx z) {
    check_finite(z, "erfc_complex");
    // erfc(z) = exp(-z^2) w(iz); iz lies in the upper half plane iff Re z >= 0.
    if (z.real() >= 0.0) return std::exp(-z * z) * w_upper(I * z);
    return 2.0 - std::exp(-z * z) * w_upper(-I * z);
}

cplx fresnel_phi(cplx z) {
    check_finite(z, "fresnel_phi");
    const cplx rot = std::polar(1.0, -std::numbers::pi / 4);
    return 0.5 * erfc_complex(-rot * z);
}

}  // namespace gdlab
