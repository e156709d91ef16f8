#pragma once

#include <complex>

namespace gdlab {

using cplx = std::complex<double>;

// Airy function in Fock's normalization, v(z) = sqrt(pi) Ai(z), so that
// v'' = z v and v(z) ~ z^{-1/4} exp(-2/3 z^{3/2}) / 2 as z -> +inf.
struct AiryValue {
    double z = 0.0;
    double v = 0.0;
    double v_prime = 0.0;
};

// Power series on [-8, 5], Taylor continuation from z = 9 on (5, 9), and the
// standard asymptotic expansions (truncated at the smallest term) elsewhere.
// Throws std::domain_error for non-finite z or |z| > 1e4.
[[nodiscard]] AiryValue airy_v(double z);

// t_N > 0 with v'(-t_N) = 0, N >= 1.  Newton from the large-N seed
// [(3pi/2)(N - 3/4)]^{2/3}.  Throws std::domain_error for N < 1 or N > 1000.
[[nodiscard]] double vprime_zero(int N);

// s_N > 0 with v(-s_N) = 0 (used for interlacing checks).
[[nodiscard]] double v_zero(int N);

// Faddeeva function w(z) = exp(-z^2) erfc(-iz), Weideman's rational
// approximation (40 terms) in the upper half plane, reflection below.
[[nodiscard]] cplx faddeeva_w(cplx z);

// Complementary error function for complex argument.
[[nodiscard]] cplx erfc_complex(cplx z);

// Phi(z) = e^{-i pi/4}/sqrt(pi) * int_{-inf}^{z} e^{i s^2} ds
//        = erfc(-e^{-i pi/4} z) / 2, entire in z.
// Phi(0) = 1/2, Phi(+inf) = 1, Phi(-inf) = 0, Phi(z) + Phi(-z) = 1.
[[nodiscard]] cplx fresnel_phi(cplx z);

// Incomplete Airy function I(eta, xi) = int_xi^inf exp(i(eta q - q^3/3)) dq.
// The integrand is entire; the tail is moved onto the ray arg q = -pi/6
// where it decays like exp(-r^3/3).
[[nodiscard]] cplx incomplete_airy(double eta, double xi);

// The complete integral over the real line:
//   int_{-inf}^{inf} exp(i(eta q - q^3/3)) dq = 2 pi Ai(-eta) = 2 sqrt(pi) v(-eta).
// Note the minus sign in the argument of v.
[[nodiscard]] double complete_airy_integral(double eta);

}  // namespace gdlab
