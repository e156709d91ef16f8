#include "gdlab/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gdlab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.772453850905516027298167483341145;
// Ai(0) and -Ai'(0).
constexpr long double kC1 = 0.355028053887817239260063186004183176L;
constexpr long double kC2 = 0.258819403792806798405183560189203963L;

// Maclaurin series, long double to absorb the cancellation between the two
// fundamental series (about 1e4 at the ends of [-8, 5]).
AiryValue series(double zd) {
    const long double z = zd;
    const long double z3 = z * z * z;
    long double a = 1.0L, f = 1.0L;       // f  = sum a_k
    long double b = z, g = z;             // g  = sum b_k
    long double d = z * z / 2.0L, fp = d; // f' = sum d_k, k >= 1
    long double e = 1.0L, gp = 1.0L;      // g' = sum e_k
    for (int k = 0; k < 200; ++k) {
        const long double k3 = 3.0L * k;
        a *= z3 / ((k3 + 2) * (k3 + 3));
        b *= z3 / ((k3 + 3) * (k3 + 4));
        e *= z3 / ((k3 + 1) * (k3 + 3));
        if (k > 0) d *= z3 / (k3 * (k3 + 2));
        f += a;
        g += b;
        gp += e;
        if (k > 0) fp += d;
        const long double tiny = 1e-22L;
        if (k > 4 && std::fabs(a) < tiny * std::fabs(f) && std::fabs(b) < tiny * (std::fabs(g) + 1) &&
            std::fabs(d) < tiny * (std::fabs(fp) + 1) && std::fabs(e) < tiny * std::fabs(gp))
            break;
    }
    const long double sp = kSqrtPi;
    return {zd, static_cast<double>(sp * (kC1 * f - kC2 * g)),
            static_cast<double>(sp * (kC1 * fp - kC2 * gp))};
}

// u_k and v_k = -(6k+1)/(6k-1) u_k of the Airy asymptotic expansions.
struct AsymCoefficients {
    static constexpr int n = 40;
    double u[n], v[n];
    AsymCoefficients() {
        u[0] = v[0] = 1.0;
        for (int k = 1; k < n; ++k) {
            u[k] = u[k - 1] * (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / ((2.0 * k - 1) * 216.0 * k);
            v[k] = -(6.0 * k + 1) / (6.0 * k - 1) * u[k];
        }
    }
};

const AsymCoefficients& coefs() {
    static const AsymCoefficients c;
    return c;
}

// sum_j (-1)^j c[first + j step] x^{-(first + j step)}, stopped at the
// smallest term.
double asym_sum(const double* c, double x, int first, int step) {
    const double ix = 1.0 / x;
    const double ixs = step == 1 ? ix : ix * ix;
    double pw = first == 0 ? 1.0 : ix;
    double s = 0.0, prev = INFINITY;
    for (int k = first, j = 0; k < AsymCoefficients::n; k += step, ++j, pw *= ixs) {
        const double term = c[k] * pw;
        if (std::fabs(term) > prev) break;
        s += (j % 2 == 0 ? term : -term);
        prev = std::fabs(term);
        if (prev < 1e-18 * std::fabs(s)) break;
    }
    return s;
}

AiryValue asym_positive(double z) {
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    const double ex = std::exp(-zeta);
    const double q = std::pow(z, 0.25);
    const double su = asym_sum(coefs().u, zeta, 0, 1);
    const double sv = asym_sum(coefs().v, zeta, 0, 1);
    return {z, 0.5 * ex / q * su, -0.5 * q * ex * sv};
}

AiryValue asym_negative(double z) {
    const double x = -z;
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    const double q = std::pow(x, 0.25);
    const double c = std::cos(zeta - kPi / 4), s = std::sin(zeta - kPi / 4);
    const double P = asym_sum(coefs().u, zeta, 0, 2);
    const double Q = asym_sum(coefs().u, zeta, 1, 2);
    const double R = asym_sum(coefs().v, zeta, 0, 2);
    const double S = asym_sum(coefs().v, zeta, 1, 2);
    return {z, (c * P + s * Q) / q, q * (s * R - c * S)};
}

// Taylor continuation of the ODE v'' = z v from z0 to z0 + h.  Used only
// downward from z0 = 9 where the recessive solution grows, so it is stable.
AiryValue taylor_from(const AiryValue& start, double z) {
    const long double z0 = start.z, h = z - start.z;
    long double cm1 = 0.0L, c0 = start.v, c1 = start.v_prime;
    long double val = c0 + c1 * h, der = c1;
    long double hn = h;  // h^n for the c_{n+1} term of the derivative
    for (int n = 0; n < 400; ++n) {
        // c_{n+2} = (z0 c_n + c_{n-1}) / ((n+1)(n+2))
        const long double c2 = (z0 * c0 + cm1) / ((n + 1.0L) * (n + 2.0L));
        const long double t = c2 * hn * h;
        val += t;
        der += (n + 2.0L) * c2 * hn;
        hn *= h;
        cm1 = c0;
        c0 = c1;
        c1 = c2;
        if (n > 10 && std::fabs(t) < 1e-22L * std::fabs(val)) break;
    }
    return {z, static_cast<double>(val), static_cast<double>(der)};
}

}  // namespace

AiryValue airy_v(double z) {
    if (!std::isfinite(z) || std::fabs(z) > 1e4) throw std::domain_error("airy_v: argument out of range");
    if (z < -8.0) return asym_negative(z);
    if (z <= 5.0) return series(z);
    if (z < 9.0) return taylor_from(asym_positive(9.0), z);
    return asym_positive(z);
}

double vprime_zero(int N) {
    if (N < 1 || N > 1000) throw std::domain_error("vprime_zero: N must be in [1, 1000]");
    double t = std::pow(1.5 * kPi * (N - 0.75), 2.0 / 3.0);
    // d/dt v'(-t) = -v''(-t) = t v(-t).
    for (int it = 0; it < 100; ++it) {
        const auto a = airy_v(-t);
        const double step = a.v_prime / (t * a.v);
        t -= step;
        if (std::fabs(step) < 1e-15 * t) break;
    }
    return t;
}

double v_zero(int N) {
    if (N < 1 || N > 1000) throw std::domain_error("v_zero: N must be in [1, 1000]");
    double s = std::pow(1.5 * kPi * (N - 0.25), 2.0 / 3.0);
    for (int it = 0; it < 100; ++it) {
        const auto a = airy_v(-s);
        const double step = -a.v / a.v_prime;  // d/ds v(-s) = -v'(-s)
        s -= step;
        if (std::fabs(step) < 1e-15 * s) break;
    }
    return s;
}

double complete_airy_integral(double eta) { return 2.0 * kSqrtPi * airy_v(-eta).v; }

}  // namespace gdlab
