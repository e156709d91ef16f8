#include "gdlab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gdlab {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

cplx expi(double phase) { return std::polar(1.0, phase); }

double theta(double t) { return 2.0 / 3.0 * t * std::sqrt(t); }

// Endpoint correction delta = 1/(sigma eps^2) + 1/(sqrt(t) eps^2) + 1/t^2.
double endpoint_delta(double sigma, double eps, double t) {
    const double e2 = eps * eps;
    return 1.0 / (sigma * e2) + 1.0 / (std::sqrt(t) * e2) + 1.0 / (t * t);
}

// Phase of the caustic and Q-zone exponentials.
double caustic_phase(double sigma, double nu, double t) {
    return -(2.0 * sigma * sigma * sigma / 3.0 + sigma * (t - nu));
}

Contribution fresnel_reflected(double sigma, double nu, double t) {
    const double st = std::sqrt(t);
    const double eps = st - nu / (2.0 * sigma);
    const double zs = zeta_values(sigma, nu, t).zeta_star;
    Contribution c;
    c.label = ContributionLabel::fresnel_u1_reflected;
    c.phase = theta(t) + nu * nu / (4.0 * sigma) - zs * zs;
    c.value = expi(c.phase - kPi / 4) * fresnel_phi(zs) / (2.0 * std::sqrt(st + sigma));
    c.correction_estimate = std::pow(std::fabs(sigma * eps / (st + sigma)), 3);
    return c;
}

}  // namespace

std::string_view to_string(ContributionLabel l) {
    switch (l) {
        case ContributionLabel::end_mm: return "end_mm";
        case ContributionLabel::end_pp: return "end_pp";
        case ContributionLabel::end_pm: return "end_pm";
        case ContributionLabel::end_mp: return "end_mp";
        case ContributionLabel::ray_u2_before: return "ray_u2_before";
        case ContributionLabel::ray_u2_after: return "ray_u2_after";
        case ContributionLabel::ray_u1_before: return "ray_u1_before";
        case ContributionLabel::ray_u1_after: return "ray_u1_after";
        case ContributionLabel::caustic_airy: return "caustic_airy";
        case ContributionLabel::fresnel_left_u2: return "fresnel_left_u2";
        case ContributionLabel::fresnel_right_u2: return "fresnel_right_u2";
        case ContributionLabel::fresnel_u1_reflected: return "fresnel_u1_reflected";
        case ContributionLabel::q_zone: return "q_zone";
        case ContributionLabel::penetration: return "penetration";
    }
    return "?";
}

EndpointSet endpoint_contributions(double sigma, double nu, double t) {
    if (!(sigma > 0.0) || !(t > 0.0)) throw std::domain_error("endpoint_contributions: need sigma > 0, t > 0");
    const double st = std::sqrt(t), th = theta(t);
    const double eps = st - nu / (2.0 * sigma);
    const double P = 1.0 / (4.0 * std::sqrt(kPi * sigma) * std::pow(t, 0.25));
    const double cyl = nu * nu / (4.0 * sigma);
    const double tail = 1.0 / (t * st);
    EndpointSet out;
    const double den = st + nu / (2.0 * sigma);
    out.pm = {ContributionLabel::end_pm, -P * expi(th + cyl) / den, cyl + th, tail, true};
    out.mp = {ContributionLabel::end_mp, kI * P * expi(-th + cyl) / den, cyl - th, tail, true};
    const double thp = th + kPi / 4;
    out.pmmp0 = -2.0 * P * expi(cyl - kPi / 4) * std::cos(thp) / den;
    if (eps != 0.0) {
        const double e2 = eps * eps, e3 = e2 * eps;
        const double d = endpoint_delta(sigma, eps, t);
        out.att1 = sigma * e2 >= 10.0 && st * e2 >= 10.0;
        const cplx bm = kI / eps - 1.0 / (4.0 * t * e2) + (1.0 / sigma - 1.0 / st) / (2.0 * e3);
        const cplx bp = kI / eps + 1.0 / (4.0 * t * e2) + (1.0 / sigma + 1.0 / st) / (2.0 * e3);
        out.mm = Contribution{ContributionLabel::end_mm, P * expi(-th + cyl) * bm, cyl - th, d, out.att1};
        out.pp = Contribution{ContributionLabel::end_pp, kI * P * expi(th + cyl) * bp, cyl + th, d, out.att1};
        const cplx pre = -2.0 * P * expi(cyl - kPi / 4);
        out.mmpp0 = pre * std::cos(thp) / eps + pre * std::sin(thp) / e2 * (1.0 / (4.0 * t) + 1.0 / (2.0 * st * eps));
    }
    return out;
}

std::optional<Contribution> ray_contribution(RayFamily kind, double sigma, double nu, double t) {
    if (!(sigma > 0.0) || !(t > 0.0)) return std::nullopt;
    const double nt = t + sigma * sigma - nu;
    const double s2 = sigma * sigma;
    Contribution c;
    double pj = 0.0, amp_arg = nt;
    switch (kind) {
        case RayFamily::u2_after:
        case RayFamily::u1_before: {
            if (!(nt > 0.0)) return std::nullopt;
            if ((kind == RayFamily::u2_after) != (nu > t)) return std::nullopt;
            const double r = std::sqrt(nt);
            pj = t - (sigma - r) * (sigma - r);
            c.phase = *reduced_eikonal(EikonalKind::phi1, sigma, nu, t);
            c.value = expi(c.phase - kPi / 4);
            if (kind == RayFamily::u2_after) {
                c.label = ContributionLabel::ray_u2_after;
                c.correction_estimate = s2 / (nt * std::pow(std::fabs(sigma - r), 3));
            } else {
                c.label = ContributionLabel::ray_u1_before;
                c.correction_estimate = s2 / (nt * std::pow(std::fabs(nt - sigma), 3));
            }
            break;
        }
        case RayFamily::u2_before: {
            if (!(nt > 0.0)) return std::nullopt;
            const double r = std::sqrt(nt);
            pj = t - (sigma + r) * (sigma + r);
            c.label = ContributionLabel::ray_u2_before;
            c.phase = *reduced_eikonal(EikonalKind::phi2, sigma, nu, t);
            c.value = expi(c.phase + kPi / 4);
            c.correction_estimate = s2 / (nt * std::pow(sigma + r, 3));
            break;
        }
        case RayFamily::u1_after: {
            const double n3 = nt + 2.0 * nu;
            const double r = std::sqrt(n3);
            pj = t - (sigma - r) * (sigma - r);
            amp_arg = n3;
            c.label = ContributionLabel::ray_u1_after;
            c.phase = *reduced_eikonal(EikonalKind::phi3, sigma, nu, t);
            c.value = expi(c.phase - kPi / 4);
            c.correction_estimate = s2 / (std::pow(std::fabs(r - sigma), 3) * n3);
            break;
        }
    }
    if (pj < 0.0 || pj > t) return std::nullopt;
    c.value /= 2.0 * std::pow(amp_arg, 0.25);
    if (!std::isfinite(c.correction_estimate)) c.correction_estimate = INFINITY;
    c.applicable = t - pj > 2.0 && c.correction_estimate <= 0.1;
    return c;
}

Contribution caustic_field(double sigma, double nu, double t, const AsymptoticOptions& opt) {
    const double nt = t + sigma * sigma - nu;
    Contribution c;
    c.label = ContributionLabel::caustic_airy;
    c.phase = caustic_phase(sigma, nu, t);
    c.value = expi(c.phase) * airy_v(opt.airy_sign * nt).v;
    c.correction_estimate = (1.0 + nt * nt) / sigma;
    c.applicable = sigma >= opt.thresholds.caustic_sigma_min && nt * nt <= opt.thresholds.caustic_strip * sigma;
    return c;
}

std::vector<Contribution> transition_field(double sigma, double nu, double t, const AsymptoticOptions& opt) {
    const double st = std::sqrt(t);
    const double dq = sigma - st;
    if (dq * dq < opt.thresholds.q_box * st) return {};
    const double eps = st - nu / (2.0 * sigma);
    const double cyl = nu * nu / (4.0 * sigma), th = theta(t);
    const auto z = zeta_values(sigma, nu, t);
    const auto& T = opt.thresholds;
    const bool ok = std::fabs(eps) <= T.transition_eps && std::fabs(dq) >= T.transition_width * sigma * std::fabs(eps) &&
                    st * std::fabs(dq) >= sigma;
    Contribution u2;
    if (dq > 0.0) {
        u2.label = ContributionLabel::fresnel_right_u2;
        u2.phase = -th + cyl + z.zeta_gt * z.zeta_gt;
        u2.value = expi(u2.phase - kPi / 4) * fresnel_phi(kI * z.zeta_gt) / (2.0 * std::sqrt(dq));
        u2.correction_estimate =
            std::pow(std::fabs(2.0 * sigma * eps / dq), 3) + std::pow(sigma / (st * dq), 1.5);
    } else {
        u2.label = ContributionLabel::fresnel_left_u2;
        u2.phase = -th + cyl - z.zeta_lt * z.zeta_lt;
        u2.value = expi(u2.phase + kPi / 4) * fresnel_phi(-z.zeta_lt) / (2.0 * std::sqrt(-dq));
        u2.correction_estimate = std::pow(std::fabs(eps / dq), 3) + std::pow(sigma / (st * -dq), 1.5);
    }
    u2.applicable = ok;
    auto u1 = fresnel_reflected(sigma, nu, t);
    u1.applicable = ok;
    return {u2, u1};
}

std::vector<Contribution> q_zone_field(double sigma, double nu, double t, const AsymptoticOptions& opt) {
    const double st = std::sqrt(t);
    const double nt = t + sigma * sigma - nu;
    const double dq = sigma - st;
    const double q0 = opt.q_lower_exact ? (sigma * sigma - t) / (2.0 * sigma) : dq;
    Contribution q;
    q.label = ContributionLabel::q_zone;
    q.phase = caustic_phase(sigma, nu, t);
    q.value = expi(q.phase) * incomplete_airy(nt, q0) / (2.0 * std::sqrt(kPi));
    q.correction_estimate = dq * dq / st + (nt * nt + 1.0) / st;
    q.applicable = dq * dq <= opt.thresholds.q_box * st && nt * nt <= opt.thresholds.caustic_strip * sigma;
    auto u1 = fresnel_reflected(sigma, nu, t);
    return {q, u1};
}

std::optional<Contribution> penetration_field(double sigma, double nu, double t) {
    if (!(sigma > 0.0) || sigma > 0.05 || std::fabs(nu - t) > 2.0) return std::nullopt;
    Contribution c;
    c.label = ContributionLabel::penetration;
    c.phase = 0.0;
    c.value = airy_v(nu - t).v;
    c.correction_estimate = sigma * std::fabs(nu - t);
    return c;
}

double phase_f(int a, int b, double p, double sigma, double nu, double t) {
    const double q = p + b * nu;
    return a * 2.0 / 3.0 * std::pow(t - p, 1.5) + q * q / (4.0 * sigma);
}

double phase_f_prime(int a, int b, double p, double sigma, double nu, double t) {
    return -a * std::sqrt(t - p) + (p + b * nu) / (2.0 * sigma);
}

cplx singular_coefficient(AngleRegime regime, double phi, const ProblemParams& p) {
    const double t = p.t, ka = p.k * p.a, d = p.gamma - phi;
    const double thp = theta(t) + kPi / 4;
    const cplx c = -expi(-kPi / 4);
    const double q = std::pow(t, 0.25);
    const double c56 = std::pow(2.0, 5.0 / 6.0) * std::sqrt(kPi);
    const cplx far = c / (std::sqrt(2.0 * kPi) * q) * std::cos(thp) / d;
    switch (regime) {
        case AngleRegime::near_limit:
            return c / (c56 * std::pow(ka, 2.0 / 3.0) * q * q * q) * std::sin(thp) / (d * d * d);
        case AngleRegime::intermediate:
            return far + c / (c56 * q) * std::sin(thp) *
                             (1.0 / (2.0 * t * std::cbrt(2.0 * ka) * d * d) +
                              1.0 / (std::sqrt(t) * std::pow(ka, 2.0 / 3.0) * d * d * d));
        case AngleRegime::far: return far;
    }
    return far;
}

std::optional<DiffractionCoefficient> diffraction_coefficient(double phi, const ProblemParams& p,
                                                              std::optional<double> r) {
    const double d = p.gamma - phi;
    if (d == 0.0 || !std::isfinite(phi)) return std::nullopt;
    DiffractionCoefficient out;
    out.phi = phi;
    const double thp = theta(p.t) + kPi / 4;
    out.regular = -expi(-kPi / 4) / (std::sqrt(2.0 * kPi) * std::pow(p.t, 0.25)) * std::cos(thp) / (p.gamma + phi);
    out.regime = angle_regime(std::fabs(d) / p.gamma);
    out.singular = singular_coefficient(out.regime, phi, p);
    if (r && *r > 0.0) {
        const double x = *r * std::cos(phi), y = *r * std::sin(phi);
        if (x >= 0.0 && y >= 0.0) {
            const auto f = region_flags(field_point(p, x, y), p);
            out.att1 = f.att1;
            out.phi4 = f.phi4;
        }
    }
    return out;
}

std::optional<cplx> diffracted_attenuation(const FieldPoint& pt, const ProblemParams& p) {
    if (!(pt.r > 0.0)) return std::nullopt;
    const auto dc = diffraction_coefficient(pt.phi, p, pt.r);
    if (!dc) return std::nullopt;
    const double kr = p.k * pt.r;
    // k (r - x) without cancellation.
    const double dphase = p.k * pt.y * pt.y / (pt.r + pt.x);
    return (dc->regular + dc->singular) * expi(dphase) / std::sqrt(kr);
}

AssembledField assemble_zone(Zone zone, double sigma, double nu, double t, const AsymptoticOptions& opt) {
    AssembledField out;
    out.zone = zone;
    out.modeled = true;
    auto& b = out.breakdown;
    auto add_endpoints = [&](bool with_mm_pp) {
        const auto e = endpoint_contributions(sigma, nu, t);
        if (with_mm_pp) {
            if (e.mm) b.push_back(*e.mm);
            if (e.pp) b.push_back(*e.pp);
        }
        b.push_back(e.pm);
        b.push_back(e.mp);
    };
    auto add_ray = [&](RayFamily f) {
        if (auto r = ray_contribution(f, sigma, nu, t)) b.push_back(*r);
    };
    auto add_all = [&](const std::vector<Contribution>& v) { b.insert(b.end(), v.begin(), v.end()); };
    switch (zone) {
        case Zone::RayZone:
            add_ray(nu > t ? RayFamily::u2_after : RayFamily::u1_before);
            add_ray(RayFamily::u2_before);
            add_ray(RayFamily::u1_after);
            add_endpoints(true);
            break;
        case Zone::CausticZone:
            b.push_back(caustic_field(sigma, nu, t, opt));
            add_ray(RayFamily::u1_after);
            add_endpoints(true);
            break;
        case Zone::TransitionLeftOfQ:
        case Zone::TransitionRightOfQ: {
            auto tr = transition_field(sigma, nu, t, opt);
            if (tr.empty()) {
                // Inside the Q box the transition formulas are singular.
                add_all(q_zone_field(sigma, nu, t, opt));
                if (nu < t) add_ray(RayFamily::u1_before);
            } else {
                add_all(tr);
                if (sigma < std::sqrt(t)) add_ray(nu > t ? RayFamily::u2_after : RayFamily::u1_before);
            }
            add_endpoints(false);
            break;
        }
        case Zone::QZone:
            add_all(q_zone_field(sigma, nu, t, opt));
            // The incomplete Airy function covers I^{--}; I^{+-} keeps its own
            // critical point below nu = t.
            if (nu < t) add_ray(RayFamily::u1_before);
            add_endpoints(false);
            break;
        case Zone::PenetrationZone:
            if (auto c = penetration_field(sigma, nu, t)) b.push_back(*c);
            break;
        case Zone::NearLB_Unmodeled:
        case Zone::OutOfDomain: out.modeled = false; return out;
    }
    double amax = -1.0, weighted = 0.0;
    for (const auto& c : b) {
        out.value += c.value;
        const double a = std::abs(c.value);
        weighted += a * c.correction_estimate;
        if (a > amax) {
            amax = a;
            out.dominant = c.label;
        }
    }
    const double mag = std::abs(out.value);
    out.correction_estimate = mag > 0.0 ? weighted / mag : (weighted > 0.0 ? INFINITY : 0.0);
    return out;
}

AssembledField assemble_total(const FieldPoint& pt, const ProblemParams& p, const QuadConfig& cfg,
                              const AsymptoticOptions& opt) {
    const auto tag = classify_region(pt, p, opt.thresholds);
    if (tag.zone == Zone::OutOfDomain) throw std::domain_error("assemble_total: point outside the modeled domain");
    if (tag.zone == Zone::NearLB_Unmodeled) {
        AssembledField out;
        out.zone = tag.zone;
        out.strict = tag.strict;
        out.modeled = false;
        out.oracle = exact_attenuation(pt.sigma, pt.nu, p.t, cfg).value;
        out.value = *out.oracle;
        return out;
    }
    auto out = assemble_zone(tag.zone, pt.sigma, pt.nu, p.t, opt);
    out.strict = tag.strict;
    return out;
}

}  // namespace gdlab
