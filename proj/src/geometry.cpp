#include "gdlab/geometry.hpp"

#include "gdlab/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gdlab {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double reduced_phi(int which, double sigma, double nu, double t) {
    const double base = -sigma * (which == 3 ? t + nu : t - nu) - 2.0 / 3.0 * sigma * sigma * sigma;
    const double nt = t + sigma * sigma - nu;
    if (which == 3) return base + 2.0 / 3.0 * std::pow(nt + 2.0 * nu, 1.5);
    const double c = 2.0 / 3.0 * std::pow(nt, 1.5);
    return which == 1 ? base + c : base - c;
}

}  // namespace

ProblemParams make_params(double k, double a, int N) {
    if (!(k > 0.0) || !(a > 0.0)) throw std::domain_error("make_params: k and a must be positive");
    if (N < 1) throw std::domain_error("make_params: mode index N must be >= 1");
    if (k * a < 2.0) throw std::domain_error("make_params: k a must be >= 2 (m >= 1)");
    ProblemParams p;
    p.k = k;
    p.a = a;
    p.m = std::cbrt(k * a / 2.0);
    p.N = N;
    p.t = vprime_zero(N);
    p.gamma = std::sqrt(p.t) / p.m;
    p.b = a * p.t / (2.0 * p.m * p.m);
    p.t_large = p.t >= 5.0;
    p.t_small_vs_m = p.t <= 0.2 * std::pow(p.m, 0.8);
    return p;
}

ProblemParams make_params_m(double m, double a, int N) {
    if (!(m >= 1.0)) throw std::domain_error("make_params_m: m must be >= 1");
    auto p = make_params(2.0 * m * m * m / a, a, N);
    p.m = m;
    p.gamma = std::sqrt(p.t) / m;
    p.b = a * p.t / (2.0 * m * m);
    p.t_small_vs_m = p.t <= 0.2 * std::pow(m, 0.8);
    return p;
}

FieldPoint field_point(const ProblemParams& p, double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) throw std::domain_error("field_point: non-finite coordinates");
    if (y < 0.0) throw std::domain_error("field_point: y < 0 is below the boundary");
    if (x < 0.0) throw std::domain_error("field_point: only the right half-plane x >= 0 is modeled");
    FieldPoint f;
    f.x = x;
    f.y = y;
    f.s = x;
    f.n = y;
    f.sigma = p.m * x / p.a;
    f.nu = 2.0 * p.m * p.m * y / p.a;
    f.r = std::hypot(x, y);
    f.phi = (x == 0.0 && y == 0.0) ? 0.0 : std::atan2(y, x);
    f.nu_tilde = p.t + f.sigma * f.sigma - f.nu;
    if (f.sigma > 0.0) f.eps = std::sqrt(p.t) - f.nu / (2.0 * f.sigma);
    return f;
}

FieldPoint field_point_stretched(const ProblemParams& p, double sigma, double nu) {
    if (!std::isfinite(sigma) || !std::isfinite(nu)) throw std::domain_error("field_point: non-finite coordinates");
    if (nu < 0.0) throw std::domain_error("field_point: nu < 0 is below the boundary");
    if (sigma < 0.0) throw std::domain_error("field_point: only sigma >= 0 is modeled");
    auto f = field_point(p, p.a * sigma / p.m, p.a * nu / (2.0 * p.m * p.m));
    // Keep the stretched values exactly as given.
    f.sigma = sigma;
    f.nu = nu;
    f.nu_tilde = p.t + sigma * sigma - nu;
    f.eps.reset();
    if (sigma > 0.0) f.eps = std::sqrt(p.t) - nu / (2.0 * sigma);
    return f;
}

PointQ point_q(const ProblemParams& p) {
    const double s = std::sin(p.gamma), c = std::cos(p.gamma);
    return {p.a * s * c, p.a * s * s};
}

std::string_view to_string(RayFamily f) {
    switch (f) {
        case RayFamily::u1_before: return "u1_before";
        case RayFamily::u1_after: return "u1_after";
        case RayFamily::u2_before: return "u2_before";
        case RayFamily::u2_after: return "u2_after";
    }
    return "?";
}

double caustic_distance(const ProblemParams& p, double x, double y) { return p.b + x * x / (2.0 * p.a) - y; }

double reflection_discriminant(const ProblemParams& p, double x, double y) {
    const double u = p.a * p.gamma - x;
    const double w = 2.0 * p.a * (y - p.gamma * x);
    const double d = u * u - w;
    // On the caustic the two terms cancel; rounding must not make the
    // tangent root complex.
    const double scale = u * u + 2.0 * p.a * (std::fabs(y) + p.gamma * std::fabs(x));
    return std::fabs(d) <= 8.0 * std::numeric_limits<double>::epsilon() * scale ? 0.0 : d;
}

std::vector<ReflectionRoot> reflection_arclengths(const ProblemParams& p, double x, double y) {
    if (x < 0.0 || y < 0.0) throw std::domain_error("reflection_arclengths: need x >= 0, y >= 0");
    const double lo = -2.0 * p.a * p.gamma;
    const double slack = 1e-13 * p.a * p.gamma;
    auto make = [&](int idx, double s) {
        ReflectionRoot r;
        r.index = idx;
        r.s_hat = s;
        r.exists = std::isfinite(s) && s >= lo - slack && s <= slack;
        return r;
    };
    const double d = reflection_discriminant(p, x, y);
    const double dm = reflection_discriminant(p, x, -y);
    const double c = x - p.a * p.gamma;
    std::vector<ReflectionRoot> out;
    if (d >= 0.0) {
        const double q = std::sqrt(d);
        out.push_back(make(1, c - q));
        out.push_back(make(2, c + q));
    } else {
        out.push_back(make(1, kNaN));
        out.push_back(make(2, kNaN));
    }
    out.push_back(make(3, dm >= 0.0 ? c - std::sqrt(dm) : kNaN));
    return out;
}

double collinearity_residual(const ProblemParams& p, double x, double y, double s_hat, bool mirror) {
    const double Y = mirror ? -y : y;
    const double xi = s_hat;
    const double eta = s_hat * s_hat / (2.0 * p.a);
    const double h = -s_hat * s_hat / (2.0 * p.a) - s_hat * p.gamma;
    const double lhs = (Y - h) * xi, rhs = (eta - h) * x;
    const double scale = std::fabs(lhs) + std::fabs(rhs);
    return scale > 0.0 ? std::fabs(lhs - rhs) / scale : 0.0;
}

double exact_reflection_arclength(const ProblemParams& p, double x, double y, double s_guess, bool mirror) {
    const double Y = mirror ? -y : y;
    const double a = p.a;
    double s = s_guess;
    for (int it = 0; it < 60; ++it) {
        const double th = s / a;
        const double xi = a * std::sin(th), eta = a * (1.0 - std::cos(th));
        const double al = p.gamma + th;
        const double F = (Y - eta) * std::cos(al) - (x - xi) * std::sin(al);
        const double dF = std::sin(p.gamma) - ((Y - eta) * std::sin(al) + (x - xi) * std::cos(al)) / a;
        if (dF == 0.0) return kNaN;
        const double step = F / dF;
        s -= step;
        if (std::fabs(step) < 1e-15 * (std::fabs(s) + a * p.gamma)) return s;
    }
    return kNaN;
}

double spreading(const ProblemParams& p, double x, double y, bool mirror) {
    const double n = caustic_distance(p, x, mirror ? -y : y);
    return n >= 0.0 ? std::sqrt(2.0 * n / p.a) : kNaN;
}

std::vector<RayData> resolve_rays(const ProblemParams& p, double x, double y) {
    std::vector<RayData> out;
    for (const auto& r : reflection_arclengths(p, x, y)) {
        if (!r.exists) continue;
        RayData d;
        if (r.index == 1) d.family = (y > p.b) ? RayFamily::u2_after : RayFamily::u1_before;
        if (r.index == 2) d.family = RayFamily::u2_before;
        if (r.index == 3) d.family = RayFamily::u1_after;
        d.s_hat = r.s_hat;
        d.psi = -r.s_hat / p.a;
        d.alpha = p.gamma - d.psi;
        d.h = -r.s_hat * r.s_hat / (2.0 * p.a) - r.s_hat * p.gamma;
        d.p = 2.0 * p.m * p.m * d.h / p.a;
        d.xi = r.s_hat;
        d.eta = r.s_hat * r.s_hat / (2.0 * p.a);
        d.spreading = spreading(p, x, y, r.index == 3);
        out.push_back(d);
    }
    return out;
}

AxisOrdinates axis_ordinates(const FieldPoint& pt, double t) {
    AxisOrdinates o;
    const double nt = pt.nu_tilde;
    if (nt >= 0.0) {
        const double r = std::sqrt(nt);
        o.p1 = t - (pt.sigma - r) * (pt.sigma - r);
        o.p2 = t - (pt.sigma + r) * (pt.sigma + r);
    }
    const double r3 = std::sqrt(nt + 2.0 * pt.nu);
    o.p3 = t - (pt.sigma - r3) * (pt.sigma - r3);
    o.p4 = t - (pt.sigma + r3) * (pt.sigma + r3);
    return o;
}

std::optional<double> reduced_eikonal(EikonalKind kind, double sigma, double nu, double t, std::optional<double> ordinate) {
    const double nt = t + sigma * sigma - nu;
    switch (kind) {
        case EikonalKind::phi1:
            if (nt < 0.0) return std::nullopt;
            return reduced_phi(1, sigma, nu, t);
        case EikonalKind::phi2:
            if (nt < 0.0) return std::nullopt;
            return reduced_phi(2, sigma, nu, t);
        case EikonalKind::phi3: return reduced_phi(3, sigma, nu, t);
        case EikonalKind::cylindrical:
        case EikonalKind::cylindrical_exact:
            if (!(sigma > 0.0)) return std::nullopt;
            return nu * nu / (4.0 * sigma);
        case EikonalKind::tau_plus:
        case EikonalKind::tau_minus: {
            if (!ordinate || *ordinate > t || !(sigma > 0.0)) return std::nullopt;
            const double pp = *ordinate;
            const double c = 2.0 / 3.0 * std::pow(t - pp, 1.5);
            const double g = (pp - nu) * (pp - nu) / (4.0 * sigma);
            return kind == EikonalKind::tau_plus ? g + c : g - c;
        }
    }
    return std::nullopt;
}

std::optional<double> eikonal(EikonalKind kind, const FieldPoint& pt, const ProblemParams& p, std::optional<double> ordinate) {
    if (kind == EikonalKind::cylindrical_exact) return p.k * pt.r;
    auto red = reduced_eikonal(kind, pt.sigma, pt.nu, p.t, ordinate);
    if (!red) return std::nullopt;
    return 2.0 * p.m * p.m * pt.sigma + *red;
}

double phi3_near_limit(const FieldPoint& pt, double t) {
    const double e = pt.eps.value_or(kNaN), s = pt.sigma, st = std::sqrt(t);
    return 2.0 / 3.0 * t * st + s * t - 2.0 * s * st * e + s * s * e * e / (s + st);
}

double cylindrical_near_limit(const FieldPoint& pt, double t) {
    const double e = pt.eps.value_or(kNaN), s = pt.sigma, st = std::sqrt(t);
    return s * t - 2.0 * s * st * e + s * e * e;
}

double exact_ray_eikonal(const ProblemParams& p, double x, double y, double s_hat, bool after) {
    const double th = s_hat / p.a;
    const double xi = p.a * std::sin(th), eta = p.a * (1.0 - std::cos(th));
    const double al = p.gamma + th;
    const double h = eta - xi * std::tan(al);
    const double mp = std::hypot(x, y - h);
    const double rc = p.a * std::cos(p.gamma);  // caustic radius a - b
    const double cubic = rc * (std::tan(std::fabs(al)) - std::fabs(al));
    // Sign convention of the stretched forms: + after the caustic, - before.
    return p.k * (mp + (after ? cubic : -cubic));
}

ZetaValues zeta_values(double sigma, double nu, double t) {
    ZetaValues z;
    const double st = std::sqrt(t);
    const double e = st - nu / (2.0 * sigma);
    const double pre = std::sqrt(sigma) * std::sqrt(st) * e;
    z.zeta_gt = sigma > st ? pre / std::sqrt(sigma - st) : kNaN;
    z.zeta_lt = sigma < st ? pre / std::sqrt(st - sigma) : kNaN;
    z.zeta_star = pre / std::sqrt(st + sigma);
    return z;
}

std::string_view to_string(Zone z) {
    switch (z) {
        case Zone::RayZone: return "RayZone";
        case Zone::CausticZone: return "CausticZone";
        case Zone::TransitionLeftOfQ: return "TransitionLeftOfQ";
        case Zone::TransitionRightOfQ: return "TransitionRightOfQ";
        case Zone::QZone: return "QZone";
        case Zone::PenetrationZone: return "PenetrationZone";
        case Zone::NearLB_Unmodeled: return "NearLB_Unmodeled";
        case Zone::OutOfDomain: return "OutOfDomain";
    }
    return "?";
}

std::string_view to_string(AngleRegime r) {
    switch (r) {
        case AngleRegime::near_limit: return "near_limit";
        case AngleRegime::intermediate: return "intermediate";
        case AngleRegime::far: return "far";
    }
    return "?";
}

AngleRegime angle_regime(double ratio) {
    if (ratio < 0.1) return AngleRegime::near_limit;
    if (ratio <= 10.0) return AngleRegime::intermediate;
    return AngleRegime::far;
}

RegionFlags region_flags(const FieldPoint& pt, const ProblemParams& p, const ZoneThresholds& th) {
    RegionFlags f;
    const double s = pt.sigma, nu = pt.nu, t = p.t, st = std::sqrt(t), nt = pt.nu_tilde;
    f.obl = std::fabs(s) < 0.5 * std::pow(p.m, 0.4) && nu < 0.5 * p.m;
    f.sgg1 = s >= 4.0;
    f.att4 = nt * nt <= th.caustic_strip * s;
    if (p.k > 0.0 && pt.r > 0.0) f.phi4 = p.k * pt.r * std::pow(pt.phi, 4) <= 0.1;
    if (pt.eps && s > 0.0) {
        const double e = *pt.eps;
        f.att1 = s * e * e >= th.att && st * e * e >= th.att;
        const auto reg = angle_regime(std::fabs(e) / st);
        f.e_lt_ft = reg == AngleRegime::near_limit;
        f.e_eq_ft = reg == AngleRegime::intermediate;
        f.e_gt_ft = reg == AngleRegime::far;
        const double dq = std::fabs(s - st);
        f.att3g = st * dq >= th.transition_width * s && th.transition_width * s * std::fabs(e) <= dq;
    }
    // att2 and near-l_B over the rays that actually reach the point.
    if (s > 0.0) {
        const auto ord = axis_ordinates(pt, t);
        bool all_ok = true, any_near = false;
        auto check = [&](double prod, double pj) {
            if (pj < 0.0 || pj > t) return;
            if (!(prod >= th.att)) all_ok = false;
            if (t - pj <= th.near_lb) any_near = true;
        };
        if (nt > 0.0) {
            const double r = std::sqrt(nt);
            check(std::pow(std::fabs(s - r), 3) * nt / (s * s), *ord.p1);
            check(std::pow(s + r, 3) * nt / (s * s), *ord.p2);
        }
        const double n3 = nt + 2.0 * nu;
        check(std::pow(std::fabs(std::sqrt(n3) - s), 3) * n3 / (s * s), ord.p3);
        f.att2 = all_ok;
        f.near_lb = any_near;
    }
    return f;
}

RegionTag classify_region(const FieldPoint& pt, const ProblemParams& p, const ZoneThresholds& th) {
    RegionTag tag;
    tag.flags = region_flags(pt, p, th);
    const auto& f = tag.flags;
    const double s = pt.sigma, t = p.t, st = std::sqrt(t), nt = pt.nu_tilde;
    auto set = [&](Zone z, bool strict) {
        tag.zone = z;
        tag.strict = strict;
        return tag;
    };
    if (!f.obl || !(s > 0.0)) return set(Zone::OutOfDomain, true);
    const double e = *pt.eps;
    const bool strip = nt * nt <= th.caustic_strip * s;
    const bool side_left = s < st;

    if ((s - st) * (s - st) <= th.q_box * st && strip) return set(Zone::QZone, true);
    if (strip && side_left && s >= th.caustic_sigma_min && s * e * e >= th.caustic_endpoint)
        return set(Zone::CausticZone, true);
    const double dq = std::fabs(s - st);
    if (std::fabs(e) <= th.transition_eps && dq >= th.transition_width * s * std::fabs(e) && st * dq >= s &&
        !f.near_lb)
        return set(side_left ? Zone::TransitionLeftOfQ : Zone::TransitionRightOfQ, true);
    // Just above the caustic no caustic-family ray arrives but the Airy tail
    // is still significant; leave those points to the caustic formula.
    const bool shadow_band = nt < 0.0 && side_left && -nt < th.caustic_shadow;
    if (f.att1 && f.att2 && !f.near_lb && !shadow_band) return set(Zone::RayZone, true);
    if (s <= th.penetration_sigma && std::fabs(pt.nu - t) <= th.penetration_nu) return set(Zone::PenetrationZone, true);
    if (f.near_lb) return set(Zone::NearLB_Unmodeled, true);

    // Fallback: every in-domain point gets the zone whose assembly is the
    // closest description, flagged non-strict.
    if ((s - st) * (s - st) <= th.q_box * st) return set(Zone::QZone, false);
    if (strip && side_left) return set(Zone::QZone, false);  // gap between caustic strip and Q
    if (std::fabs(e) <= th.transition_eps && dq > 0.0)
        return set(side_left ? Zone::TransitionLeftOfQ : Zone::TransitionRightOfQ, false);
    if (nt < 0.0 && side_left) return set(Zone::CausticZone, false);  // Airy decay above the caustic
    return set(Zone::RayZone, false);
}

}  // namespace gdlab
