#include "gdlab/acceptance.hpp"

#include "gdlab/asymptotics.hpp"
#include "gdlab/geometry.hpp"
#include "gdlab/parallel.hpp"
#include "gdlab/specfun.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

namespace gdlab {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

// Collects "name=value<=limit" items and the overall verdict.
struct Checks {
    bool ok = true;
    std::ostringstream out;
    void le(const char* name, double value, double limit) {
        const bool pass = value <= limit;  // NaN fails
        ok = ok && pass;
        item(name, value, pass ? "<=" : ">", limit);
    }
    void ge(const char* name, double value, double limit) {
        const bool pass = value >= limit;
        ok = ok && pass;
        item(name, value, pass ? ">=" : "<", limit);
    }
    void flag(const char* name, bool pass, const std::string& note = {}) {
        ok = ok && pass;
        sep();
        out << name << '=' << (pass ? "yes" : "no");
        if (!note.empty()) out << " (" << note << ')';
    }
    void info(const std::string& s) {
        sep();
        out << s;
    }

private:
    bool first = true;
    void sep() {
        if (!first) out << "; ";
        first = false;
    }
    void item(const char* name, double value, const char* rel, double limit) {
        sep();
        out << name << '=' << fmt("%.3g", value) << rel << fmt("%.3g", limit);
    }
};

// Relative error with the grid floor 1e-3 max|exact|.
struct Compared {
    double worst = 0.0;
    std::size_t count = 0, failing = 0;
};
Compared compare(const std::vector<cplx>& exact, const std::vector<cplx>& approx, double tol) {
    double emax = 0.0;
    for (const auto& e : exact) emax = std::max(emax, std::abs(e));
    Compared c;
    c.count = exact.size();
    for (std::size_t i = 0; i < exact.size(); ++i) {
        const double r = std::abs(approx[i] - exact[i]) / std::max(std::abs(exact[i]), 1e-3 * emax);
        c.worst = std::max(c.worst, r);
        if (!(r <= tol)) ++c.failing;
    }
    return c;
}

struct Pt {
    double sigma, nu;
};

std::vector<cplx> oracle(const std::vector<Pt>& pts, double t, const QuadConfig& cfg) {
    std::vector<cplx> out(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) { out[i] = exact_attenuation(pts[i].sigma, pts[i].nu, t, cfg).value; });
    return out;
}

std::vector<cplx> assembled(const std::vector<Pt>& pts, Zone zone, double t, const AsymptoticOptions& ao = {}) {
    std::vector<cplx> out;
    for (const auto& p : pts) out.push_back(assemble_zone(zone, p.sigma, p.nu, t, ao).value);
    return out;
}

double nu_at_eps(double sigma, double eps, double t) { return 2.0 * sigma * (std::sqrt(t) - eps); }

// 1. Special functions.
void special_functions(Checks& c) {
    double ode = 0.0;
    const double h = 1e-5;
    for (int i = 0; i <= 400; ++i) {
        const double z = -20.0 + 0.1 * i;
        const auto a = airy_v(z);
        const double d2 = (airy_v(z + h).v_prime - airy_v(z - h).v_prime) / (2.0 * h);
        ode = std::max(ode, std::fabs(d2 - z * a.v) / (1.0 + std::fabs(z * a.v)));
    }
    c.le("airy_ode_residual", ode, 1e-8);
    double vz = 0.0;
    for (int N = 1; N <= 30; ++N) vz = std::max(vz, std::fabs(airy_v(-vprime_zero(N)).v_prime));
    c.le("max|v'(-t_N)|", vz, 1e-12);
    c.le("|Phi(0)-1/2|", std::abs(fresnel_phi(0.0) - 0.5), 1e-12);
    double sym = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double z = -5.0 + 0.1 * i;
        sym = std::max(sym, std::abs(fresnel_phi(z) + fresnel_phi(-z) - 1.0));
    }
    c.le("max|Phi(z)+Phi(-z)-1|", sym, 1e-10);
    double dxi = 0.0;
    const double hx = 1e-4;
    for (double eta : {-4.0, -1.0, 0.0, 1.5, 4.0})
        for (double xi : {-3.0, -1.0, 0.0, 0.7, 2.5}) {
            const cplx fd = (incomplete_airy(eta, xi + hx) - incomplete_airy(eta, xi - hx)) / (2.0 * hx);
            const cplx an = -std::exp(kI * (eta * xi - xi * xi * xi / 3.0));
            dxi = std::max(dxi, std::abs(fd - an));
        }
    c.le("dI/dxi_fd_error", dxi, 1e-6);
}

// 2. Exact solution.
void exact_solution(Checks& c, const AcceptanceOptions& opt) {
    const double t5 = vprime_zero(5), t20 = vprime_zero(20);
    QuadConfig fine = opt.quad;
    fine.abs_tol = 1e-12;
    // U is even in nu, so the one-sided stencil errs by O(h^3).
    double neu = 0.0;
    for (double s : {0.5, 2.0}) neu = std::max(neu, std::abs(neumann_derivative(s, t20, 1e-3, fine)));
    c.le("|dU/dnu(nu=0)|", neu, 1e-6);

    // sigma -> 0+ in the penetration regime.
    std::vector<double> nus;
    for (int i = -2; i <= 2; ++i) nus.push_back(t5 + i);
    std::vector<double> dev(nus.size());
    parallel_for(nus.size(), [&](std::size_t i) {
        dev[i] = std::abs(exact_attenuation(1e-3, nus[i], t5, opt.quad).value - airy_v(nus[i] - t5).v);
    });
    c.le("max|U(1e-3,nu)-v(nu-t)|", *std::max_element(dev.begin(), dev.end()), 1e-2);

    // Norm conservation over [0, t + 20].
    const double ref = incident_norm(t5, t5 + 20.0).value;
    const std::vector<double> sig{0.5, 1.0, 2.0};
    std::vector<double> drift(sig.size());
    parallel_for(sig.size(), [&](std::size_t i) {
        drift[i] = std::fabs(field_norm(sig[i], t5, t5 + 20.0, opt.quad).value - ref) / ref;
    });
    c.le("norm_drift", *std::max_element(drift.begin(), drift.end()), 1e-4);

    // PDE residual and its second-order step convergence.
    const double s0 = 1.0, n0 = t20;
    const double u = std::abs(exact_attenuation(s0, n0, t20, fine).value);
    const double r1 = std::abs(pde_residual(s0, n0, t20, 0.01, fine));
    const double r2 = std::abs(pde_residual(s0, n0, t20, 0.005, fine));
    c.le("pde_residual/|U|(h=0.005)", r2 / u, 1e-3);
    const double order = std::log2(r1 / r2);
    c.flag("pde_second_order", std::fabs(order - 2.0) <= 0.3, "observed order " + fmt("%.2f", order));
}

// 3. Geometry identities.
void geometry_identities(Checks& c, const AcceptanceOptions& opt) {
    const auto P = make_params_m(opt.m, 1.0, 20);
    const double xs = P.a / P.m, ys = P.a / (2.0 * P.m * P.m);  // sigma, nu units
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> us(0.0, 12.0), un(0.0, 45.0);
    std::size_t disagree = 0;
    double colin = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double x = us(rng) * xs, y = un(rng) * ys;
        const double d = reflection_discriminant(P, x, y), n = caustic_distance(P, x, y);
        if ((d > 0.0) != (n > 0.0) || (d < 0.0) != (n < 0.0)) ++disagree;
        for (const auto& r : reflection_arclengths(P, x, y))
            if (r.exists) colin = std::max(colin, collinearity_residual(P, x, y, r.s_hat, r.index == 3));
    }
    c.le("sign_disagreements", static_cast<double>(disagree), 0.0);
    c.le("collinearity_residual", colin, 1e-8);

    double merge = 0.0;
    for (double sg = 0.5; sg <= 12.0; sg += 0.5) {
        const double x = sg * xs, y = P.b + x * x / (2.0 * P.a);
        const auto r = reflection_arclengths(P, x, y);
        if (std::isfinite(r[0].s_hat) && std::isfinite(r[1].s_hat))
            merge = std::max(merge, std::fabs(r[0].s_hat - r[1].s_hat) / (P.a * P.gamma));
        else
            merge = INFINITY;
    }
    c.le("|s1-s2|/(a gamma) on caustic", merge, 1e-8);

    const double t = P.t, st = std::sqrt(t);
    double p1 = 0.0;
    for (double sg = st + 0.25; sg <= 12.0; sg += 0.25) {
        const auto o = axis_ordinates(field_point_stretched(P, sg, 2.0 * sg * st), t);
        p1 = std::max(p1, o.p1 ? std::fabs(*o.p1) : INFINITY);
    }
    c.le("|p1| on limit ray", p1, 1e-10);

    double eik = 0.0;
    for (double sg = 0.5; sg <= 12.0; sg += 0.5) {
        for (double pp : {0.0, 0.3 * t, 0.8 * t}) {
            const double nu = 10.0;
            const double d = *reduced_eikonal(EikonalKind::tau_plus, sg, nu, t, pp) -
                             *reduced_eikonal(EikonalKind::tau_minus, sg, nu, t, pp);
            const double want = 4.0 / 3.0 * std::pow(t - pp, 1.5);
            eik = std::max(eik, std::fabs(d - want) / (1.0 + want));
        }
        const double nc = t + sg * sg;  // nu~ = 0
        const double f1 = *reduced_eikonal(EikonalKind::phi1, sg, nc, t);
        const double f2 = *reduced_eikonal(EikonalKind::phi2, sg, nc, t);
        eik = std::max(eik, std::fabs(f1 - f2) / (1.0 + std::fabs(f1)));
        const double nl = 2.0 * sg * st;  // eps = 0
        const double f3 = *reduced_eikonal(EikonalKind::phi3, sg, nl, t);
        const double cyl = *reduced_eikonal(EikonalKind::cylindrical, sg, nl, t);
        eik = std::max(eik, std::fabs(f3 - cyl - 2.0 / 3.0 * t * st) / (1.0 + std::fabs(f3)));
    }
    c.le("eikonal_identities", eik, 1e-10);
}

// 4. Stationary-phase regime.
void ray_regime(Checks& c, const AcceptanceOptions& opt) {
    const auto P = make_params_m(opt.m, 1.0, 20);
    std::vector<Pt> pts;
    for (int i = 1; i <= 24; ++i)
        for (int j = 0; j <= 45; ++j) {
            const double s = 0.5 * i, n = j;
            const auto tag = classify_region(field_point_stretched(P, s, n), P);
            if (tag.zone == Zone::RayZone && tag.strict && tag.flags.att1 && tag.flags.att2) pts.push_back({s, n});
        }
    const auto ex = oracle(pts, P.t, opt.quad);
    const auto r = compare(ex, assembled(pts, Zone::RayZone, P.t), 0.05 * opt.tolerance_scale);
    c.ge("points", static_cast<double>(r.count), 20.0);
    c.le("worst_rel_err", r.worst, 0.05 * opt.tolerance_scale);
    c.info("over_tolerance=" + std::to_string(r.failing) + "/" + std::to_string(r.count));
}

// 5. Caustic regime, both Airy-argument signs.
void caustic_regime(Checks& c, const AcceptanceOptions& opt) {
    const double t = vprime_zero(20);
    std::vector<Pt> pts;
    for (double s = 6.0; s <= 12.0 + 1e-12; s += 0.5)
        for (double f : {-1.0, -0.5, 0.0, 0.5, 1.0}) pts.push_back({s, t + s * s - f * std::sqrt(s / 4.0)});
    const auto ex = oracle(pts, t, opt.quad);
    AsymptoticOptions plus, minus;
    plus.airy_sign = +1;
    minus.airy_sign = -1;
    const double tol = 0.10 * opt.tolerance_scale;
    const auto rp = compare(ex, assembled(pts, Zone::CausticZone, t, plus), tol);
    const auto rm = compare(ex, assembled(pts, Zone::CausticZone, t, minus), tol);
    const int best = rm.worst <= rp.worst ? -1 : +1;
    c.info("worst(v(+nu~))=" + fmt("%.3g", rp.worst) + ", worst(v(-nu~))=" + fmt("%.3g", rm.worst));
    c.flag("frozen_sign_is_minimizer", AsymptoticOptions{}.airy_sign == best, "minimizer v(" +
                                                                                 std::string(best < 0 ? "-" : "+") +
                                                                                 "nu~)");
    c.le("worst_rel_err[6,12]", std::min(rp.worst, rm.worst), tol);

    // Left of Q, where the caustic exists: strict CausticZone points (diagnostic).
    const auto P = make_params_m(opt.m, 1.0, 20);
    std::vector<Pt> left;
    for (double s = 1.0; s < std::sqrt(t); s += 0.25)
        for (double f : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            const Pt q{s, t + s * s - f * std::sqrt(s / 4.0)};
            const auto tag = classify_region(field_point_stretched(P, q.sigma, q.nu), P);
            if (tag.zone == Zone::CausticZone && tag.strict) left.push_back(q);
        }
    const auto el = oracle(left, t, opt.quad);
    const auto rl = compare(el, assembled(left, Zone::CausticZone, t), 1.0);
    c.info("diagnostic: strict CausticZone left of Q, " + std::to_string(rl.count) +
           " points, worst_rel_err=" + fmt("%.3g", rl.worst));
}

// 6. Transition regimes and the Fresnel-limit degeneration.
void transition_regime(Checks& c, const AcceptanceOptions& opt) {
    const double t = vprime_zero(20), st = std::sqrt(t);
    const double tol = 0.10 * opt.tolerance_scale;
    for (int side = 0; side < 2; ++side) {
        const double s = side == 0 ? 0.5 * st : 1.8 * st;
        std::vector<Pt> pts;
        for (int i = -4; i <= 4; ++i) pts.push_back({s, nu_at_eps(s, 0.25 * i, t)});
        const auto ex = oracle(pts, t, opt.quad);
        const auto r = compare(ex, assembled(pts, side == 0 ? Zone::TransitionLeftOfQ : Zone::TransitionRightOfQ, t), tol);
        c.le(side == 0 ? "worst_rel_err(0.5 sqrt t)" : "worst_rel_err(1.8 sqrt t)", r.worst, tol);
    }
    // |zeta| = 4: each Fresnel term equals H * (its Phi -> 1 limit) plus the
    // leading end-point term of the matching I^{ab}, up to O(zeta^{-2}).
    double worst = 0.0;
    const double P0 = 1.0 / (4.0 * std::sqrt(kPi) * std::pow(t, 0.25));
    const double th = 2.0 / 3.0 * t * st;
    for (double s : {0.5 * st, 1.8 * st})
        for (double zeta : {-4.0, 4.0})
            for (int which = 0; which < 2; ++which) {
                const double D = which == 0 ? std::fabs(s - st) : st + s;
                const double eps = zeta * std::sqrt(D) / (std::sqrt(s) * std::pow(t, 0.25));
                const double nu = nu_at_eps(s, eps, t);
                const double cyl = nu * nu / (4.0 * s);
                const auto tr = transition_field(s, nu, t);
                const auto& T = tr[which];
                const double P = P0 / std::sqrt(s);
                cplx lim, lead;
                bool lit;
                if (which == 1) {  // pp_03, lit below the limit ray
                    lim = std::polar(1.0, th + cyl - zeta * zeta - kPi / 4) / (2.0 * std::sqrt(D));
                    lead = -P * std::polar(1.0, th + cyl) / eps;
                    lit = zeta > 0.0;
                } else if (s > st) {  // mm_01
                    lim = std::polar(1.0, -th + cyl + zeta * zeta - kPi / 4) / (2.0 * std::sqrt(D));
                    lead = kI * P * std::polar(1.0, -th + cyl) / eps;
                    lit = zeta > 0.0;
                } else {  // mm_02
                    lim = std::polar(1.0, -th + cyl - zeta * zeta + kPi / 4) / (2.0 * std::sqrt(D));
                    lead = kI * P * std::polar(1.0, -th + cyl) / eps;
                    lit = zeta < 0.0;
                }
                const cplx target = (lit ? lim : 0.0) + lead;
                worst = std::max(worst, std::abs(T.value - target) / std::abs(lim));
            }
    c.le("degeneration_dev(|zeta|=4)", worst, 0.05);
}

// 7. Q zone and overlap consistency.
void q_regime(Checks& c, const AcceptanceOptions& opt) {
    const double t = vprime_zero(20), st = std::sqrt(t), half = 0.5 * std::pow(t, 0.25);
    const double tol = 0.15 * opt.tolerance_scale;
    std::vector<Pt> box;
    for (double fs : {-1.0, -0.5, 0.0, 0.5, 1.0})
        for (double fn : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
            const double s = st + fs * half;
            box.push_back({s, t + s * s - fn * std::sqrt(s / 4.0)});
        }
    const auto ex = oracle(box, t, opt.quad);
    const auto r = compare(ex, assembled(box, Zone::QZone, t), tol);
    c.le("worst_rel_err(box)", r.worst, tol);

    // Overlap with the caustic description: caustic strip from the box edge
    // towards the caustic zone (left of Q; there is no caustic right of Q).
    std::vector<Pt> edge;
    for (double k : {1.0, 1.5, 2.0}) {
        const double s = st - k * half;
        for (double fn : {-1.0, 0.0, 1.0}) edge.push_back({s, t + s * s - fn * std::sqrt(s / 4.0)});
    }
    const auto ee = oracle(edge, t, opt.quad);
    const auto q1 = assembled(edge, Zone::QZone, t), c1 = assembled(edge, Zone::CausticZone, t);
    double dc = 0.0, dk[3] = {0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < edge.size(); ++i) {
        const double d = std::abs(q1[i] - c1[i]) / std::abs(ee[i]);
        dc = std::max(dc, d);
        dk[i / 3] = std::max(dk[i / 3], d);
    }
    c.le("|Q-caustic|/|U| (strip, box edge to 2x)", dc, tol);
    c.info("by distance 1x/1.5x/2x: " + fmt("%.3g", dk[0]) + "/" + fmt("%.3g", dk[1]) + "/" + fmt("%.3g", dk[2]));

    // Overlap with the transition descriptions: near the limit ray from the
    // box edges outwards, on both sides.
    std::vector<Pt> lim;
    for (double k : {1.0, 1.25, 1.5})
        for (double sgn : {-1.0, 1.0})
            for (double e : {-0.2, 0.0, 0.2}) {
                const double s = st + sgn * k * half;
                lim.push_back({s, nu_at_eps(s, e, t)});
            }
    const auto el = oracle(lim, t, opt.quad);
    const auto q2 = assembled(lim, Zone::QZone, t);
    double dt = 0.0, dl = 0.0, dr = 0.0;
    for (std::size_t i = 0; i < lim.size(); ++i) {
        const bool left = lim[i].sigma < st;
        const auto a = assemble_zone(left ? Zone::TransitionLeftOfQ : Zone::TransitionRightOfQ, lim[i].sigma,
                                     lim[i].nu, t).value;
        const double d = std::abs(q2[i] - a) / std::abs(el[i]);
        dt = std::max(dt, d);
        (left ? dl : dr) = std::max(left ? dl : dr, d);
    }
    c.le("|Q-transition|/|U| (limit ray, box edge to 1.5x)", dt, tol);
    c.info("left/right: " + fmt("%.3g", dl) + "/" + fmt("%.3g", dr));
}

// 8. End-point and diffraction-coefficient structure.
void diffraction_structure(Checks& c, const AcceptanceOptions& opt) {
    double cosw = 0.0;
    for (int N : {10, 20, 30}) {
        const double t = vprime_zero(N);
        cosw = std::max(cosw, std::fabs(std::cos(2.0 / 3.0 * t * std::sqrt(t) + kPi / 4)) * t * std::sqrt(t) / 2.0);
    }
    c.le("|cos(2t^1.5/3+pi/4)|*t^1.5/2", cosw, 1.0);

    const auto P = make_params_m(opt.m, 1.0, 20);
    double lo = INFINITY, hi = 0.0;
    for (double ratio = 0.01; ratio < 0.0999; ratio += 0.01) {
        for (double sgn : {-1.0, 1.0}) {
            const double phi = P.gamma * (1.0 - sgn * ratio);
            const auto dc = diffraction_coefficient(phi, P);
            const double d = P.gamma - phi;
            const double v = std::abs(dc->singular * d * d * d);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    c.le("spread of A_s (gamma-phi)^3", hi / lo - 1.0, 0.01);

    // Fixed regime point (gamma - phi)/gamma = 0.05 at fixed k, a -> 2a.
    const auto P2 = make_params(P.k, 2.0 * P.a, 20);
    const double f1 = std::abs(diffraction_coefficient(P.gamma * 0.95, P)->singular);
    const double f2 = std::abs(diffraction_coefficient(P2.gamma * 0.95, P2)->singular);
    const double factor = f2 / f1;
    c.flag("nonlinear_in_1/a", std::fabs(factor - 2.0) > 0.02 && std::fabs(factor - 0.5) > 0.005,
           "A_s(2a)/A_s(a)=" + fmt("%.4f", factor));
}

// 9. Penetration.
void penetration(Checks& c, const AcceptanceOptions& opt) {
    const double t = vprime_zero(20);
    std::vector<double> nus;
    for (int i = -4; i <= 4; ++i) nus.push_back(t + 0.25 * i);
    std::vector<double> rel(nus.size()), ratio(nus.size());
    parallel_for(nus.size(), [&](std::size_t i) {
        const auto pm = partial_integral(PartialKind::I2_minus, 0.02, nus[i], t, opt.quad).value;
        const auto a = exact_attenuation(0.02, nus[i], t, opt.quad);
        const double v = airy_v(nus[i] - t).v;
        rel[i] = std::abs(pm - v) / std::fabs(v);
        ratio[i] = std::abs(a.I3) / std::abs(a.I2);
    });
    c.le("max|I2- - v|/|v|", *std::max_element(rel.begin(), rel.end()), 0.05 * opt.tolerance_scale);
    c.le("max|I3|/|I2|", *std::max_element(ratio.begin(), ratio.end()), 1e-4);
}

struct Entry {
    int id;
    const char* title;
    void (*run)(Checks&, const AcceptanceOptions&);
};

const Entry kEntries[] = {
    {1, "special functions", [](Checks& c, const AcceptanceOptions&) { special_functions(c); }},
    {2, "exact solution sanity", exact_solution},
    {3, "geometry identities", geometry_identities},
    {4, "stationary-phase regime", ray_regime},
    {5, "caustic regime", caustic_regime},
    {6, "transition regimes", transition_regime},
    {7, "Q zone", q_regime},
    {8, "end-point / diffraction structure", diffraction_structure},
    {9, "penetration", penetration},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& report) {
    std::vector<CriterionResult> out;
    for (const auto& e : kEntries) {
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), e.id) == opt.only.end()) continue;
        CriterionResult r;
        r.id = e.id;
        r.title = e.title;
        const auto t0 = std::chrono::steady_clock::now();
        Checks c;
        try {
            e.run(c, opt);
            r.passed = c.ok;
            r.detail = c.out.str();
        } catch (const std::exception& ex) {
            r.passed = false;
            r.detail = c.out.str() + (c.out.str().empty() ? "" : "; ") + "error: " + ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (report) report(r);
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    char head[128];
    std::snprintf(head, sizeof head, "%s C%d %s (%.2f s): ", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                  r.seconds);
    return head + r.detail;
}

}  // namespace gdlab
