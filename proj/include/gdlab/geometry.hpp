#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace gdlab {

// Physical and scaled constants of one diffraction problem.  gamma and b are
// defined exactly as sqrt(t)/m and a t/(2 m^2); the relation m gamma ~ sqrt(t)
// is therefore an identity and the exact-trigonometric quantities (e.g. point
// Q) are computed from this gamma.
struct ProblemParams {
    double k = 0.0;
    double a = 0.0;
    double m = 0.0;  // Fock parameter (ka/2)^{1/3}
    int N = 0;       // index of the zero of v'
    double t = 0.0;  // t_N, v'(-t_N) = 0
    double gamma = 0.0;
    double b = 0.0;
    bool t_large = false;           // t >= 5
    bool t_small_vs_m = false;      // t <= 0.2 m^{4/5}
};

// Throws std::domain_error for k <= 0, a <= 0, N < 1 or k a < 2.
[[nodiscard]] ProblemParams make_params(double k, double a, int N);
// Same, parametrized by m instead of k (k = 2 m^3 / a).
[[nodiscard]] ProblemParams make_params_m(double m, double a, int N);

struct FieldPoint {
    double x = 0.0, y = 0.0;
    double s = 0.0, n = 0.0;
    double sigma = 0.0, nu = 0.0;
    double r = 0.0, phi = 0.0;
    double nu_tilde = 0.0;          // t + sigma^2 - nu
    std::optional<double> eps;      // sqrt(t) - nu/(2 sigma); absent for sigma <= 0
};

// Right half-plane point (x >= 0, y >= 0).  Throws std::domain_error for y < 0
// or x < 0.
[[nodiscard]] FieldPoint field_point(const ProblemParams& p, double x, double y);
// The same point specified by its stretched coordinates.
[[nodiscard]] FieldPoint field_point_stretched(const ProblemParams& p, double sigma, double nu);

struct PointQ {
    double x = 0.0, y = 0.0;
};
// Tangency point of the caustic and the limit ray: (a sin g cos g, a sin^2 g).
[[nodiscard]] PointQ point_q(const ProblemParams& p);

enum class RayFamily { u1_before, u1_after, u2_before, u2_after };
[[nodiscard]] std::string_view to_string(RayFamily f);

struct ReflectionRoot {
    int index = 0;        // 1, 2, 3 (root s1, s2, s3)
    double s_hat = 0.0;   // NaN when the root is complex
    bool exists = false;  // real, s_hat in [-2 a gamma, 0]
};

// Roots of s^2 + 2 s (a gamma - x) + 2 a (y - gamma x) = 0 (s1 <= s2) and of
// the same equation for the mirror point (x, -y) (s3).  A root is kept as an
// existing ray when it is real and the reflection point lies on the arc
// between B (s = -2 a gamma) and O.
[[nodiscard]] std::vector<ReflectionRoot> reflection_arclengths(const ProblemParams& p, double x, double y);

// Discriminant of the quadratic above divided by 4: (a gamma - x)^2 - 2a(y - gamma x)
// = 2 a n~ where n~ = b + x^2/(2a) - y is the distance to the caustic.
[[nodiscard]] double reflection_discriminant(const ProblemParams& p, double x, double y);
[[nodiscard]] double caustic_distance(const ProblemParams& p, double x, double y);

// Residual of the collinearity of M = (x, +-y), T = (xi, eta) and P = (0, h),
// with the small-angle parametrization of T and h; relative to the scale a.
[[nodiscard]] double collinearity_residual(const ProblemParams& p, double x, double y, double s_hat, bool mirror);

// Ray through M with reflection point on the circle, with the exact
// trigonometric parametrization T = (a sin(s/a), a (1 - cos(s/a))) and the
// tangent direction alpha = gamma + s/a.  Newton-polished from the small-angle
// root; returns NaN when no root is found.
[[nodiscard]] double exact_reflection_arclength(const ProblemParams& p, double x, double y, double s_guess, bool mirror);

struct RayData {
    RayFamily family{};
    double s_hat = 0.0;
    double alpha = 0.0;
    double psi = 0.0;
    double h = 0.0;
    double p = 0.0;
    double xi = 0.0, eta = 0.0;
    double spreading = 0.0;
};

// All real rays through the point, tagged by family.
[[nodiscard]] std::vector<RayData> resolve_rays(const ProblemParams& p, double x, double y);

// Geometric spreading of the caustic family at a physical point,
// J = sqrt(2 n~ / a) (n~ for the mirror point for the reflected family).
[[nodiscard]] double spreading(const ProblemParams& p, double x, double y, bool mirror);

struct AxisOrdinates {
    std::optional<double> p1, p2;  // need nu~ >= 0
    double p3 = 0.0;
    double p4 = 0.0;                // diagnostic only, never a critical point in [0, t]
};
[[nodiscard]] AxisOrdinates axis_ordinates(const FieldPoint& pt, double t);

enum class EikonalKind { phi1, phi2, phi3, cylindrical, cylindrical_exact, tau_plus, tau_minus };

// Total phase including kx.  tau_plus / tau_minus need the axis ordinate p.
// phi1 / phi2 are absent above the caustic.
[[nodiscard]] std::optional<double> eikonal(EikonalKind kind, const FieldPoint& pt, const ProblemParams& p,
                                            std::optional<double> ordinate = {});

// The same phases minus the common kx = 2 m^2 sigma, in stretched variables
// only; this is the form carried by the asymptotic contributions.
[[nodiscard]] std::optional<double> reduced_eikonal(EikonalKind kind, double sigma, double nu, double t,
                                                    std::optional<double> ordinate = {});

// Near-limit-ray forms of phi3 and kr (both minus kx).
[[nodiscard]] double phi3_near_limit(const FieldPoint& pt, double t);
[[nodiscard]] double cylindrical_near_limit(const FieldPoint& pt, double t);

// Exact eikonal along the ray with reflection arclength s (trigonometric
// form |MP| -+ (a - b)(tan|alpha| - |alpha|)), including kx from |MP|.
[[nodiscard]] double exact_ray_eikonal(const ProblemParams& p, double x, double y, double s_hat, bool after);

// Fresnel arguments of the transition formulas; all are proportional to eps.
struct ZetaValues {
    double zeta_gt = 0.0;    // sigma > sqrt(t)
    double zeta_lt = 0.0;    // sigma < sqrt(t)
    double zeta_star = 0.0;  // reflected family
};
[[nodiscard]] ZetaValues zeta_values(double sigma, double nu, double t);

enum class Zone {
    RayZone,
    CausticZone,
    TransitionLeftOfQ,
    TransitionRightOfQ,
    QZone,
    PenetrationZone,
    NearLB_Unmodeled,
    OutOfDomain
};
[[nodiscard]] std::string_view to_string(Zone z);

enum class AngleRegime { near_limit, intermediate, far };
[[nodiscard]] std::string_view to_string(AngleRegime r);
// |gamma - phi| / gamma, or |eps| / sqrt(t) in stretched variables.
[[nodiscard]] AngleRegime angle_regime(double ratio);

struct RegionFlags {
    bool att1 = false;   // sigma eps^2 >= 10 and sqrt(t) eps^2 >= 10
    bool att2 = false;   // |sigma -+ sqrt(nu~)|^3 nu~ / sigma^2 >= 10 for every real u2/u1-before ray
    bool att3g = false;  // sqrt(t)|sigma - sqrt(t)| >= 4 sigma and 4 sigma |eps| <= |sigma - sqrt(t)|
    bool att4 = false;   // nu~^2 <= sigma / 4
    bool e_lt_ft = false;
    bool e_eq_ft = false;
    bool e_gt_ft = false;
    bool obl = false;    // |sigma| < 0.5 m^{2/5} and nu < 0.5 m
    bool sgg1 = false;   // sigma >= 4
    bool phi4 = false;   // k r phi^4 <= 0.1
    bool near_lb = false;  // some real ray has t - p_j <= 2
};

struct RegionTag {
    Zone zone = Zone::OutOfDomain;
    RegionFlags flags;
    // True when the zone's own membership predicate holds; false when the
    // point was assigned by the fallback that makes the map total.
    bool strict = false;
};

// Zone thresholds (stretched variables).
struct ZoneThresholds {
    double att = 10.0;               // att1 / att2 products
    double caustic_strip = 0.25;     // nu~^2 <= c sigma
    double caustic_sigma_min = 1.0;  // caustic Airy needs p1, p2 well inside [0, t]
    double caustic_endpoint = 1.0;   // sigma eps^2 >= c for the endpoint expansion
    double transition_eps = 2.0;     // |eps| <= c
    double transition_width = 4.0;   // |sigma - sqrt t| >= c sigma |eps|
    double q_box = 0.25;             // (sigma - sqrt t)^2 <= c sqrt t
    double penetration_sigma = 0.05;
    double penetration_nu = 2.0;
    double near_lb = 2.0;            // t - p_j <= c
    double caustic_shadow = 6.0;     // -nu~ < c: Airy tail v(-nu~) not negligible
};

[[nodiscard]] RegionFlags region_flags(const FieldPoint& pt, const ProblemParams& p, const ZoneThresholds& th = {});
[[nodiscard]] RegionTag classify_region(const FieldPoint& pt, const ProblemParams& p, const ZoneThresholds& th = {});

}  // namespace gdlab
