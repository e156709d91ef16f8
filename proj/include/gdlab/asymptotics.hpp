#pragma once

#include "gdlab/exact_field.hpp"
#include "gdlab/geometry.hpp"
#include "gdlab/specfun.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace gdlab {

enum class ContributionLabel {
    end_mm,
    end_pp,
    end_pm,
    end_mp,
    ray_u2_before,
    ray_u2_after,
    ray_u1_before,
    ray_u1_after,
    caustic_airy,
    fresnel_left_u2,
    fresnel_right_u2,
    fresnel_u1_reflected,
    q_zone,
    penetration
};
[[nodiscard]] std::string_view to_string(ContributionLabel l);

// One leading-order term of the attenuation factor.  `phase` is the
// geometric (eikonal) part of the exponent without kx and without the
// constant stationary-phase shifts; `correction_estimate` is the relative
// size of the dropped bracketed terms, never added to `value`.  `applicable` reports whether
// the formula's own validity condition holds at the default thresholds.
struct Contribution {
    ContributionLabel label{};
    cplx value{};
    double phase = 0.0;
    double correction_estimate = 0.0;
    bool applicable = true;
};

// Conventions settled against the quadrature oracle.
struct AsymptoticOptions {
    // Sign of the Airy argument in the caustic formula: v(airy_sign * nu~).
    // The oracle selects -1, i.e. v(-nu~) (the complete integral equals
    // 2 sqrt(pi) v(-nu~)).
    int airy_sign = -1;
    // Lower limit of the incomplete Airy function in the Q-zone formula:
    // true  -> q0 = (sigma^2 - t)/(2 sigma), the image of p = 0;
    // false -> q0 = sigma - sqrt(t), its linearization at Q.
    bool q_lower_exact = true;
    ZoneThresholds thresholds{};
};

struct EndpointSet {
    std::optional<Contribution> mm, pp;  // absent at eps = 0
    Contribution pm, mp;
    std::optional<cplx> mmpp0;           // combined cos/sin form
    cplx pmmp0{};
    bool att1 = false;
};

// Contributions of the end point p = 0 to I1^{--}, I1^{++}, I1^{+-}, I1^{-+}.
[[nodiscard]] EndpointSet endpoint_contributions(double sigma, double nu, double t);

// Ray (critical point) contributions.  Absent when the ray does not reach the
// point (nu~ <= 0 for the caustic family, p_j outside [0, t], or the family
// does not match nu vs t).  applicable = false when t - p_j <= 2 (near l_B)
// or the stationary-phase correction exceeds 1/10.
[[nodiscard]] std::optional<Contribution> ray_contribution(RayFamily kind, double sigma, double nu, double t);

// Airy-function description of the coalescing points p1, p2 near the caustic.
[[nodiscard]] Contribution caustic_field(double sigma, double nu, double t, const AsymptoticOptions& opt = {});

// Fresnel-integral descriptions near the limit ray: {fresnel_right_u2 or
// fresnel_left_u2, fresnel_u1_reflected}.  Empty inside the Q box.
[[nodiscard]] std::vector<Contribution> transition_field(double sigma, double nu, double t,
                                                         const AsymptoticOptions& opt = {});

// Incomplete-Airy description near Q: {q_zone, fresnel_u1_reflected}.
[[nodiscard]] std::vector<Contribution> q_zone_field(double sigma, double nu, double t,
                                                     const AsymptoticOptions& opt = {});

// v(nu - t) for sigma <= 0.05, |nu - t| <= 2; absent elsewhere.
[[nodiscard]] std::optional<Contribution> penetration_field(double sigma, double nu, double t);

// Phases f^{ab}(p) = a (2/3)(t - p)^{3/2} + (p + b nu)^2 / 4 sigma, a, b in {+1, -1},
// and their p-derivatives.
[[nodiscard]] double phase_f(int a, int b, double p, double sigma, double nu, double t);
[[nodiscard]] double phase_f_prime(int a, int b, double p, double sigma, double nu, double t);

struct DiffractionCoefficient {
    cplx regular{};
    cplx singular{};
    AngleRegime regime{};
    double phi = 0.0;
    std::optional<bool> att1;  // known when r is given
    std::optional<bool> phi4;
};

// A_r and A_s of u_dif = (A_r + A_s) e^{ikr} / sqrt(kr).  The singular part
// uses the near / intermediate / far formula according to |gamma - phi|/gamma.
// Absent at phi = gamma.
[[nodiscard]] std::optional<DiffractionCoefficient> diffraction_coefficient(double phi, const ProblemParams& p,
                                                                            std::optional<double> r = {});
// A_s from a given regime formula (for seam and scaling studies).
[[nodiscard]] cplx singular_coefficient(AngleRegime regime, double phi, const ProblemParams& p);

// (A_r + A_s) e^{i(kr - kx)} / sqrt(kr) at the point, the diffracted wave on
// attenuation-factor level.
[[nodiscard]] std::optional<cplx> diffracted_attenuation(const FieldPoint& pt, const ProblemParams& p);

struct AssembledField {
    Zone zone = Zone::OutOfDomain;
    bool strict = false;
    bool modeled = false;        // false in NearLB_Unmodeled / OutOfDomain
    cplx value{};
    std::optional<cplx> oracle;  // set when the zone is unmodeled
    std::vector<Contribution> breakdown;
    double correction_estimate = 0.0;  // sum |c_i| delta_i / |sum c_i|
    std::optional<ContributionLabel> dominant;  // largest |c_i|
};

// Sums the contributions prescribed for the zone of the point.
[[nodiscard]] AssembledField assemble_zone(Zone zone, double sigma, double nu, double t,
                                           const AsymptoticOptions& opt = {});
// Classifies the point and assembles; in NearLB_Unmodeled the oracle value is
// computed with `cfg` and returned instead.  Throws std::domain_error for
// OutOfDomain points.
[[nodiscard]] AssembledField assemble_total(const FieldPoint& pt, const ProblemParams& p, const QuadConfig& cfg = {},
                                            const AsymptoticOptions& opt = {});

}  // namespace gdlab
