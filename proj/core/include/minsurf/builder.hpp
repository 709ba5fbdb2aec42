#pragma once

#include <optional>

#include "minsurf/phi.hpp"

namespace minsurf {

/// Closed polyline in the chart; must keep its distance from the poles of
/// the integrand.
struct Cycle {
    std::vector<Complex> points;
};

struct PeriodResult {
    Vec3 re_part;                       // Re of the contour integral, per coordinate
    std::optional<Vec3c> residue_side;  // 2 pi i sum of enclosed residues (rational data)
    double agreement = 0.0;             // max |quadrature - residue route|
};

/// Contour integrals of the phi-triple over each cycle; for rational data the
/// result is cross-checked against the residue route.
std::vector<PeriodResult> periods(const WeierstrassSurface& S, const std::vector<Cycle>& cycles,
                                  double rel_tol = 1e-10, double delta_path = 1e-2);

/// Re of the integral of phi along the straight segment from z0 to z1.
Vec3 integrate_displacement(const WeierstrassSurface& S, Complex z0, Complex z1,
                            double rel_tol = 1e-10);

/// Loops around each puncture (and the two lattice directions on the torus);
/// a homology basis sufficient for the period condition.
std::vector<Cycle> standard_cycles(const WeierstrassSurface& S, double radius = 0.15);

struct TotalCurvatureReport {
    bool finite = false;
    double value = 0.0;            // total curvature when finite
    double domain_integral = 0.0;  // curvature integral over one copy of M
    double max_period = 0.0;       // largest |Re period| over the standard cycles
    std::vector<double> partial_sums; // exhaustion by covering copies when divergent
    std::string reason;            // why the data was classified divergent
};

/// Total curvature. Finite exactly when the ends have metric order >= 2 and
/// the period condition holds; then the value converges to -4 pi d.
TotalCurvatureReport total_curvature(const WeierstrassSurface& S, double rel_tol = 1e-4,
                                     std::optional<double> truncate_radius = {});

/// Associated family: rotate hdz by e^{i theta}.
inline WeierstrassSurface associated_family(const WeierstrassSurface& S, double theta) {
    return S.associated(theta);
}

} // namespace minsurf
