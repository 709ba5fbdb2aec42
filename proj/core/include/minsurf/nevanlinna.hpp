#pragma once

#include <array>

#include "minsurf/analysis.hpp"

namespace minsurf {

/// G - 1 + k/2 exactly, with the conformal-type flag (hyperbolic when the
/// Euler characteristic is negative).
struct HyperbolicArea {
    Rational value;
    bool hyperbolic;
};
HyperbolicArea hyperbolic_area(int G, int k);

/// Fundamental-domain areas: hyperbolic (curvature -4 pi normalization) and
/// spherical (unit total area) pullback; their exact ratio equals R.
struct AreaReport {
    Rational A_hyp;
    Rational A_FS;
    Rational ratio; // A_FS / A_hyp
    bool hyperbolic;
    bool ok; // A_FS == R * A_hyp exactly
};
AreaReport area_ratio_check(const WeierstrassSurface& S);

/// Modular lambda on the upper half-plane via theta-null series after
/// reduction to the standard fundamental domain; lambda(i) = 1/2,
/// lambda(tau+2) = lambda(tau), lambda(-1/tau) = 1 - lambda(tau).
Complex modular_lambda(Complex tau);
std::pair<Complex, Complex> modular_lambda_with_derivative(Complex tau);

struct CharacteristicSample {
    double r;
    double T;      // disk characteristic of the lifted map
    double bound;  // log 1/(1-r)
    double slack;  // max(0, bound - T)
    bool reliable; // quadrature converged
};

struct CharacteristicReport {
    std::vector<CharacteristicSample> samples;
    double eta_fit; // slope of T against (1/2) log 1/(1-r)
};

/// Growth of the identity Gauss map on the triply punctured sphere, lifted
/// to the unit disk through the lambda covering (punctures a1, a2, a3; the
/// spherical area form is normalized to total area 1).
CharacteristicReport characteristic_voss3(const std::array<SpherePoint, 3>& punctures,
                                          const std::vector<double>& rs);

/// Pipeline self-test: the same double integral applied to the hyperbolic
/// area form, which equals (1/2) log 1/(1-r^2) in closed form.
double hyperbolic_comparison_integral(double r);

} // namespace minsurf
