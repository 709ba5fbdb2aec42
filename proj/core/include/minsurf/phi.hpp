#pragma once

#include <variant>

#include "minsurf/quadrature.hpp"
#include "minsurf/surface.hpp"

namespace minsurf {

/// The holomorphic triple phi_1 = h(1-g^2)/2, phi_2 = ih(1+g^2)/2,
/// phi_3 = hg as chart coefficient functions; phi_1^2+phi_2^2+phi_3^2 = 0.
class PhiTriple {
  public:
    static PhiTriple from_surface(const WeierstrassSurface& S);

    Vec3c eval(Complex z) const;
    bool is_rational() const { return std::holds_alternative<RationalData>(data_); }
    const std::array<RationalFunction, 3>& rational() const {
        return std::get<RationalData>(data_).phi;
    }

    /// Coefficient-level check that the quadratic relation holds identically
    /// (rational case): largest residual coefficient relative to the input
    /// scale.
    double conformality_coefficient_residual() const;

    /// max |sum phi_i^2| / max |phi_i|^2 over the sample points.
    double conformality_residual(const std::vector<Complex>& samples) const;

    /// Finite poles of the triple in the chart (for path validation).
    std::vector<Complex> finite_poles() const;

  private:
    struct RationalData {
        std::array<RationalFunction, 3> phi;
    };
    struct EllipticData {
        std::array<EllipticFunction, 3> phi;
        SquareTorus torus;
    };
    std::variant<RationalData, EllipticData> data_;
};

/// Gauss curvature and the conformal factor of ds^2 at a chart point.
struct CurvatureValue {
    double K;       // always <= 0
    double ds2_factor; // |h|^2 (1+|g|^2)^2 / 4
};
CurvatureValue curvature_at(const WeierstrassSurface& S, Complex z);

/// Pullback density of the unit-curvature sphere area under g:
/// (2|g'|/(1+|g|^2))^2, evaluated pole-free.
double fs_pullback_density(const WeierstrassSurface& S, Complex z);

} // namespace minsurf
