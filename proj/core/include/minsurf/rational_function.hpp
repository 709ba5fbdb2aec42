#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minsurf/divisor.hpp"
#include "minsurf/polynomial.hpp"
#include "minsurf/sphere_point.hpp"

namespace minsurf {

/// Quotient of complex polynomials in lowest terms, denominator monic.
/// Carries the exact representation when both inputs are exact.
class RationalFunction {
  public:
    RationalFunction(); // the zero function 0/1
    RationalFunction(Polynomial num, Polynomial den);
    static RationalFunction constant(Complex c);
    static RationalFunction identity(); // z

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    bool has_exact() const { return num_.has_exact() && den_.has_exact(); }

    Complex eval(Complex z) const;
    /// Projective evaluation including the point at infinity; exact when
    /// both the function and the point are exact.
    SpherePoint value_at(const SpherePoint& p) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, Complex s);
    friend RationalFunction operator*(Complex s, const RationalFunction& a) { return a * s; }

    RationalFunction reciprocal() const;

  private:
    void normalize();
    Polynomial num_, den_;
};

struct FiberPoint {
    SpherePoint point;
    int multiplicity;
};

/// Degree as a map of the sphere: max(deg num, deg den).
int rat_degree(const RationalFunction& f);

/// Divisor of zeros and poles on the sphere, including the order at
/// infinity; total degree 0.
Divisor<SpherePoint> zeros_poles(const RationalFunction& f);

RationalFunction rat_derivative(const RationalFunction& f);

/// Full preimage of b with multiplicities, total = rat_degree(f). Degree
/// drop of num - b*den surfaces as a preimage at infinity.
std::vector<FiberPoint> fiber(const RationalFunction& f, const SpherePoint& b);

/// Divisor of (local multiplicity - 1) over the whole sphere; total degree
/// 2*rat_degree(f) - 2.
Divisor<SpherePoint> ramification_divisor(const RationalFunction& f);

/// Local multiplicity of f at p (1 = unramified).
int local_multiplicity(const RationalFunction& f, const SpherePoint& p);

/// Residue of the differential f(z) dz at p (finite or infinity). Returns 0
/// when p is not a pole.
Complex residue(const RationalFunction& f, const SpherePoint& p);

} // namespace minsurf
