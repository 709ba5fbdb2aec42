#pragma once

#include <string>
#include <vector>

#include "minsurf/divisor.hpp"
#include "minsurf/rational_function.hpp"

namespace minsurf {

/// e1 = wp(1/2) on the unit square lattice Z + iZ, evaluated once by the
/// row-resummed lattice sum and cached.
double lemniscatic_e1();

/// Square torus C / scale*(Z + iZ) carrying the curve
/// (wp')^2 = 4 wp (wp^2 - a^2), i.e. g2 = 4 a^2, g3 = 0, with half-period
/// values e1 = a, e2 = 0, e3 = -a.
class SquareTorus {
  public:
    /// Unit lattice (omega1 = 1); a is the lemniscatic constant.
    static SquareTorus unit();
    /// Prescribed cubic parameter a > 0; the lattice scale follows.
    static SquareTorus with_parameter(double a);

    double a() const { return a_; }
    double g2() const { return 4.0 * a_ * a_; }
    double omega1() const { return scale_; }
    Complex omega2() const { return {0.0, scale_}; }
    double e(int i) const; // i in 1..3
    Complex half_period(int i) const;

    struct WpValue {
        Complex p;
        Complex dp;
    };
    /// (wp, wp') by Laurent series near the origin plus duplication for
    /// range reduction; error if z is within eps of a lattice point.
    WpValue wp(Complex z, double eps = kPointTol) const;

  private:
    SquareTorus(double scale, double a) : scale_(scale), a_(a) {}
    double scale_;
    double a_;
};

/// Point of the square torus, recorded through its (wp, branch) data: the
/// wp-pole, one of the three half-periods, or a generic point (x, sign)
/// with x = wp and sign selecting the wp' branch.
class TorusPoint {
  public:
    enum class Kind { Lattice, HalfPeriod, Generic };

    static TorusPoint lattice() { return TorusPoint(Kind::Lattice, 0, {0.0}, 0); }
    static TorusPoint half_period(int i) { return TorusPoint(Kind::HalfPeriod, i, {0.0}, 0); }
    static TorusPoint generic(Complex x, int sign) { return TorusPoint(Kind::Generic, 0, x, sign); }

    Kind kind() const { return kind_; }
    int index() const { return index_; }
    Complex x() const { return x_; }
    int sign() const { return sign_; }
    std::string str() const;

  private:
    TorusPoint(Kind k, int i, Complex x, int s) : kind_(k), index_(i), x_(x), sign_(s) {}
    Kind kind_;
    int index_;
    Complex x_;
    int sign_;
};

bool same_point(const TorusPoint& a, const TorusPoint& b, double eps = kPointTol);

/// Function of the form c * R(wp) * (wp')^eps on a square torus. The class
/// is closed under multiplication, inversion and differentiation via the
/// curve identities wp'^2 = 4wp^3 - g2 wp and wp'' = 6wp^2 - g2/2.
class EllipticFunction {
  public:
    EllipticFunction(); // zero
    EllipticFunction(Complex prefactor, RationalFunction r, int eps);

    static EllipticFunction one();
    static EllipticFunction constant(Complex c);
    static EllipticFunction wp();       // (1, x, 0)
    static EllipticFunction wp_prime(); // (1, 1, 1)
    /// wp^n (n may be negative).
    static EllipticFunction wp_power(int n);

    Complex prefactor() const { return c_; }
    const RationalFunction& r() const { return r_; }
    int eps() const { return eps_; }
    bool is_zero() const;
    bool is_constant() const;

    Complex eval(Complex z, const SquareTorus& T) const;

    EllipticFunction scaled(Complex s) const;

  private:
    Complex c_;
    RationalFunction r_;
    int eps_; // 0 or 1
};

EllipticFunction ell_mul(const EllipticFunction& a, const EllipticFunction& b, const SquareTorus& T);
/// Sum; both operands must carry the same wp' power.
EllipticFunction ell_add(const EllipticFunction& a, const EllipticFunction& b);
EllipticFunction ell_sub(const EllipticFunction& a, const EllipticFunction& b);
EllipticFunction ell_reciprocal(const EllipticFunction& f, const SquareTorus& T);

/// Zero/pole divisor over TorusPoint; total degree 0.
Divisor<TorusPoint> ell_divisor(const EllipticFunction& f, const SquareTorus& T);

/// Degree as a map to the sphere: total pole order.
int ell_degree(const EllipticFunction& f, const SquareTorus& T);

/// Derivative, re-expressed inside the class.
EllipticFunction ell_derivative(const EllipticFunction& f, const SquareTorus& T);

/// Divisor of (local multiplicity - 1); total degree 2 * ell_degree(f).
Divisor<TorusPoint> ell_ramification(const EllipticFunction& f, const SquareTorus& T);

struct TorusFiberPoint {
    TorusPoint point;
    int multiplicity;
};

/// Full preimage of b (a point of the sphere) with multiplicities summing to
/// ell_degree(f).
std::vector<TorusFiberPoint> ell_fiber(const EllipticFunction& f, const SpherePoint& b,
                                       const SquareTorus& T);

/// Value of f at a torus point, decided by order arithmetic.
SpherePoint ell_value_at(const EllipticFunction& f, const TorusPoint& p, const SquareTorus& T);

} // namespace minsurf
