#include "minsurf/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "minsurf/errors.hpp"

namespace minsurf {

// ---------------------------------------------------------------------------
// Lattice constants and wp evaluation
// ---------------------------------------------------------------------------

double lemniscatic_e1() {
    // wp(1/2) over Z + iZ. Rows of the lattice sum collapse to cotangent-type
    // closed forms: sum_m 1/(z - m - ni)^2 = pi^2 / sin^2(pi(z - ni)), and
    // the constant sum_{w != 0} 1/w^2 regroups the same way. Terms decay like
    // exp(-2 pi n).
    static const double value = [] {
        const double pi = M_PI;
        double s = pi * pi; // n = 0 row: pi^2/sin^2(pi/2)
        for (int n = 1; n < 30; ++n) {
            const double ch = std::cosh(pi * n);
            s += 2.0 * pi * pi / (ch * ch);
        }
        double c = pi * pi / 3.0;
        for (int n = 1; n < 30; ++n) {
            const double sh = std::sinh(pi * n);
            c -= 2.0 * pi * pi / (sh * sh);
        }
        return s - c;
    }();
    return value;
}

SquareTorus SquareTorus::unit() { return SquareTorus(1.0, lemniscatic_e1()); }

SquareTorus SquareTorus::with_parameter(double a) {
    if (!(a > 0.0)) throw input_error("square torus parameter a must be positive");
    // wp(lam z; lam L) = lam^-2 wp(z; L): e1 scales by lam^-2.
    return SquareTorus(std::sqrt(lemniscatic_e1() / a), a);
}

double SquareTorus::e(int i) const {
    switch (i) {
        case 1: return a_;
        case 2: return 0.0;
        case 3: return -a_;
        default: throw input_error("half-period index out of range");
    }
}

Complex SquareTorus::half_period(int i) const {
    switch (i) {
        case 1: return {scale_ / 2.0, 0.0};
        case 2: return {scale_ / 2.0, scale_ / 2.0};
        case 3: return {0.0, scale_ / 2.0};
        default: throw input_error("half-period index out of range");
    }
}

namespace {

// Laurent tail coefficients of wp on the unit square lattice:
// wp(z) = z^-2 + sum c_k z^{2k}.
const std::vector<double>& laurent_coeffs() {
    static const std::vector<double> c = [] {
        const double g2 = 4.0 * lemniscatic_e1() * lemniscatic_e1();
        std::vector<double> v(33, 0.0);
        v[1] = g2 / 20.0;
        v[2] = 0.0; // g3 = 0
        for (int k = 3; k < static_cast<int>(v.size()); ++k) {
            double s = 0.0;
            for (int m = 1; m <= k - 2; ++m) s += v[m] * v[k - 1 - m];
            v[k] = 3.0 * s / ((2.0 * k + 3.0) * (k - 2.0));
        }
        return v;
    }();
    return c;
}

SquareTorus::WpValue wp_laurent(Complex v) {
    const auto& c = laurent_coeffs();
    const Complex v2 = v * v;
    Complex p = 1.0 / v2;
    Complex dp = -2.0 / (v2 * v);
    Complex pow = v2;     // v^{2k}
    Complex dpow = v;     // v^{2k-1}
    for (size_t k = 1; k < c.size(); ++k) {
        if (c[k] != 0.0) {
            p += c[k] * pow;
            dp += 2.0 * static_cast<double>(k) * c[k] * dpow;
        }
        pow *= v2;
        dpow *= v2;
    }
    return {p, dp};
}

} // namespace

SquareTorus::WpValue SquareTorus::wp(Complex z, double eps) const {
    // Reduce to the unit lattice, then to the fundamental square.
    Complex u = z / scale_;
    u -= Complex{std::round(u.real()), std::round(u.imag())};
    if (std::abs(u) < eps) throw numeric_error("wp evaluated at a lattice point");
    int halvings = 0;
    Complex v = u;
    while (std::abs(v) > 0.3) {
        v *= 0.5;
        ++halvings;
    }
    WpValue w = wp_laurent(v);
    const double g2 = 4.0 * lemniscatic_e1() * lemniscatic_e1();
    for (int i = 0; i < halvings; ++i) {
        // Duplication: wp(2u) = (wp''/(2 wp'))^2 - 2 wp, with
        // wp'' = 6 wp^2 - g2/2 and wp''' = 12 wp wp'.
        const Complex A = 6.0 * w.p * w.p - g2 / 2.0;
        const Complex B = A / (2.0 * w.dp);
        const Complex Bp = (12.0 * w.p * w.dp * w.dp - A * A) / (2.0 * w.dp * w.dp);
        const Complex p2 = B * B - 2.0 * w.p;
        const Complex dp2 = B * Bp - w.dp;
        w = {p2, dp2};
    }
    // Undo the lattice scaling.
    return {w.p / (scale_ * scale_), w.dp / (scale_ * scale_ * scale_)};
}

// ---------------------------------------------------------------------------
// TorusPoint
// ---------------------------------------------------------------------------

std::string TorusPoint::str() const {
    switch (kind_) {
        case Kind::Lattice: return "lattice";
        case Kind::HalfPeriod: return "half-period-" + std::to_string(index_);
        default: {
            char buf[80];
            std::snprintf(buf, sizeof(buf), "(wp=%.10g%+.10gi,%c)", x_.real(), x_.imag(),
                          sign_ > 0 ? '+' : '-');
            return buf;
        }
    }
}

bool same_point(const TorusPoint& a, const TorusPoint& b, double eps) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case TorusPoint::Kind::Lattice: return true;
        case TorusPoint::Kind::HalfPeriod: return a.index() == b.index();
        default:
            return a.sign() == b.sign() &&
                   std::abs(a.x() - b.x()) <= eps * std::max(1.0, std::abs(a.x()));
    }
}

// ---------------------------------------------------------------------------
// EllipticFunction
// ---------------------------------------------------------------------------

EllipticFunction::EllipticFunction() : c_(0.0), r_(), eps_(0) {}

EllipticFunction::EllipticFunction(Complex prefactor, RationalFunction r, int eps)
    : c_(prefactor), r_(std::move(r)), eps_(eps) {
    if (eps_ != 0 && eps_ != 1) throw input_error("wp' power must be 0 or 1");
    if (c_ == Complex{0.0} || r_.is_zero()) {
        c_ = {0.0};
        r_ = RationalFunction();
        eps_ = 0;
    }
}

EllipticFunction EllipticFunction::one() {
    return EllipticFunction({1.0, 0.0}, RationalFunction::constant({1.0, 0.0}), 0);
}
EllipticFunction EllipticFunction::constant(Complex c) {
    return EllipticFunction(c, RationalFunction::constant({1.0, 0.0}), 0);
}
EllipticFunction EllipticFunction::wp() {
    return EllipticFunction({1.0, 0.0}, RationalFunction::identity(), 0);
}
EllipticFunction EllipticFunction::wp_prime() {
    return EllipticFunction({1.0, 0.0}, RationalFunction::constant({1.0, 0.0}), 1);
}
EllipticFunction EllipticFunction::wp_power(int n) {
    Polynomial one = Polynomial::constant_exact(GaussRat(1));
    std::vector<GaussRat> mono(std::abs(n) + 1, GaussRat(0));
    mono.back() = GaussRat(1);
    Polynomial m{std::move(mono)};
    RationalFunction r = n >= 0 ? RationalFunction(m, one) : RationalFunction(one, m);
    return EllipticFunction({1.0, 0.0}, std::move(r), 0);
}

bool EllipticFunction::is_zero() const { return c_ == Complex{0.0} || r_.is_zero(); }
bool EllipticFunction::is_constant() const { return is_zero() || (eps_ == 0 && r_.is_constant()); }

Complex EllipticFunction::eval(Complex z, const SquareTorus& T) const {
    if (is_zero()) return {0.0};
    const auto w = T.wp(z);
    Complex v = c_ * r_.eval(w.p);
    if (eps_ == 1) v *= w.dp;
    return v;
}

EllipticFunction EllipticFunction::scaled(Complex s) const {
    if (s == Complex{0.0} || is_zero()) return EllipticFunction();
    return EllipticFunction(c_ * s, r_, eps_);
}

namespace {
// The cubic Q(x) = 4x^3 - g2 x with wp'^2 = Q(wp).
RationalFunction curve_cubic(const SquareTorus& T) {
    return RationalFunction(
        Polynomial(std::vector<Complex>{{0.0, 0.0}, {-T.g2(), 0.0}, {0.0, 0.0}, {4.0, 0.0}}),
        Polynomial::constant_exact(GaussRat(1)));
}
RationalFunction curve_half_second(const SquareTorus& T) {
    // wp'' = 6x^2 - g2/2.
    return RationalFunction(
        Polynomial(std::vector<Complex>{{-T.g2() / 2.0, 0.0}, {0.0, 0.0}, {6.0, 0.0}}),
        Polynomial::constant_exact(GaussRat(1)));
}
} // namespace

EllipticFunction ell_mul(const EllipticFunction& a, const EllipticFunction& b, const SquareTorus& T) {
    if (a.is_zero() || b.is_zero()) return EllipticFunction();
    const int e = a.eps() + b.eps();
    RationalFunction r = a.r() * b.r();
    if (e == 2) return EllipticFunction(a.prefactor() * b.prefactor(), r * curve_cubic(T), 0);
    return EllipticFunction(a.prefactor() * b.prefactor(), std::move(r), e);
}

EllipticFunction ell_add(const EllipticFunction& a, const EllipticFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.eps() != b.eps())
        throw input_error("sum leaves the restricted elliptic function class (mixed wp' powers)");
    RationalFunction r = a.r() * a.prefactor() + b.r() * b.prefactor();
    return EllipticFunction({1.0, 0.0}, std::move(r), a.eps());
}

EllipticFunction ell_sub(const EllipticFunction& a, const EllipticFunction& b) {
    return ell_add(a, b.scaled({-1.0, 0.0}));
}

EllipticFunction ell_reciprocal(const EllipticFunction& f, const SquareTorus& T) {
    if (f.is_zero()) throw input_error("reciprocal of the zero function");
    if (f.eps() == 0) return EllipticFunction(1.0 / f.prefactor(), f.r().reciprocal(), 0);
    // 1/(c R wp') = wp' / (c R Q(wp)).
    return EllipticFunction(1.0 / f.prefactor(), (f.r() * curve_cubic(T)).reciprocal(), 1);
}

Divisor<TorusPoint> ell_divisor(const EllipticFunction& f, const SquareTorus& T) {
    if (f.is_zero()) throw input_error("divisor of the zero function");
    Divisor<TorusPoint> div;
    auto add_wp_level = [&](Complex x0, int mult) {
        for (int i = 1; i <= 3; ++i) {
            if (std::abs(x0 - T.e(i)) <= kClusterTol * std::max(1.0, std::abs(T.e(i)))) {
                div.add(TorusPoint::half_period(i), 2 * mult);
                return;
            }
        }
        div.add(TorusPoint::generic(x0, +1), mult);
        div.add(TorusPoint::generic(x0, -1), mult);
    };
    if (f.r().num().degree() >= 1)
        for (const auto& rc : poly_roots(f.r().num())) add_wp_level(rc.center, rc.multiplicity);
    if (f.r().den().degree() >= 1)
        for (const auto& rc : poly_roots(f.r().den())) add_wp_level(rc.center, -rc.multiplicity);
    int lattice_order = -2 * (f.r().num().degree() - f.r().den().degree());
    if (f.eps() == 1) {
        lattice_order -= 3;
        for (int i = 1; i <= 3; ++i) div.add(TorusPoint::half_period(i), 1);
    }
    div.add(TorusPoint::lattice(), lattice_order);
    div.prune();
    if (div.degree() != 0) throw numeric_error("elliptic divisor degree is nonzero");
    return div;
}

int ell_degree(const EllipticFunction& f, const SquareTorus& T) {
    if (f.is_constant()) return 0;
    int d = 0;
    for (const auto& e : ell_divisor(f, T).entries)
        if (e.mult < 0) d -= e.mult;
    return d;
}

EllipticFunction ell_derivative(const EllipticFunction& f, const SquareTorus& T) {
    if (f.is_zero() || f.is_constant()) return EllipticFunction();
    const RationalFunction dr = rat_derivative(f.r());
    if (f.eps() == 0) return EllipticFunction(f.prefactor(), dr, 1);
    // (c R wp')' = c (R' Q + R wp'') with wp'^2 = Q(wp).
    return EllipticFunction(f.prefactor(), dr * curve_cubic(T) + f.r() * curve_half_second(T), 0);
}

Divisor<TorusPoint> ell_ramification(const EllipticFunction& f, const SquareTorus& T) {
    if (f.is_constant()) throw input_error("ramification of a constant function");
    const int d = ell_degree(f, T);
    Divisor<TorusPoint> div;
    // On the torus dz is global: away from poles the branching order is the
    // vanishing order of f'.
    const EllipticFunction df = ell_derivative(f, T);
    if (!df.is_zero())
        for (const auto& e : ell_divisor(df, T).entries)
            if (e.mult > 0) div.add(e.point, e.mult);
    for (const auto& e : ell_divisor(f, T).entries)
        if (e.mult < 0 && e.mult != -1) div.add(e.point, -e.mult - 1);
    div.prune();
    if (div.degree() != 2 * d) throw numeric_error("torus ramification degree is not 2d");
    return div;
}

std::vector<TorusFiberPoint> ell_fiber(const EllipticFunction& f, const SpherePoint& b,
                                       const SquareTorus& T) {
    if (f.is_constant()) throw input_error("fiber of a constant function");
    const int d = ell_degree(f, T);
    std::vector<TorusFiberPoint> out;
    const auto div = ell_divisor(f, T);
    if (b.is_infinity()) {
        for (const auto& e : div.entries)
            if (e.mult < 0) out.push_back({e.point, -e.mult});
    } else if (b.value() == Complex{0.0}) {
        for (const auto& e : div.entries)
            if (e.mult > 0) out.push_back({e.point, e.mult});
    } else if (f.eps() == 0) {
        const EllipticFunction shifted = ell_sub(f, EllipticFunction::constant(b.value()));
        for (const auto& e : ell_divisor(shifted, T).entries)
            if (e.mult > 0) out.push_back({e.point, e.mult});
    } else {
        // (f - b)(f(-z) - b) = b^2 - c^2 R^2 Q as a function of x = wp; each
        // root supplies one point of the fiber, branch picked by value.
        const Complex bv = b.value();
        const RationalFunction r2q = f.r() * f.r() * curve_cubic(T);
        const Complex c2 = f.prefactor() * f.prefactor();
        const RationalFunction n =
            RationalFunction::constant(bv * bv) - r2q * c2;
        if (n.is_zero()) throw numeric_error("degenerate norm function in torus fiber");
        for (const auto& rc : poly_roots(n.num())) {
            const Complex x0 = rc.center;
            const Complex q = Complex{4.0, 0.0} * x0 * x0 * x0 - Complex{T.g2(), 0.0} * x0;
            const Complex w = f.prefactor() * f.r().eval(x0) * std::sqrt(q);
            const int sign = std::abs(w - bv) <= std::abs(-w - bv) ? +1 : -1;
            out.push_back({TorusPoint::generic(x0, sign), rc.multiplicity});
        }
    }
    int total = 0;
    for (const auto& fp : out) total += fp.multiplicity;
    if (total != d) throw numeric_error("torus fiber multiplicities do not sum to the degree");
    return out;
}

SpherePoint ell_value_at(const EllipticFunction& f, const TorusPoint& p, const SquareTorus& T) {
    if (f.is_constant())
        return f.is_zero() ? SpherePoint::finite(0.0) : SpherePoint::finite(f.prefactor() * f.r().eval(0.0));
    const int ord = ell_divisor(f, T).order_at(p);
    if (ord > 0) return SpherePoint::finite(0.0);
    if (ord < 0) return SpherePoint::infinity();
    switch (p.kind()) {
        case TorusPoint::Kind::Generic: {
            const Complex x0 = p.x();
            Complex v = f.prefactor() * f.r().eval(x0);
            if (f.eps() == 1) {
                const Complex q = Complex{4.0, 0.0} * x0 * x0 * x0 - Complex{T.g2(), 0.0} * x0;
                v *= static_cast<double>(p.sign()) * std::sqrt(q);
            }
            return SpherePoint::finite(v);
        }
        case TorusPoint::Kind::HalfPeriod:
            // ord 0 at a half-period forces eps = 0 (the wp' factor has odd
            // order there).
            return SpherePoint::finite(f.prefactor() * f.r().eval(T.e(p.index())));
        default: {
            // Order 0 at the lattice point: eps = 0 and deg num = deg den.
            const Complex v = f.prefactor() * f.r().num().lead() / f.r().den().lead();
            return SpherePoint::finite(v);
        }
    }
}

} // namespace minsurf
