#include "minsurf/rational_function.hpp"

#include <algorithm>
#include <cmath>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

Polynomial deflate_times(Polynomial p, Complex r, int times) {
    for (int i = 0; i < times; ++i) p = p.deflate(r);
    return p;
}

// Taylor coefficients of p(z + c), by repeated synthetic division.
std::vector<Complex> taylor_shift(const Polynomial& p, Complex c) {
    std::vector<Complex> work = p.coeffs();
    const int n = static_cast<int>(work.size());
    std::vector<Complex> out(n, Complex{0.0});
    for (int k = 0; k < n; ++k) {
        // Divide work by (z - c): remainder is the k-th Taylor coefficient.
        Complex acc{0.0};
        for (int i = n - 1 - k; i >= 0; --i) {
            const Complex t = work[i];
            work[i] = acc;
            acc = acc * c + t;
        }
        out[k] = acc;
        // work now holds the quotient in place, ready for the next round.
    }
    return out;
}

Complex residue_finite(const Polynomial& num, const Polynomial& den, Complex p) {
    const auto droots = poly_roots(den);
    int m = 0;
    Complex center = p;
    for (const auto& rc : droots) {
        if (std::abs(rc.center - p) <= std::max(kClusterTol * std::max(1.0, std::abs(p)), kPointTol)) {
            m = rc.multiplicity;
            center = rc.center;
            break;
        }
    }
    if (m == 0) return {0.0};
    const Polynomial e = deflate_times(den, center, m);
    const auto a = taylor_shift(num, center);
    const auto b = taylor_shift(e, center);
    // Power series division a/b up to index m-1; b[0] = e(center) != 0.
    std::vector<Complex> c(m, Complex{0.0});
    for (int k = 0; k < m; ++k) {
        Complex s = k < static_cast<int>(a.size()) ? a[k] : Complex{0.0};
        for (int j = 0; j < k; ++j) {
            const int idx = k - j;
            if (idx < static_cast<int>(b.size())) s -= c[j] * b[idx];
        }
        c[k] = s / b[0];
    }
    return c[m - 1];
}

} // namespace

RationalFunction::RationalFunction()
    : num_(), den_(Polynomial::constant_exact(GaussRat(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw input_error("rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::constant(Complex c) {
    return RationalFunction(Polynomial::constant(c), Polynomial::constant_exact(GaussRat(1)));
}

RationalFunction RationalFunction::identity() {
    return RationalFunction(Polynomial(std::vector<GaussRat>{GaussRat(0), GaussRat(1)}),
                            Polynomial::constant_exact(GaussRat(1)));
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant_exact(GaussRat(1));
        return;
    }
    if (num_.has_exact() && den_.has_exact()) {
        const ExactPoly g = exact_gcd(num_.exact(), den_.exact());
        if (g.size() > 1) {
            num_ = Polynomial(exact_divmod(num_.exact(), g).first);
            den_ = Polynomial(exact_divmod(den_.exact(), g).first);
        }
        const GaussRat lead = den_.exact().back();
        num_ = num_.scaled_exact(GaussRat(1) / lead);
        den_ = den_.scaled_exact(GaussRat(1) / lead);
        return;
    }
    if (num_.degree() >= 1 && den_.degree() >= 1) {
        // Cancel common roots within the clustering tolerance.
        auto nroots = poly_roots(num_);
        auto droots = poly_roots(den_);
        bool cancelled = false;
        for (auto& dr : droots) {
            for (auto& nr : nroots) {
                if (nr.multiplicity == 0) continue;
                if (std::abs(nr.center - dr.center) <=
                    kClusterTol * std::max(1.0, std::abs(dr.center))) {
                    const int c = std::min(nr.multiplicity, dr.multiplicity);
                    num_ = deflate_times(num_, nr.center, c);
                    den_ = deflate_times(den_, dr.center, c);
                    nr.multiplicity -= c;
                    dr.multiplicity -= c;
                    cancelled = true;
                    break;
                }
            }
        }
        (void)cancelled;
    }
    const Complex lead = den_.lead();
    num_ = num_ * (1.0 / lead);
    den_ = den_ * (1.0 / lead);
}

Complex RationalFunction::eval(Complex z) const {
    const Complex dv = den_.eval(z);
    const Complex nv = num_.eval(z);
    return nv / dv;
}

SpherePoint RationalFunction::value_at(const SpherePoint& p) const {
    const int dn = num_.degree(), dd = den_.degree();
    if (p.is_infinity()) {
        if (num_.is_zero()) return SpherePoint::finite_exact(GaussRat(0));
        if (dn > dd) return SpherePoint::infinity();
        if (dn < dd) {
            return has_exact() ? SpherePoint::finite_exact(GaussRat(0)) : SpherePoint::finite(0.0);
        }
        if (has_exact()) return SpherePoint::finite_exact(num_.exact().back() / den_.exact().back());
        return SpherePoint::finite(num_.lead() / den_.lead());
    }
    if (has_exact() && p.exact()) {
        const GaussRat nv = exact_eval(num_.exact(), *p.exact());
        const GaussRat dv = exact_eval(den_.exact(), *p.exact());
        if (dv.is_zero()) {
            if (nv.is_zero()) throw numeric_error("common root survived normalization");
            return SpherePoint::infinity();
        }
        return SpherePoint::finite_exact(nv / dv);
    }
    const Complex dv = den_.eval(p.value());
    if (dv == Complex{0.0}) return SpherePoint::infinity();
    return SpherePoint::finite(num_.eval(p.value()) / dv);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw input_error("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}
RationalFunction operator*(const RationalFunction& a, Complex s) {
    return RationalFunction(a.num_ * s, a.den_);
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw input_error("reciprocal of the zero function");
    return RationalFunction(den_, num_);
}

int rat_degree(const RationalFunction& f) {
    if (f.is_zero()) return 0;
    return std::max(f.num().degree(), f.den().degree());
}

Divisor<SpherePoint> zeros_poles(const RationalFunction& f) {
    if (f.is_zero()) throw input_error("divisor of the zero function");
    Divisor<SpherePoint> d;
    if (f.num().degree() >= 1)
        for (const auto& rc : poly_roots(f.num())) d.add(rc.point(), rc.multiplicity);
    if (f.den().degree() >= 1)
        for (const auto& rc : poly_roots(f.den())) d.add(rc.point(), -rc.multiplicity);
    const int at_inf = f.den().degree() - f.num().degree();
    if (at_inf != 0) d.add(SpherePoint::infinity(), at_inf);
    d.prune();
    return d;
}

RationalFunction rat_derivative(const RationalFunction& f) {
    return RationalFunction(f.num().derivative() * f.den() - f.num() * f.den().derivative(),
                            f.den() * f.den());
}

std::vector<FiberPoint> fiber(const RationalFunction& f, const SpherePoint& b) {
    const int d = rat_degree(f);
    if (f.is_constant()) throw input_error("fiber of a constant map");
    std::vector<FiberPoint> out;
    if (b.is_infinity()) {
        if (f.den().degree() >= 1)
            for (const auto& rc : poly_roots(f.den())) out.push_back({rc.point(), rc.multiplicity});
        const int at_inf = f.num().degree() - f.den().degree();
        if (at_inf > 0) out.push_back({SpherePoint::infinity(), at_inf});
        return out;
    }
    Polynomial q;
    if (f.has_exact() && b.exact()) {
        q = Polynomial(exact_sub(f.num().exact(), exact_scale(f.den().exact(), *b.exact())));
    } else {
        const Complex bv = b.value();
        std::vector<Complex> c(static_cast<size_t>(std::max(f.num().degree(), f.den().degree())) + 1,
                               Complex{0.0});
        for (int k = 0; k <= f.num().degree(); ++k) c[k] += f.num().coeff(k);
        for (int k = 0; k <= f.den().degree(); ++k) c[k] -= bv * f.den().coeff(k);
        // Degree drop at infinity is a clustering decision, like merging
        // nearby finite roots: trim leading coefficients below noise.
        const double scale =
            std::max(f.num().coeff_scale(), std::abs(bv) * f.den().coeff_scale());
        while (!c.empty() && std::abs(c.back()) <= 1e-10 * scale) c.pop_back();
        q = Polynomial(std::move(c));
    }
    if (q.is_zero()) throw input_error("fiber of the constant value of a constant map");
    if (q.degree() >= 1)
        for (const auto& rc : poly_roots(q)) out.push_back({rc.point(), rc.multiplicity});
    const int at_inf = d - q.degree();
    if (at_inf > 0) out.push_back({SpherePoint::infinity(), at_inf});
    int total = 0;
    for (const auto& fp : out) total += fp.multiplicity;
    if (total != d) throw numeric_error("fiber multiplicities do not sum to the degree");
    return out;
}

int local_multiplicity(const RationalFunction& f, const SpherePoint& p) {
    const auto fb = fiber(f, f.value_at(p));
    for (const auto& fp : fb)
        if (same_point(fp.point, p)) return fp.multiplicity;
    throw numeric_error("point not found in its own fiber");
}

Divisor<SpherePoint> ramification_divisor(const RationalFunction& f) {
    if (f.is_constant()) throw input_error("ramification of a constant map");
    Divisor<SpherePoint> div;
    const RationalFunction df = rat_derivative(f);
    if (!df.is_zero() && df.num().degree() >= 1)
        for (const auto& rc : poly_roots(df.num())) div.add(rc.point(), rc.multiplicity);
    if (f.den().degree() >= 1)
        for (const auto& rc : poly_roots(f.den()))
            if (rc.multiplicity > 1) div.add(rc.point(), rc.multiplicity - 1);
    const int m_inf = local_multiplicity(f, SpherePoint::infinity());
    if (m_inf > 1) div.add(SpherePoint::infinity(), m_inf - 1);
    div.prune();
    return div;
}

Complex residue(const RationalFunction& f, const SpherePoint& p) {
    if (f.is_zero()) return {0.0};
    if (p.is_finite()) return residue_finite(f.num(), f.den(), p.value());
    // Chart w = 1/z: residue at infinity is minus the residue at w = 0 of
    // f(1/w)/w^2.
    const Polynomial rn = f.num().reversed();
    const Polynomial rd = f.den().reversed();
    const int e = f.den().degree() - f.num().degree() - 2;
    Polynomial num_w = rn, den_w = rd;
    auto shift = [](const Polynomial& p, int k) {
        std::vector<Complex> c(p.coeffs().size() + k, Complex{0.0});
        for (size_t i = 0; i < p.coeffs().size(); ++i) c[i + k] = p.coeffs()[i];
        return Polynomial(std::move(c));
    };
    if (e >= 0)
        num_w = shift(rn, e);
    else
        den_w = shift(rd, -e);
    return -residue_finite(num_w, den_w, Complex{0.0});
}

} // namespace minsurf
