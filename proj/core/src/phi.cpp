#include "minsurf/phi.hpp"

#include <cmath>

#include "minsurf/errors.hpp"

namespace minsurf {

PhiTriple PhiTriple::from_surface(const WeierstrassSurface& S) {
    PhiTriple t;
    if (S.is_sphere()) {
        const auto& sd = S.sphere_data();
        const RationalFunction g = sd.g.base * sd.g.scale;
        const RationalFunction h = sd.h.base * sd.h.scale;
        const RationalFunction g2 = g * g;
        const RationalFunction one = RationalFunction::constant({1.0, 0.0});
        RationalData d;
        d.phi[0] = h * (one - g2) * Complex{0.5, 0.0};
        d.phi[1] = h * (one + g2) * Complex{0.0, 0.5};
        d.phi[2] = h * g;
        t.data_ = std::move(d);
    } else {
        const auto& td = S.torus_data();
        const EllipticFunction g2 = ell_mul(td.g, td.g, td.torus);
        const EllipticFunction one = EllipticFunction::one();
        EllipticData d{{}, td.torus};
        d.phi[0] = ell_mul(td.h, ell_sub(one, g2), td.torus).scaled({0.5, 0.0});
        d.phi[1] = ell_mul(td.h, ell_add(one, g2), td.torus).scaled({0.0, 0.5});
        d.phi[2] = ell_mul(td.h, td.g, td.torus);
        t.data_ = std::move(d);
    }
    return t;
}

Vec3c PhiTriple::eval(Complex z) const {
    if (is_rational()) {
        const auto& p = std::get<RationalData>(data_).phi;
        return {p[0].eval(z), p[1].eval(z), p[2].eval(z)};
    }
    const auto& e = std::get<EllipticData>(data_);
    return {e.phi[0].eval(z, e.torus), e.phi[1].eval(z, e.torus), e.phi[2].eval(z, e.torus)};
}

double PhiTriple::conformality_coefficient_residual() const {
    const auto& p = std::get<RationalData>(data_).phi;
    const RationalFunction s = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    if (s.is_zero()) return 0.0;
    double scale = 0.0;
    for (const auto& phi : p) {
        const RationalFunction sq = phi * phi;
        scale = std::max(scale, sq.num().coeff_scale());
    }
    return s.num().coeff_scale() / std::max(scale, 1e-300);
}

double PhiTriple::conformality_residual(const std::vector<Complex>& samples) const {
    double worst = 0.0;
    for (const Complex& z : samples) {
        const Vec3c v = eval(z);
        const Complex sum = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        double mx = 0.0;
        for (const auto& c : v) mx = std::max(mx, std::norm(c));
        if (!(mx > 0.0) || !std::isfinite(mx)) continue;
        worst = std::max(worst, std::abs(sum) / mx);
    }
    return worst;
}

std::vector<Complex> PhiTriple::finite_poles() const {
    std::vector<Complex> poles;
    auto push_unique = [&](Complex p) {
        for (const auto& q : poles)
            if (std::abs(p - q) < 1e-9) return;
        poles.push_back(p);
    };
    if (is_rational()) {
        for (const auto& phi : std::get<RationalData>(data_).phi) {
            if (phi.den().degree() < 1) continue;
            for (const auto& rc : poly_roots(phi.den())) push_unique(rc.center);
        }
        return poles;
    }
    // Elliptic triples in the catalog have all poles at the 2-torsion points;
    // generic wp-level poles would need wp inversion and are reported via
    // quadrature failure instead.
    const auto& e = std::get<EllipticData>(data_);
    const double s = e.torus.omega1();
    push_unique({0.0, 0.0});
    push_unique({s, 0.0});
    push_unique({0.0, s});
    push_unique({s, s});
    for (int i = 1; i <= 3; ++i) push_unique(e.torus.half_period(i));
    return poles;
}

CurvatureValue curvature_at(const WeierstrassSurface& S, Complex z) {
    double gp_over, one_plus_g2, habs;
    if (S.is_sphere()) {
        const auto& sd = S.sphere_data();
        // Projective forms stay finite across poles of g.
        auto [nv, nd] = sd.g.base.num().eval_with_derivative(z);
        auto [dv, dd] = sd.g.base.den().eval_with_derivative(z);
        nv *= sd.g.scale;
        nd *= sd.g.scale;
        const Complex wr = nd * dv - nv * dd; // Wronskian numerator
        const double denom2 = std::norm(nv) + std::norm(dv);
        // |g'|/(1+|g|^2)^2 = |W| |d|^2 / (|n|^2+|d|^2)^2
        gp_over = std::abs(wr) * std::norm(dv) / (denom2 * denom2);
        one_plus_g2 = denom2 / std::norm(dv); // (1+|g|^2) = (|n|^2+|d|^2)/|d|^2
        habs = std::abs(sd.h.eval(z));
    } else {
        const auto& td = S.torus_data();
        const Complex g = td.g.eval(z, td.torus);
        const Complex gp = ell_derivative(td.g, td.torus).eval(z, td.torus);
        one_plus_g2 = 1.0 + std::norm(g);
        gp_over = std::abs(gp) / (one_plus_g2 * one_plus_g2);
        habs = std::abs(td.h.eval(z, td.torus));
    }
    const double lam = habs * one_plus_g2 / 2.0;
    if (!(lam > 0.0) || !std::isfinite(lam))
        throw numeric_error("metric degenerate or singular at the requested point");
    const double ratio = 4.0 * gp_over / habs;
    CurvatureValue cv;
    cv.K = -ratio * ratio;
    cv.ds2_factor = lam * lam;
    return cv;
}

double fs_pullback_density(const WeierstrassSurface& S, Complex z) {
    if (S.is_sphere()) {
        const auto& sd = S.sphere_data();
        auto [nv, nd] = sd.g.base.num().eval_with_derivative(z);
        auto [dv, dd] = sd.g.base.den().eval_with_derivative(z);
        nv *= sd.g.scale;
        nd *= sd.g.scale;
        const Complex wr = nd * dv - nv * dd;
        const double denom2 = std::norm(nv) + std::norm(dv);
        const double r = 2.0 * std::abs(wr) / denom2;
        return r * r;
    }
    const auto& td = S.torus_data();
    const Complex g = td.g.eval(z, td.torus);
    const Complex gp = ell_derivative(td.g, td.torus).eval(z, td.torus);
    const double r = 2.0 * std::abs(gp) / (1.0 + std::norm(g));
    return r * r;
}

} // namespace minsurf
