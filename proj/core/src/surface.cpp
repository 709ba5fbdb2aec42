#include "minsurf/surface.hpp"

#include <cmath>

#include "minsurf/errors.hpp"

namespace minsurf {

SpherePoint ScaledRat::value_at(const SpherePoint& p) const {
    const SpherePoint v = base.value_at(p);
    if (scale_is_one() || v.is_infinity()) return v;
    return SpherePoint::finite(scale * v.value());
}

WeierstrassSurface WeierstrassSurface::sphere(std::vector<SpherePoint> punctures, ScaledRat g,
                                              ScaledRat h) {
    if (punctures.empty()) throw input_error("a surface needs at least one puncture");
    for (size_t i = 0; i < punctures.size(); ++i)
        for (size_t j = i + 1; j < punctures.size(); ++j)
            if (same_point(punctures[i], punctures[j]))
                throw input_error("punctures must be pairwise distinct");
    if (g.base.is_constant()) throw input_error("constant Gauss map: surface is flat");
    if (h.base.is_zero()) throw input_error("hdz must not vanish identically");
    return WeierstrassSurface(SphereData{std::move(punctures), std::move(g), std::move(h)});
}

WeierstrassSurface WeierstrassSurface::torus(SquareTorus T, std::vector<TorusPoint> punctures,
                                             EllipticFunction g, EllipticFunction h) {
    if (punctures.empty()) throw input_error("a surface needs at least one puncture");
    for (size_t i = 0; i < punctures.size(); ++i)
        for (size_t j = i + 1; j < punctures.size(); ++j)
            if (same_point(punctures[i], punctures[j]))
                throw input_error("punctures must be pairwise distinct");
    if (g.is_constant()) throw input_error("constant Gauss map: surface is flat");
    if (h.is_zero()) throw input_error("hdz must not vanish identically");
    return WeierstrassSurface(TorusData{T, std::move(punctures), std::move(g), std::move(h)});
}

int WeierstrassSurface::puncture_count() const {
    return is_sphere() ? static_cast<int>(sphere_data().punctures.size())
                       : static_cast<int>(torus_data().punctures.size());
}

int WeierstrassSurface::gauss_degree() const {
    if (is_sphere()) return rat_degree(sphere_data().g.base);
    return ell_degree(torus_data().g, torus_data().torus);
}

Complex WeierstrassSurface::g_at(Complex z) const {
    if (is_sphere()) return sphere_data().g.eval(z);
    return torus_data().g.eval(z, torus_data().torus);
}

Complex WeierstrassSurface::h_at(Complex z) const {
    if (is_sphere()) return sphere_data().h.eval(z);
    return torus_data().h.eval(z, torus_data().torus);
}

Complex WeierstrassSurface::g_prime_at(Complex z) const {
    if (is_sphere()) {
        const auto& g = sphere_data().g;
        auto [nv, nd] = g.base.num().eval_with_derivative(z);
        auto [dv, dd] = g.base.den().eval_with_derivative(z);
        return g.scale * (nd * dv - nv * dd) / (dv * dv);
    }
    const auto& td = torus_data();
    return ell_derivative(td.g, td.torus).eval(z, td.torus);
}

WeierstrassSurface WeierstrassSurface::associated(double theta) const {
    const Complex rot = std::polar(1.0, theta);
    if (is_sphere()) {
        SphereData d = sphere_data();
        d.h.scale *= rot;
        return WeierstrassSurface(std::move(d));
    }
    TorusData d = torus_data();
    d.h = d.h.scaled(rot);
    return WeierstrassSurface(std::move(d));
}

} // namespace minsurf
