#include "minsurf/catalog.hpp"

#include <cmath>
#include <sstream>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

Polynomial exact_one() { return Polynomial::constant_exact(GaussRat(1)); }

GaussRat from_double(double re, double im = 0.0) { return {Rational(re), Rational(im)}; }

} // namespace

WeierstrassSurface make_catenoid() {
    ScaledRat g{RationalFunction::identity(), {1.0, 0.0}};
    Polynomial z2(std::vector<GaussRat>{GaussRat(0), GaussRat(0), GaussRat(1)});
    ScaledRat h{RationalFunction(exact_one(), z2), {1.0, 0.0}};
    std::vector<SpherePoint> punctures{SpherePoint::finite_exact(GaussRat(0)),
                                       SpherePoint::infinity()};
    return WeierstrassSurface::sphere(std::move(punctures), std::move(g), std::move(h));
}

WeierstrassSurface make_helicoid() { return make_catenoid().associated(M_PI / 2.0); }

WeierstrassSurface make_enneper() {
    ScaledRat g{RationalFunction::identity(), {1.0, 0.0}};
    ScaledRat h{RationalFunction(exact_one(), exact_one()), {1.0, 0.0}};
    return WeierstrassSurface::sphere({SpherePoint::infinity()}, std::move(g), std::move(h));
}

WeierstrassSurface make_miyaoka_sato(double a, double t) {
    const Rational ra(a), rt(t);
    if (ra == 1 || rt == 1)
        throw input_error("family needs (a-1)(t-1) != 0");
    const Rational den_factor = ra * ((rt - 1) * ra + 4);
    if (den_factor == 0)
        throw input_error("family needs a((t-1)a+4) != 0");
    const Rational sigma2 = (rt + 3) / den_factor;
    if (sigma2 >= 0) {
        std::ostringstream os;
        os << "family needs sigma^2 = (t+3)/(a((t-1)a+4)) < 0; got sigma^2 = " << sigma2;
        throw input_error(os.str());
    }
    const Complex sigma{0.0, std::sqrt(-to_double(sigma2))};

    // g = sigma * (z^2 + 1 + a(t-1)) / (z^2 + t); the scalar stays outside,
    // the base is exact.
    const Rational c0 = 1 + ra * (rt - 1);
    Polynomial gnum(std::vector<GaussRat>{GaussRat{c0, 0}, GaussRat(0), GaussRat(1)});
    Polynomial gden(std::vector<GaussRat>{GaussRat{rt, 0}, GaussRat(0), GaussRat(1)});
    ScaledRat g{RationalFunction(gnum, gden), sigma};

    // hdz = (z^2+t)^2 / (z^2+1)^2 dz.
    Polynomial hnum(std::vector<GaussRat>{GaussRat{rt * rt, 0}, GaussRat(0), GaussRat{2 * rt, 0},
                                          GaussRat(0), GaussRat(1)});
    Polynomial hden(std::vector<GaussRat>{GaussRat(1), GaussRat(0), GaussRat(2), GaussRat(0),
                                          GaussRat(1)});
    ScaledRat h{RationalFunction(hnum, hden), {1.0, 0.0}};

    std::vector<SpherePoint> punctures{SpherePoint::finite_exact({Rational(0), Rational(1)}),
                                       SpherePoint::finite_exact({Rational(0), Rational(-1)}),
                                       SpherePoint::infinity()};
    return WeierstrassSurface::sphere(std::move(punctures), std::move(g), std::move(h));
}

WeierstrassSurface make_voss(const std::vector<Complex>& finite_points) {
    if (finite_points.size() != 2 && finite_points.size() != 3)
        throw input_error("this family needs 2 or 3 finite punctures");
    Polynomial den = exact_one();
    std::vector<SpherePoint> punctures;
    for (const auto& p : finite_points) {
        den = den * Polynomial(std::vector<GaussRat>{-from_double(p.real(), p.imag()), GaussRat(1)});
        punctures.push_back(SpherePoint::finite_exact(from_double(p.real(), p.imag())));
    }
    punctures.push_back(SpherePoint::infinity());
    ScaledRat g{RationalFunction::identity(), {1.0, 0.0}};
    ScaledRat h{RationalFunction(exact_one(), den), {1.0, 0.0}};
    return WeierstrassSurface::sphere(std::move(punctures), std::move(g), std::move(h));
}

namespace {

EllipticFunction torus_gauss(int j, Complex sigma, const SquareTorus& T) {
    return ell_reciprocal(ell_mul(EllipticFunction::wp_power(j), EllipticFunction::wp_prime(), T), T)
        .scaled(sigma);
}

} // namespace

WeierstrassSurface make_costa_type(int family_case, int j, Complex sigma) {
    if (family_case != 1 && family_case != 2) throw input_error("family case must be 1 or 2");
    if (sigma == Complex{0.0}) throw input_error("sigma must be nonzero");
    if (family_case == 1 && j < 1) throw input_error("case 1 needs j >= 1");
    if (family_case == 2 && (j < 2 || j % 2 != 0))
        throw input_error("case 2 needs even j >= 2");
    const SquareTorus T = SquareTorus::unit();
    EllipticFunction g = torus_gauss(j, sigma, T);
    EllipticFunction h =
        family_case == 1 ? EllipticFunction::wp() : EllipticFunction::wp_power(j + 1);
    std::vector<TorusPoint> punctures{TorusPoint::half_period(2), TorusPoint::half_period(1),
                                      TorusPoint::half_period(3), TorusPoint::lattice()};
    return WeierstrassSurface::torus(T, std::move(punctures), std::move(g), std::move(h));
}

WeierstrassSurface make_costa(Complex sigma) {
    if (sigma == Complex{0.0}) throw input_error("sigma must be nonzero");
    const SquareTorus T = SquareTorus::unit();
    EllipticFunction g = torus_gauss(0, sigma, T);
    EllipticFunction h = EllipticFunction::wp();
    std::vector<TorusPoint> punctures{TorusPoint::lattice(), TorusPoint::half_period(1),
                                      TorusPoint::half_period(3)};
    return WeierstrassSurface::torus(T, std::move(punctures), std::move(g), std::move(h));
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"catenoid", "g = z, hdz = dz/z^2 on P1 minus {0, inf}", [] { return make_catenoid(); },
         {1, 0, 2, 2, 0, 0, Rational(0), Rational(2), true, false}},
        {"helicoid", "catenoid data with hdz rotated by i", [] { return make_helicoid(); },
         {1, 0, 2, 2, 0, 0, Rational(0), Rational(2), true, false}},
        {"enneper", "g = z, hdz = dz on P1 minus {inf}", [] { return make_enneper(); },
         {1, 0, 1, 1, 0, 0, Rational(-1, 2), Rational(1), true, false}},
        {"miyaoka-sato", "degree-2 family on P1 minus {i, -i, inf}, a = -1, t = 0",
         [] { return make_miyaoka_sato(-1.0, 0.0); },
         {2, 0, 3, 2, 1, 2, Rational(1, 4), Rational(5, 2), true, true}},
        {"voss3", "g = z, hdz = dz/(z(z-1)) on C minus {0, 1}",
         [] { return make_voss({{0.0, 0.0}, {1.0, 0.0}}); },
         {1, 0, 3, 3, 0, 0, Rational(1, 2), Rational(3), false, true}},
        {"voss4", "g = z, hdz = dz/(z(z-1)(z+1)) on C minus {0, 1, -1}",
         [] { return make_voss({{0.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}}); },
         {1, 0, 4, 4, 0, 0, Rational(1), Rational(4), false, true}},
        {"costa", "g = sigma/wp', hdz = wp dz on the square torus minus 3 points",
         [] { return make_costa({1.0, 0.0}); },
         {3, 1, 3, 1, 4, 6, Rational(1, 2), Rational(1), true, true}},
        {"costa1", "case 1, j = 1: g = sigma/(wp wp'), hdz = wp dz, 4 punctures",
         [] { return make_costa_type(1, 1, {1.0, 0.0}); },
         {5, 1, 4, 2, 4, 10, Rational(2, 5), Rational(2), true, true}},
    };
    return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return &e;
    return nullptr;
}

WeierstrassSurface catalog_make(const std::string& name, const CatalogParams& p) {
    if (name == "catenoid") return make_catenoid();
    if (name == "helicoid") return make_helicoid();
    if (name == "enneper") return make_enneper();
    if (name == "miyaoka-sato") return make_miyaoka_sato(p.a.value_or(-1.0), p.t.value_or(0.0));
    if (name == "voss3") return make_voss({{0.0, 0.0}, {1.0, 0.0}});
    if (name == "voss4") return make_voss({{0.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}});
    if (name == "costa") return make_costa(p.sigma.value_or(Complex{1.0, 0.0}));
    if (name == "costa1" || name == "costa-type")
        return make_costa_type(p.family_case.value_or(1), p.j.value_or(1),
                               p.sigma.value_or(Complex{1.0, 0.0}));
    throw input_error("unknown catalog entry '" + name + "'");
}

} // namespace minsurf
