#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minsurf/analysis.hpp"
#include "minsurf/surface.hpp"

namespace minsurf {

WeierstrassSurface make_catenoid();
WeierstrassSurface make_helicoid();
WeierstrassSurface make_enneper();

/// Genus-0, 3-puncture family on P^1 minus {i, -i, inf}:
/// g = sigma (z^2 + 1 + a(t-1)) / (z^2 + t), hdz = (z^2+t)^2/(z^2+1)^2 dz,
/// sigma^2 = (t+3) / (a((t-1)a+4)) required negative.
WeierstrassSurface make_miyaoka_sato(double a, double t);

/// g = z, hdz = dz / prod (z - a_j) on C minus 2 or 3 finite points.
WeierstrassSurface make_voss(const std::vector<Complex>& finite_points);

/// Square-torus family, punctures at wp = 0, +-a, inf:
/// case 1: g = sigma/(wp^j wp'), hdz = wp dz, j >= 1;
/// case 2: same g, hdz = wp^{j+1} dz, j even >= 2. Degree d = 2j + 3.
WeierstrassSurface make_costa_type(int family_case, int j, Complex sigma);

/// The j = 0 member: g = sigma/wp', hdz = wp dz, three punctures.
WeierstrassSurface make_costa(Complex sigma = {1.0, 0.0});

/// Expected analysis fragment for a named entry; rational fields exact.
struct CatalogGolden {
    int d, G, k, Dg, l, n_g;
    Rational invR;
    Rational nu_g;
    bool algebraic_type;
    bool hyperbolic;
};

struct CatalogEntry {
    std::string name;
    std::string summary;
    WeierstrassSurface (*make)();
    CatalogGolden golden;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* catalog_find(const std::string& name);

/// Named construction with optional parameter overrides (CLI surface specs
/// like "@miyaoka-sato").
struct CatalogParams {
    std::optional<double> a, t;
    std::optional<int> j, family_case;
    std::optional<Complex> sigma;
};
WeierstrassSurface catalog_make(const std::string& name, const CatalogParams& params = {});

} // namespace minsurf
