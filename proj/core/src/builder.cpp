#include "minsurf/builder.hpp"

#include <cmath>
#include <sstream>

#include "minsurf/analysis.hpp"
#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

double dist_point_segment(Complex p, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p - a) * std::conj(ab)).real() / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

Vec3c segment_integral(const PhiTriple& phi, Complex a, Complex b, double rel_tol) {
    const Complex dz = b - a;
    return integrate_gk(
        [&](double t) {
            Vec3c v = phi.eval(a + t * dz);
            for (auto& c : v) c *= dz;
            return v;
        },
        0.0, 1.0, rel_tol);
}

int winding_number(const std::vector<Complex>& pts, Complex p) {
    double total = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        total += std::arg((pts[i + 1] - p) / (pts[i] - p));
    return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

bool lattice_closed(const WeierstrassSurface& S, Complex first, Complex last) {
    if (S.is_sphere()) return false;
    const double s = S.torus_data().torus.omega1();
    const Complex diff = (last - first) / s;
    return std::abs(diff.real() - std::round(diff.real())) < 1e-9 &&
           std::abs(diff.imag() - std::round(diff.imag())) < 1e-9;
}

} // namespace

std::vector<PeriodResult> periods(const WeierstrassSurface& S, const std::vector<Cycle>& cycles,
                                  double rel_tol, double delta_path) {
    const PhiTriple phi = PhiTriple::from_surface(S);
    const auto poles = phi.finite_poles();
    std::vector<PeriodResult> out;
    for (const auto& cyc : cycles) {
        if (cyc.points.size() < 2) throw input_error("cycle needs at least two points");
        std::vector<Complex> pts = cyc.points;
        if (std::abs(pts.front() - pts.back()) > 1e-12 && !lattice_closed(S, pts.front(), pts.back())) {
            if (S.is_sphere())
                pts.push_back(pts.front()); // close the polyline
            else
                throw input_error("torus cycle must close up to a lattice vector");
        }
        for (size_t i = 0; i + 1 < pts.size(); ++i)
            for (const auto& p : poles)
                if (dist_point_segment(p, pts[i], pts[i + 1]) < delta_path) {
                    std::ostringstream os;
                    os << "cycle edge passes within " << delta_path << " of the pole at ("
                       << p.real() << "," << p.imag() << ")";
                    throw input_error(os.str());
                }
        Vec3c total{{{0.0}, {0.0}, {0.0}}};
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            const Vec3c seg = segment_integral(phi, pts[i], pts[i + 1], rel_tol);
            for (int j = 0; j < 3; ++j) total[j] += seg[j];
        }
        PeriodResult pr;
        pr.re_part = {total[0].real(), total[1].real(), total[2].real()};
        if (phi.is_rational() && std::abs(pts.front() - pts.back()) < 1e-12) {
            Vec3c res{{{0.0}, {0.0}, {0.0}}};
            const auto& rphi = phi.rational();
            for (const auto& p : poles) {
                const int w = winding_number(pts, p);
                if (w == 0) continue;
                for (int j = 0; j < 3; ++j)
                    res[j] += Complex{0.0, 2.0 * M_PI} * static_cast<double>(w) *
                              residue(rphi[j], SpherePoint::finite(p));
            }
            pr.residue_side = res;
            double agree = 0.0;
            for (int j = 0; j < 3; ++j) agree = std::max(agree, std::abs(total[j] - res[j]));
            pr.agreement = agree;
        }
        out.push_back(pr);
    }
    return out;
}

Vec3 integrate_displacement(const WeierstrassSurface& S, Complex z0, Complex z1, double rel_tol) {
    const PhiTriple phi = PhiTriple::from_surface(S);
    const Vec3c v = segment_integral(phi, z0, z1, rel_tol);
    return {v[0].real(), v[1].real(), v[2].real()};
}

std::vector<Cycle> standard_cycles(const WeierstrassSurface& S, double radius) {
    std::vector<Cycle> out;
    const int ngon = 24;
    auto loop_around = [&](Complex c, double r) {
        Cycle cyc;
        for (int i = 0; i <= ngon; ++i)
            cyc.points.push_back(c + std::polar(r, 2.0 * M_PI * i / ngon));
        return cyc;
    };
    if (S.is_sphere()) {
        const PhiTriple phi = PhiTriple::from_surface(S);
        std::vector<Complex> centers;
        for (const auto& p : S.sphere_data().punctures)
            if (p.is_finite()) centers.push_back(p.value());
        const auto poles = phi.finite_poles();
        for (const auto& c : centers) {
            double r = radius;
            for (const auto& q : centers)
                if (std::abs(q - c) > 1e-12) r = std::min(r, 0.45 * std::abs(q - c));
            for (const auto& q : poles)
                if (std::abs(q - c) > 1e-9) r = std::min(r, 0.45 * std::abs(q - c));
            out.push_back(loop_around(c, r));
        }
        return out;
    }
    const auto& td = S.torus_data();
    const double s = td.torus.omega1();
    const Complex z0 = Complex{0.23, 0.37} * s;
    out.push_back(Cycle{{z0, z0 + Complex{s, 0.0}}});
    out.push_back(Cycle{{z0, z0 + Complex{0.0, s}}});
    const Complex torsion[4] = {{0.5 * s, 0.0}, {0.0, 0.5 * s}, {0.5 * s, 0.5 * s}, {0.0, 0.0}};
    for (const auto& c : torsion) out.push_back(loop_around(c, std::min(radius, 0.5) * 0.25 * s));
    return out;
}

namespace {

// Pullback density of the degree-normalized sphere area form for a rational
// map, in a pole-free projective form.
double rational_fs_density(const RationalFunction& G, Complex scale, Complex z) {
    auto [nv, nd] = G.num().eval_with_derivative(z);
    auto [dv, dd] = G.den().eval_with_derivative(z);
    nv *= scale;
    nd *= scale;
    const Complex wr = nd * dv - nv * dd;
    const double denom = std::norm(nv) + std::norm(dv);
    const double r = 2.0 * std::abs(wr) / denom;
    return r * r;
}

RationalFunction chart_at_infinity(const RationalFunction& G) {
    const int d = rat_degree(G);
    auto shift = [](const Polynomial& p, int k) {
        std::vector<Complex> c(p.coeffs().size() + k, Complex{0.0});
        for (size_t i = 0; i < p.coeffs().size(); ++i) c[i + k] = p.coeffs()[i];
        return Polynomial(std::move(c));
    };
    return RationalFunction(shift(G.num().reversed(), d - G.num().degree()),
                            shift(G.den().reversed(), d - G.den().degree()));
}

// Integral of dens over the unit disk by polar composite quadrature with
// shell refinement and a guarded Aitken extrapolation.
double disk_integral(const std::function<double(Complex)>& dens, double rel_tol) {
    const auto& [gx, gw] = gauss_legendre(12);
    std::vector<double> seq;
    for (int level = 0; level < 6; ++level) {
        const int nr = 8 << level;
        const int nt = 32 << level;
        double total = 0.0;
        for (int shell = 0; shell < nr; ++shell) {
            const double r0 = static_cast<double>(shell) / nr, r1 = static_cast<double>(shell + 1) / nr;
            for (size_t q = 0; q < gx.size(); ++q) {
                const double r = 0.5 * (r0 + r1) + 0.5 * (r1 - r0) * gx[q];
                double ring = 0.0;
                for (int j = 0; j < nt; ++j)
                    ring += dens(std::polar(r, 2.0 * M_PI * (j + 0.5) / nt));
                total += gw[q] * 0.5 * (r1 - r0) * r * ring * (2.0 * M_PI / nt);
            }
        }
        seq.push_back(total);
        if (seq.size() >= 2 &&
            std::abs(seq.back() - seq[seq.size() - 2]) <= rel_tol * std::abs(seq.back()))
            break;
    }
    if (seq.size() >= 3) {
        // Aitken delta-squared on the last three refinements.
        const double a = seq[seq.size() - 3], b = seq[seq.size() - 2], c = seq.back();
        const double den = (c - b) - (b - a);
        if (std::abs(den) > 1e-14 * std::abs(c)) {
            const double extrap = c - (c - b) * (c - b) / den;
            if (std::abs(extrap - c) < std::abs(c - b)) return extrap;
        }
    }
    return seq.back();
}

} // namespace

TotalCurvatureReport total_curvature(const WeierstrassSurface& S, double rel_tol,
                                     std::optional<double> truncate_radius) {
    TotalCurvatureReport rep;

    // Curvature integral over one copy of the basic domain.
    if (S.is_sphere()) {
        const auto& sd = S.sphere_data();
        const RationalFunction& G = sd.g.base;
        const Complex scale = sd.g.scale;
        if (truncate_radius) {
            const double R = *truncate_radius;
            rep.domain_integral = disk_integral(
                [&](Complex z) { return rational_fs_density(G, scale, R * z) * R * R; }, rel_tol);
            rep.finite = false;
            rep.value = -rep.domain_integral;
            rep.reason = "explicit truncation requested";
            rep.partial_sums = {rep.value};
            return rep;
        }
        const RationalFunction Gw = chart_at_infinity(G);
        rep.domain_integral =
            disk_integral([&](Complex z) { return rational_fs_density(G, scale, z); }, rel_tol) +
            disk_integral([&](Complex z) { return rational_fs_density(Gw, scale, z); }, rel_tol);
    } else {
        // The pullback density can concentrate in narrow peaks at the
        // 2-torsion points (where g meets 0 and infinity), so a uniform grid
        // is paired with log-radial polar patches around each of them.
        const auto& td = S.torus_data();
        const EllipticFunction gp = ell_derivative(td.g, td.torus);
        const double s = td.torus.omega1();
        const Complex torsion[4] = {{0.0, 0.0}, td.torus.half_period(1), td.torus.half_period(2),
                                    td.torus.half_period(3)};
        auto dens = [&](Complex z) {
            const auto w = td.torus.wp(z);
            const Complex gv = td.g.prefactor() * td.g.r().eval(w.p) *
                               (td.g.eps() ? w.dp : Complex{1.0, 0.0});
            const Complex gpv = gp.prefactor() * gp.r().eval(w.p) *
                                (gp.eps() ? w.dp : Complex{1.0, 0.0});
            const double r = 2.0 * std::abs(gpv) / (1.0 + std::norm(gv));
            return r * r;
        };
        const double patch_radius = 0.2 * s;
        const double core_radius = 1e-6 * s;
        auto torsion_distance = [&](Complex z) {
            double dist = 1e300;
            for (const auto& c : torsion) {
                Complex dz = z - c;
                dz = {dz.real() - s * std::round(dz.real() / s),
                      dz.imag() - s * std::round(dz.imag() / s)};
                dist = std::min(dist, std::abs(dz));
            }
            return dist;
        };
        double prev = 0.0;
        for (int level = 0; level < 3; ++level) {
            const int n = 128 << level;
            double total = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const Complex z{(i + 0.5) * s / n, (j + 0.5) * s / n};
                    if (torsion_distance(z) < patch_radius) continue;
                    total += dens(z) * (s / n) * (s / n);
                }
            const int nshell = 40 * (level + 2);
            const int ntheta = 64 << level;
            const auto& [gx, gw] = gauss_legendre(6);
            const double lr0 = std::log(core_radius), lr1 = std::log(patch_radius);
            for (const auto& c : torsion) {
                for (int shell = 0; shell < nshell; ++shell) {
                    const double a = lr0 + (lr1 - lr0) * shell / nshell;
                    const double b = lr0 + (lr1 - lr0) * (shell + 1) / nshell;
                    for (size_t qi = 0; qi < gx.size(); ++qi) {
                        const double lr = 0.5 * (a + b) + 0.5 * (b - a) * gx[qi];
                        const double r = std::exp(lr);
                        double ring = 0.0;
                        for (int j = 0; j < ntheta; ++j)
                            ring += dens(c + std::polar(r, 2.0 * M_PI * (j + 0.5) / ntheta));
                        // dA = r dr dtheta = r^2 d(log r) dtheta
                        total += gw[qi] * 0.5 * (b - a) * r * r * ring * (2.0 * M_PI / ntheta);
                    }
                }
            }
            rep.domain_integral = total;
            if (level > 0 && std::abs(total - prev) <= 10.0 * rel_tol * std::abs(total)) break;
            prev = total;
        }
    }

    // Finite total curvature needs ends of metric order >= 2 and vanishing
    // periods; otherwise the surface lives on a covering and the exhaustion
    // by fundamental copies diverges linearly.
    AnalyzeOptions opt;
    opt.ray_witness = false;
    const auto rep_an = analyze(S, opt);
    const bool ends_ok = rep_an.completeness.algebraic_type;
    double max_period = 0.0;
    try {
        for (const auto& pr : periods(S, standard_cycles(S), 1e-9))
            for (double x : pr.re_part) max_period = std::max(max_period, std::abs(x));
    } catch (const std::exception&) {
        max_period = std::numeric_limits<double>::quiet_NaN();
    }
    rep.max_period = max_period;
    const bool periods_ok = std::isfinite(max_period) && max_period < 1e-6 * (1.0 + rep.domain_integral);

    if (ends_ok && periods_ok) {
        rep.finite = true;
        rep.value = -rep.domain_integral;
        return rep;
    }
    rep.finite = false;
    rep.value = -std::numeric_limits<double>::infinity();
    if (!ends_ok) rep.reason = "an end has metric order < 2 (infinite spherical area)";
    else rep.reason = "period condition fails; the surface lives on a covering";
    for (int n = 1; n <= 8; ++n) rep.partial_sums.push_back(-rep.domain_integral * n);
    return rep;
}

} // namespace minsurf
