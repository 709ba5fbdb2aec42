// Acceptance suite: one line per criterion, exact tolerances pinned in code.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

#include "minsurf/builder.hpp"
#include "minsurf/catalog.hpp"
#include "minsurf/covering.hpp"
#include "minsurf/mesh.hpp"
#include "minsurf/nevanlinna.hpp"

using namespace minsurf;

namespace {

int failures = 0;

void criterion(int n, const char* what, const std::function<void()>& body) {
    try {
        body();
        std::printf("criterion %02d PASS  %s\n", n, what);
    } catch (const std::exception& e) {
        ++failures;
        std::printf("criterion %02d FAIL  %s\n              %s\n", n, what, e.what());
    }
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw check_error(msg);
}

bool has_value(const std::vector<SpherePoint>& vs, const SpherePoint& v) {
    for (const auto& w : vs)
        if (same_point(w, v, 1e-9)) return true;
    return false;
}

AnalysisReport analyze_fast(const WeierstrassSurface& S) {
    AnalyzeOptions opt;
    opt.ray_witness = false;
    return analyze(S, opt);
}

// Random complete regular surface with every hdz pole order >= 2 at the
// punctures: finite poles of g get the exact compensating zeros of hdz, the
// remaining hdz poles sit at the punctures.
WeierstrassSurface random_thick_end_surface(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coord(-4, 4);
    std::uniform_int_distribution<int> count(1, 3), mult(1, 2);
    while (true) {
        // Distinct Gaussian-integer poles with multiplicities.
        const int npoles = count(rng);
        std::vector<GaussRat> poles;
        std::vector<int> mults;
        while (static_cast<int>(poles.size()) < npoles) {
            GaussRat p{Rational(coord(rng)), Rational(coord(rng))};
            bool dup = false;
            for (const auto& q : poles)
                if (q == p) dup = true;
            if (!dup) {
                poles.push_back(p);
                mults.push_back(mult(rng));
            }
        }
        Polynomial den = Polynomial::constant_exact(GaussRat(1));
        Polynomial hnum = Polynomial::constant_exact(GaussRat(1));
        int d = 0;
        for (int i = 0; i < npoles; ++i) {
            const Polynomial lin(std::vector<GaussRat>{-poles[i], GaussRat(1)});
            for (int m = 0; m < mults[i]; ++m) den = den * lin;
            for (int m = 0; m < 2 * mults[i]; ++m) hnum = hnum * lin;
            d += mults[i];
        }
        // Numerator: exact, degree <= deg den, coprime to den.
        std::uniform_int_distribution<int> ndeg(0, d);
        std::vector<GaussRat> nc(ndeg(rng) + 1);
        for (auto& c : nc) c = GaussRat{Rational(coord(rng)), Rational(coord(rng))};
        if (nc.back().is_zero()) nc.back() = GaussRat(1);
        Polynomial num(std::move(nc));
        if (num.is_zero()) continue;
        if (exact_gcd(num.exact(), den.exact()).size() > 1) continue;
        RationalFunction g(num, den);
        if (rat_degree(g) != d || d < 1) continue;

        // Punctures: infinity plus up to d finite points away from the poles.
        std::uniform_int_distribution<int> ne(1, d);
        const int nfinite = ne(rng);
        std::vector<GaussRat> ends;
        int guard = 0;
        while (static_cast<int>(ends.size()) < nfinite && ++guard < 200) {
            GaussRat p{Rational(coord(rng)), Rational(coord(rng))};
            bool bad = false;
            for (const auto& q : poles)
                if (q == p) bad = true;
            for (const auto& q : ends)
                if (q == p) bad = true;
            if (!bad) ends.push_back(p);
        }
        if (static_cast<int>(ends.size()) != nfinite) continue;
        Polynomial hden = Polynomial::constant_exact(GaussRat(1));
        std::vector<SpherePoint> punctures;
        for (const auto& p : ends) {
            const Polynomial lin(std::vector<GaussRat>{-p, GaussRat(1)});
            hden = hden * lin * lin; // mu = 2 at each finite end
            punctures.push_back(SpherePoint::finite_exact(p));
        }
        punctures.push_back(SpherePoint::infinity());
        ScaledRat gs{std::move(g), {1.0, 0.0}};
        ScaledRat hs{RationalFunction(hnum, hden), {1.0, 0.0}};
        return WeierstrassSurface::sphere(std::move(punctures), std::move(gs), std::move(hs));
    }
}

Polynomial random_exact_poly(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<long> coeff(-3, 3);
    while (true) {
        std::vector<GaussRat> c(deg + 1);
        for (auto& x : c) x = GaussRat{Rational(coeff(rng)), Rational(coeff(rng))};
        if (!c.back().is_zero()) return Polynomial(std::move(c));
    }
}

RationalFunction random_exact_map_of_degree(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> pick(0, d);
    while (true) {
        int dn = pick(rng), dd = pick(rng);
        if (std::max(dn, dd) != d) continue;
        RationalFunction f(random_exact_poly(rng, dn), random_exact_poly(rng, dd));
        if (!f.is_constant() && rat_degree(f) == d) return f;
    }
}

std::vector<SpherePoint> random_exact_punctures(std::mt19937_64& rng, int min_count) {
    std::uniform_int_distribution<long> coord(-5, 5);
    std::uniform_int_distribution<int> count(min_count, min_count + 3), coin(0, 1);
    const int n = count(rng);
    std::vector<SpherePoint> out;
    if (coin(rng)) out.push_back(SpherePoint::infinity());
    int guard = 0;
    while (static_cast<int>(out.size()) < n && ++guard < 200) {
        const SpherePoint p = SpherePoint::finite_exact({Rational(coord(rng)), Rational(coord(rng))});
        bool dup = false;
        for (const auto& q : out)
            if (same_point(q, p)) dup = true;
        if (!dup) out.push_back(p);
    }
    return out;
}

CoverSpec random_cover(std::mt19937_64& rng, int k) {
    std::uniform_int_distribution<int> md(1, 6);
    CoverSpec spec;
    spec.m = md(rng);
    spec.fibers.resize(k);
    for (auto& part : spec.fibers) {
        int left = spec.m;
        while (left > 0) {
            std::uniform_int_distribution<int> pd(1, left);
            const int p = pd(rng);
            part.push_back(p);
            left -= p;
        }
    }
    return spec;
}

} // namespace

int main() {
    criterion(1, "degree-2 sharp surface: exact report with both equalities", [] {
        const auto r = analyze_fast(make_miyaoka_sato(-1.0, 0.0));
        require(r.exact, "analysis must run on the exact path");
        require(r.d == 2 && r.k == 3 && r.G == 0, "d, k, G");
        require(r.bounds.invR == Rational(1, 4), "R = 4 exactly");
        require(r.Dg == 2, "Dg = 2");
        require(r.nu_g == Rational(5, 2), "nu_g = 5/2 exactly");
        require(r.bounds.eq_dg_refined, "equality in the refined exceptional bound");
        require(r.bounds.eq_nu, "equality in the ramified-value bound");
        require(r.l == 1, "l = 1");
        require(r.rh.n_g == 2, "n_g = 2");
    });

    criterion(2, "punctured-plane identity maps: sharp counts and divergence", [] {
        const auto r3 = analyze_fast(catalog_make("voss3"));
        require(r3.Dg == 3, "k=3 gives Dg = 3");
        require(r3.bounds.invR == Rational(1, 2) && r3.bounds.bound == Rational(3),
                "Dg = 3 = 2 + 2/2 with R = 2");
        require(r3.bounds.eq_dg, "equality at k=3");
        const auto r4 = analyze_fast(catalog_make("voss4"));
        require(r4.Dg == 4, "k=4 gives Dg = 4");
        require(r4.bounds.invR == Rational(1) && r4.bounds.bound == Rational(4),
                "Dg = 4 = 2 + 2/1 with R = 1");
        require(r4.bounds.eq_dg, "equality at k=4");
        require(!total_curvature(catalog_make("voss3")).finite, "k=3 total curvature diverges");
        require(!total_curvature(catalog_make("voss4")).finite, "k=4 total curvature diverges");
    });

    criterion(3, "torus family case 1, j = 1,2,3: degrees, omitted set, branching", [] {
        for (int j = 1; j <= 3; ++j) {
            const auto S = make_costa_type(1, j, {1.0, 0.0});
            const auto& td = S.torus_data();
            require(ell_degree(td.g, td.torus) == 2 * j + 3, "degree 2j+3");
            const auto r = analyze_fast(S);
            require(r.d == 2 * j + 3, "report degree");
            require(r.Dg == 2, "two omitted values");
            require(has_value(r.exceptional, SpherePoint::finite(0.0)), "0 omitted");
            require(has_value(r.exceptional, SpherePoint::infinity()), "infinity omitted");
            require(ell_ramification(td.g, td.torus).degree() == 2 * r.d, "n_g = 2d exactly");
            require(r.rh.n_g == 2 * r.d, "report n_g = 2d");
        }
    });

    criterion(4, "branching identity n_g = 2(d+G-1) on catalog and 200 random maps", [] {
        for (const auto& e : catalog_entries()) {
            const auto r = analyze_fast(e.make());
            require(r.rh.n_g == 2 * (r.d + r.G - 1), "catalog entry " + e.name);
            require(r.rh.identity_ok, "split identity on " + e.name);
        }
        std::mt19937_64 rng(20240811);
        std::uniform_int_distribution<int> dd(1, 8);
        for (int t = 0; t < 200; ++t) {
            const RationalFunction g = random_exact_map_of_degree(rng, dd(rng));
            const auto punctures = random_exact_punctures(rng, 1);
            const auto rh = branching_totals(g, punctures);
            require(rh.n_g == 2 * (rh.d - 1), "random map branching total");
            require(rh.n_0 + rh.n_b == rh.n_g, "branching split");
            require(rh.puncture_bound_ok, "k >= d r0 - n_0");
            require(rh.nb_ge_l, "n_b >= l");
        }
    });

    criterion(5, "nu_g < 4 strictly on 500 random surfaces with all mu_j >= 2", [] {
        std::mt19937_64 rng(5150);
        for (int t = 0; t < 500; ++t) {
            const auto S = random_thick_end_surface(rng);
            const auto r = analyze_fast(S);
            require(r.exact, "exact path");
            for (int mu : r.completeness.mu)
                require(mu >= 2, "construction guarantees mu_j >= 2");
            require(r.completeness.algebraic_type, "algebraic type");
            require(r.nu_g < Rational(4), "nu_g < 4 strictly");
            require(r.regularity.ok, "regular data");
            require(r.rh.identity_ok, "branching identity");
        }
    });

    criterion(6, "ratio invariance over 1000 Euler-consistent covers", [] {
        std::mt19937_64 rng(606);
        int accepted = 0;
        size_t entry = 0;
        std::vector<AnalysisReport> base;
        for (const auto& e : catalog_entries()) base.push_back(analyze_fast(e.make()));
        int guard = 0;
        while (accepted < 1000 && ++guard < 100000) {
            const auto& b = base[entry];
            entry = (entry + 1) % base.size();
            const CoverSpec spec = random_cover(rng, b.k);
            try {
                const auto res = cover_pushforward(b.G, b.k, b.d, spec);
                require(res.ratio_invariant, "1/R changed under a cover");
                require(res.d_prime == spec.m * b.d, "degree multiplies");
                ++accepted;
            } catch (const input_error&) {
                // Euler-inconsistent draw.
            }
        }
        require(accepted == 1000, "could not draw 1000 consistent covers");
    });

    criterion(7, "unicity: q <= 4 + 2/R on the worked pairs and 100 random pairs", [] {
        // g1 = z vs g2 = -z on P1 minus {1,-1,2,inf}.
        {
            std::vector<SpherePoint> punct{
                SpherePoint::finite_exact(GaussRat(1)), SpherePoint::finite_exact(GaussRat(-1)),
                SpherePoint::finite_exact(GaussRat(2)), SpherePoint::infinity()};
            ScaledRat h{RationalFunction::constant({1.0, 0.0}), {1.0, 0.0}};
            const auto s1 = WeierstrassSurface::sphere(
                punct, ScaledRat{RationalFunction::identity(), {1.0, 0.0}}, h);
            const auto s2 = WeierstrassSurface::sphere(
                punct, ScaledRat{RationalFunction::identity(), {-1.0, 0.0}}, h);
            const auto rep = unicity_scan(s1, s2);
            require(rep.q == 4, "first worked pair has q = 4");
            require(rep.bound == Rational(6) && rep.q_ok, "q <= 6");
        }
        // g1 = z vs g2 = 1/z on P1 minus {0, inf}.
        {
            std::vector<SpherePoint> punct{SpherePoint::finite_exact(GaussRat(0)),
                                           SpherePoint::infinity()};
            ScaledRat h{RationalFunction::constant({1.0, 0.0}), {1.0, 0.0}};
            Polynomial z(std::vector<GaussRat>{GaussRat(0), GaussRat(1)});
            const auto s1 = WeierstrassSurface::sphere(
                punct, ScaledRat{RationalFunction::identity(), {1.0, 0.0}}, h);
            const auto s2 = WeierstrassSurface::sphere(
                punct,
                ScaledRat{RationalFunction(Polynomial::constant_exact(GaussRat(1)), z), {1.0, 0.0}},
                h);
            const auto rep = unicity_scan(s1, s2);
            require(rep.q == 4, "second worked pair has q = 4");
            require(rep.bound == Rational(4) && rep.q_ok, "q <= 4 with equality");
            require(rep.sum_delta <= 2, "sum delta_j <= 2d");
        }
        std::mt19937_64 rng(707);
        std::uniform_int_distribution<int> dd(1, 5);
        int done = 0, guard = 0;
        while (done < 100 && ++guard < 2000) {
            const int d = dd(rng);
            const auto punct = random_exact_punctures(rng, 2);
            ScaledRat h{RationalFunction::constant({1.0, 0.0}), {1.0, 0.0}};
            try {
                const auto s1 = WeierstrassSurface::sphere(
                    punct, ScaledRat{random_exact_map_of_degree(rng, d), {1.0, 0.0}}, h);
                const auto s2 = WeierstrassSurface::sphere(
                    punct, ScaledRat{random_exact_map_of_degree(rng, d), {1.0, 0.0}}, h);
                const auto rep = unicity_scan(s1, s2);
                require(rep.q_ok, "q exceeds 4 + 2/R on a random pair");
                require(rep.delta_ok, "sum delta exceeds 2d on a random pair");
                ++done;
            } catch (const input_error&) {
                // coincident maps or degenerate draws
            }
        }
        require(done == 100, "could not draw 100 random pairs");
    });

    criterion(8, "numeric spot values: curvature, periods, heights", [] {
        const auto tc = total_curvature(make_catenoid());
        require(tc.finite, "catenoid total curvature is finite");
        require(std::abs(tc.value + 4.0 * M_PI) <= 0.01 * 4.0 * M_PI,
                "catenoid total curvature -4pi within 1%");
        const auto pr = periods(make_catenoid(), standard_cycles(make_catenoid()));
        for (double x : pr.at(0).re_part)
            require(std::abs(x) <= 1e-8, "catenoid period vanishes to 1e-8");
        const auto heli = make_helicoid();
        const auto ph = periods(heli, standard_cycles(heli));
        require(std::abs(ph.at(0).re_part[2] + 2.0 * M_PI) <= 1e-8,
                "helicoid vertical period -2pi within 1e-8");
        const Vec3 disp = integrate_displacement(make_catenoid(), {1.0, 0.0}, {2.0, 0.0});
        require(std::abs(disp[2] - std::log(2.0)) <= 1e-8, "x3(2)-x3(1) = log 2 within 1e-8");
        require(std::abs(curvature_at(make_enneper(), {0.0, 0.0}).K + 16.0) <= 1e-10,
                "K(0) = -16 on the degree-1 polynomial surface");
        require(std::abs(curvature_at(make_catenoid(), std::polar(1.0, 0.8)).K + 1.0) <= 1e-10,
                "K = -1 on the catenoid waist circle");
    });

    criterion(9, "mesh residuals drop by >= 3.5x under 2x refinement", [] {
        GridSpec coarse;
        coarse.center = {0.0, 0.0};
        coarse.rmin = 0.2;
        coarse.rmax = 1.0;
        coarse.nr = 64;
        coarse.ntheta = 64;
        GridSpec fine = coarse;
        fine.nr = 128;
        fine.ntheta = 128;
        const auto qc = mesh_quality(integrate_surface(make_enneper(), coarse, {0.5, 0.0}));
        const auto qf = mesh_quality(integrate_surface(make_enneper(), fine, {0.5, 0.0}));
        std::ostringstream os;
        os << "harmonic ratio " << qc.harmonic_residual / qf.harmonic_residual
           << ", isothermal ratios " << qc.isothermal_diff / qf.isothermal_diff << ", "
           << qc.isothermal_dot / qf.isothermal_dot;
        require(qc.harmonic_residual / qf.harmonic_residual >= 3.5, "harmonicity: " + os.str());
        require(qc.isothermal_diff / qf.isothermal_diff >= 3.5, "isothermal diff: " + os.str());
        require(qc.isothermal_dot / qf.isothermal_dot >= 3.5, "isothermal dot: " + os.str());
    });

    criterion(10, "fundamental-domain area identities, exact", [] {
        for (const auto& e : catalog_entries()) {
            const auto S = e.make();
            const auto rep = area_ratio_check(S);
            if (!rep.hyperbolic) continue;
            require(rep.A_hyp == hyperbolic_area(S.genus(), S.puncture_count()).value,
                    "A_hyp = G - 1 + k/2 on " + e.name);
            const Rational invR = ratio_inv_R(S.genus(), S.puncture_count(), S.gauss_degree());
            require(rep.A_FS * invR == rep.A_hyp, "A_FS = R A_hyp on " + e.name);
            require(rep.ok, "ratio check on " + e.name);
        }
    });

    criterion(11, "disk characteristic: pipeline self-test and bounded slack", [] {
        for (double r : {0.5, 0.9}) {
            const double expect = 0.5 * std::log(1.0 / (1.0 - r * r));
            require(std::abs(hyperbolic_comparison_integral(r) - expect) <= 1e-6,
                    "comparison integral within 1e-6");
        }
        const std::array<SpherePoint, 3> punct{SpherePoint::finite(0.0), SpherePoint::finite(1.0),
                                               SpherePoint::infinity()};
        const auto rep = characteristic_voss3(punct, {0.5, 0.7, 0.9});
        double prev = -1.0;
        for (const auto& s : rep.samples) {
            require(s.reliable, "sample must be reliable");
            require(s.T >= prev, "T nondecreasing in r");
            prev = s.T;
            require(s.slack <= 1.0, "slack against log 1/(1-r) stays below 1");
        }
    });

    criterion(12, "conformality residual < 1e-10 at 50 points per entry", [] {
        std::mt19937_64 rng(1212);
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        for (const auto& e : catalog_entries()) {
            const auto S = e.make();
            const auto phi = PhiTriple::from_surface(S);
            std::vector<Complex> samples;
            int guard = 0;
            while (samples.size() < 50 && ++guard < 5000) {
                Complex z{u(rng), u(rng)};
                if (!S.is_sphere()) z = {std::abs(z.real()), std::abs(z.imag())};
                bool ok = true;
                for (const auto& p : phi.finite_poles())
                    if (std::abs(z - p) < 0.05) ok = false;
                if (ok) samples.push_back(z);
            }
            require(samples.size() == 50, "sampling failed");
            require(phi.conformality_residual(samples) < 1e-10,
                    "conformality residual on " + e.name);
        }
    });

    if (failures == 0) {
        std::printf("acceptance: all criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
