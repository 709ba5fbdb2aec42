#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "minsurf/analysis.hpp"
#include "minsurf/catalog.hpp"

using namespace minsurf;

namespace {

bool has_value(const std::vector<SpherePoint>& vs, const SpherePoint& v, double eps = 1e-9) {
    for (const auto& w : vs)
        if (same_point(w, v, eps)) return true;
    return false;
}

} // namespace

TEST_CASE("degree-2 sharp example: full report") {
    const auto S = make_miyaoka_sato(-1.0, 0.0);
    const auto r = analyze(S);
    CHECK(r.exact);
    CHECK(r.d == 2);
    CHECK(r.G == 0);
    CHECK(r.k == 3);
    CHECK(r.bounds.invR == Rational(1, 4));
    CHECK(r.Dg == 2);
    const double sig = std::sqrt(3.0 / 5.0);
    CHECK(has_value(r.exceptional, SpherePoint::finite({0.0, sig})));
    CHECK(has_value(r.exceptional, SpherePoint::finite({0.0, -sig})));
    CHECK(r.nu_g == Rational(5, 2));
    CHECK(r.l == 1);
    CHECK(r.rh.n_g == 2);
    CHECK(r.rh.n_0 == 1);
    CHECK(r.rh.n_b == 1);
    CHECK(r.rh.identity_ok);
    CHECK(r.rh.puncture_bound_ok); // 3 >= 2*2 - 1, with equality
    // The extra totally ramified value is infinity, attained doubly at z = 0.
    bool found_inf = false;
    for (const auto& t : r.totally_ramified)
        if (!t.exceptional && t.value.is_infinity()) {
            found_inf = true;
            CHECK(t.nu == 2);
        }
    CHECK(found_inf);
    // Equality lands on the refined exceptional bound and the ramified bound,
    // not on the plain 2 + 2/R.
    CHECK(r.bounds.bound == Rational(5, 2));
    CHECK(r.bounds.refined_bound == Rational(2));
    CHECK(!r.bounds.eq_dg);
    CHECK(r.bounds.eq_dg_refined);
    CHECK(r.bounds.eq_nu);
    CHECK(r.completeness.mu == std::vector<int>{2, 2, 2});
    CHECK(r.completeness.algebraic_type);
    CHECK(r.completeness.euler_ok);
    CHECK(r.regularity.ok);
    CHECK(r.bounds.nu_strict_ok);
    CHECK(r.all_ok());
}

TEST_CASE("the sharp example stays sharp across the parameter grid") {
    // nu_g = 5/2 and both equalities for every valid (a, t) sampled.
    const double as[] = {-1.0, -2.0, -0.5, -3.0, 0.5};
    const double ts[] = {0.0, -1.0, 2.0, 0.5};
    int valid = 0;
    for (double a : as)
        for (double t : ts) {
            WeierstrassSurface S = make_catenoid();
            try {
                S = make_miyaoka_sato(a, t);
            } catch (const input_error&) {
                continue;
            }
            ++valid;
            const auto r = analyze(S);
            CHECK(r.exact);
            CHECK(r.Dg == 2);
            CHECK(r.nu_g == Rational(5, 2));
            CHECK(r.bounds.eq_dg_refined);
            CHECK(r.bounds.eq_nu);
        }
    CHECK(valid >= 8);
}

TEST_CASE("invalid family parameters are rejected") {
    CHECK_THROWS_AS(make_miyaoka_sato(2.0, 0.0), input_error);  // sigma^2 = 3/4 > 0
    CHECK_THROWS_AS(make_miyaoka_sato(1.0, 5.0), input_error);  // (a-1)(t-1) = 0
    CHECK_THROWS_AS(make_miyaoka_sato(-1.0, 1.0), input_error); // (a-1)(t-1) = 0
    CHECK_NOTHROW(make_miyaoka_sato(-1.0, 0.0));                // sigma^2 = -3/5
}

TEST_CASE("catenoid and enneper reports") {
    SUBCASE("catenoid") {
        const auto r = analyze(make_catenoid());
        CHECK(r.d == 1);
        CHECK(r.Dg == 2);
        CHECK(has_value(r.exceptional, SpherePoint::finite(0.0)));
        CHECK(has_value(r.exceptional, SpherePoint::infinity()));
        CHECK(r.nu_g == Rational(2));
        CHECK(r.bounds.invR == Rational(0));
        CHECK(r.bounds.eq_dg);
        CHECK(r.rh.n_g == 0);
        CHECK(r.completeness.mu == std::vector<int>{2, 0});
        CHECK(r.completeness.end_order == std::vector<int>{2, 2});
        CHECK(!r.completeness.divisor_tier); // the inf end needs the g-factor
        CHECK(r.completeness.complete);
        CHECK(r.completeness.algebraic_type);
        CHECK(r.all_ok());
        // Numeric ray witness agrees with the divisor arithmetic.
        REQUIRE(r.completeness.ray_exponent.size() == 2);
        CHECK(r.completeness.ray_exponent[0] == doctest::Approx(2.0).epsilon(0.05));
        CHECK(r.completeness.ray_exponent[1] == doctest::Approx(2.0).epsilon(0.05));
    }
    SUBCASE("enneper") {
        const auto r = analyze(make_enneper());
        CHECK(r.d == 1);
        CHECK(r.Dg == 1);
        CHECK(has_value(r.exceptional, SpherePoint::infinity()));
        CHECK(r.nu_g == Rational(1));
        CHECK(r.bounds.invR == Rational(-1, 2));
        CHECK(r.bounds.bound == Rational(1));
        CHECK(r.bounds.eq_dg);
        CHECK(r.bounds.eq_nu);
        CHECK(r.completeness.algebraic_type);
        CHECK(r.all_ok());
    }
    SUBCASE("helicoid report matches catenoid") {
        const auto a = analyze(make_catenoid());
        const auto b = analyze(make_helicoid());
        CHECK(a.d == b.d);
        CHECK(a.Dg == b.Dg);
        CHECK(a.nu_g == b.nu_g);
        CHECK(a.l == b.l);
        CHECK(a.rh.n_g == b.rh.n_g);
        CHECK(a.bounds.invR == b.bounds.invR);
        CHECK(a.completeness.mu == b.completeness.mu);
        CHECK(a.completeness.end_order == b.completeness.end_order);
        CHECK(b.all_ok());
    }
}

TEST_CASE("punctured-plane identity maps (2 and 3 finite punctures)") {
    SUBCASE("k = 3") {
        const auto r = analyze(make_voss({{0.0, 0.0}, {1.0, 0.0}}));
        CHECK(r.d == 1);
        CHECK(r.k == 3);
        CHECK(r.Dg == 3);
        CHECK(r.bounds.invR == Rational(1, 2));
        CHECK(r.bounds.bound == Rational(3));
        CHECK(r.bounds.eq_dg);
        CHECK(r.nu_g == Rational(3));
        CHECK(r.l == 0);
        CHECK(r.completeness.complete);
        CHECK(!r.completeness.algebraic_type);
        CHECK(r.all_ok());
    }
    SUBCASE("k = 4") {
        const auto r = analyze(make_voss({{0.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}}));
        CHECK(r.Dg == 4);
        CHECK(r.bounds.invR == Rational(1));
        CHECK(r.bounds.bound == Rational(4));
        CHECK(r.bounds.eq_dg);
        CHECK(r.nu_g == Rational(4));
        CHECK(r.completeness.mu == std::vector<int>{1, 1, 1, -1});
        CHECK(r.completeness.end_order == std::vector<int>{1, 1, 1, 1});
        CHECK(r.completeness.complete);
        CHECK(!r.completeness.algebraic_type);
        CHECK(r.bounds.nu_strict_ok); // vacuous: not algebraic type
        CHECK(r.all_ok());
    }
    SUBCASE("puncture count is restricted") {
        CHECK_THROWS_AS(make_voss({{0.0, 0.0}}), input_error);
        CHECK_THROWS_AS(make_voss({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}}), input_error);
        CHECK_THROWS_AS(make_voss({{0.0, 0.0}, {0.0, 0.0}}), input_error);
    }
}

TEST_CASE("g = z^2 with both torsion fibers at punctures") {
    Polynomial num(std::vector<GaussRat>{GaussRat(0), GaussRat(0), GaussRat(1)});
    ScaledRat g{RationalFunction(num, Polynomial::constant_exact(GaussRat(1))), {1.0, 0.0}};
    Polynomial z4(std::vector<GaussRat>{GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(0),
                                        GaussRat(1)});
    ScaledRat h{RationalFunction(Polynomial::constant_exact(GaussRat(1)), z4), {1.0, 0.0}};
    const auto S = WeierstrassSurface::sphere(
        {SpherePoint::finite_exact(GaussRat(0)), SpherePoint::infinity()}, g, h);
    const auto r = analyze(S);
    CHECK(r.d == 2);
    CHECK(r.Dg == 2);
    CHECK(r.nu_g == Rational(2));
    CHECK(r.rh.n_g == 2);
    CHECK(r.rh.n_0 == 2);
    CHECK(r.rh.n_b == 0);
    CHECK(r.l == 0);
    CHECK(r.regularity.ok);
    CHECK(r.completeness.complete);
}

TEST_CASE("regularity violations carry witnesses") {
    // g = z with hdz = dz on P1 minus {0}: the pole of g at infinity sits in
    // M with no compensating zero of hdz.
    ScaledRat g{RationalFunction::identity(), {1.0, 0.0}};
    ScaledRat h{RationalFunction(Polynomial::constant_exact(GaussRat(1)),
                                 Polynomial::constant_exact(GaussRat(1))),
                {1.0, 0.0}};
    const auto S = WeierstrassSurface::sphere({SpherePoint::finite_exact(GaussRat(0))}, g, h);
    const auto rep = regularity_check(S);
    CHECK(!rep.ok);
    REQUIRE(!rep.witnesses.empty());
}

TEST_CASE("torus family reports") {
    SUBCASE("three-ended j = 0 member") {
        const auto r = analyze(make_costa());
        CHECK(r.d == 3);
        CHECK(r.G == 1);
        CHECK(r.k == 3);
        CHECK(r.Dg == 1);
        CHECK(has_value(r.exceptional, SpherePoint::finite(0.0)));
        CHECK(r.nu_g == Rational(1));
        CHECK(r.l == 4);
        CHECK(r.rh.n_g == 6);
        CHECK(r.rh.n_0 == 2);
        CHECK(r.rh.n_b == 4);
        CHECK(r.rh.identity_ok);
        CHECK(r.bounds.invR == Rational(1, 2));
        CHECK(r.completeness.mu == std::vector<int>{2, 0, 0});
        CHECK(r.completeness.end_order == std::vector<int>{2, 2, 2});
        CHECK(r.completeness.algebraic_type);
        CHECK(r.regularity.ok);
        CHECK(r.all_ok());
    }
    SUBCASE("four-ended case 1, j = 1") {
        const auto r = analyze(make_costa_type(1, 1, {1.0, 0.0}));
        CHECK(r.d == 5);
        CHECK(r.k == 4);
        CHECK(r.Dg == 2);
        CHECK(has_value(r.exceptional, SpherePoint::finite(0.0)));
        CHECK(has_value(r.exceptional, SpherePoint::infinity()));
        CHECK(r.nu_g == Rational(2));
        CHECK(r.rh.n_g == 10);
        CHECK(r.rh.n_0 == 6);
        CHECK(r.rh.n_b == 4);
        CHECK(r.l == 4);
        CHECK(r.bounds.invR == Rational(2, 5));
        CHECK(r.completeness.end_order == std::vector<int>{4, 2, 2, 2});
        CHECK(r.completeness.algebraic_type);
        CHECK(r.all_ok());
    }
    SUBCASE("case parity validation") {
        CHECK_THROWS_AS(make_costa_type(2, 3, {1.0, 0.0}), input_error);
        CHECK_THROWS_AS(make_costa_type(1, 0, {1.0, 0.0}), input_error);
        CHECK_THROWS_AS(make_costa_type(1, 1, {0.0, 0.0}), input_error);
        CHECK_NOTHROW(make_costa_type(2, 2, {1.0, 0.0}));
    }
    SUBCASE("case 2 degrees") {
        const auto r = analyze(make_costa_type(2, 2, {1.0, 0.0}));
        CHECK(r.d == 7); // 2j + 3
        CHECK(r.Dg == 2);
    }
}

TEST_CASE("unicity scans") {
    SUBCASE("g1 = z, g2 = -z on the 4-punctured sphere") {
        std::vector<SpherePoint> punct{
            SpherePoint::finite_exact(GaussRat(1)),
            SpherePoint::finite_exact(GaussRat(-1)),
            SpherePoint::finite_exact(GaussRat(2)),
            SpherePoint::infinity(),
        };
        ScaledRat h{RationalFunction(Polynomial::constant_exact(GaussRat(1)),
                                     Polynomial::constant_exact(GaussRat(1))),
                    {1.0, 0.0}};
        ScaledRat g1{RationalFunction::identity(), {1.0, 0.0}};
        ScaledRat g2{RationalFunction::identity(), {-1.0, 0.0}};
        const auto s1 = WeierstrassSurface::sphere(punct, g1, h);
        const auto s2 = WeierstrassSurface::sphere(punct, g2, h);
        const auto rep = unicity_scan(s1, s2);
        CHECK(rep.q == 4);
        CHECK(rep.bound == Rational(6));
        CHECK(rep.q_ok);
        CHECK(has_value(rep.values, SpherePoint::finite(0.0)));
        CHECK(has_value(rep.values, SpherePoint::infinity()));
        CHECK(has_value(rep.values, SpherePoint::finite(1.0)));
        CHECK(has_value(rep.values, SpherePoint::finite(-1.0)));
        CHECK(rep.delta_ok);
    }
    SUBCASE("coinciding maps are rejected") {
        const auto s1 = make_catenoid();
        CHECK_THROWS_AS(unicity_scan(s1, make_catenoid()), input_error);
    }
    SUBCASE("g1 = z, g2 = 1/z on the doubly punctured sphere") {
        std::vector<SpherePoint> punct{SpherePoint::finite_exact(GaussRat(0)),
                                       SpherePoint::infinity()};
        Polynomial z(std::vector<GaussRat>{GaussRat(0), GaussRat(1)});
        ScaledRat h{RationalFunction(Polynomial::constant_exact(GaussRat(1)),
                                     Polynomial::constant_exact(GaussRat(1))),
                    {1.0, 0.0}};
        ScaledRat g1{RationalFunction::identity(), {1.0, 0.0}};
        ScaledRat g2{RationalFunction(Polynomial::constant_exact(GaussRat(1)), z), {1.0, 0.0}};
        const auto s1 = WeierstrassSurface::sphere(punct, g1, h);
        const auto s2 = WeierstrassSurface::sphere(punct, g2, h);
        const auto rep = unicity_scan(s1, s2);
        CHECK(rep.q == 4);
        CHECK(rep.bound == Rational(4)); // 1/R = 0: equality case
        CHECK(rep.q_ok);
        CHECK(rep.sum_delta == 2);
        CHECK(rep.delta_ok);
    }
}

TEST_CASE("low-genus diagnostics") {
    SUBCASE("genus 0 algebraic data") {
        const auto S = make_miyaoka_sato(-1.0, 0.0);
        const auto rep = analyze(S);
        const auto d = low_genus_diagnostics(S, rep);
        CHECK(d.applicable);
        CHECK(d.triggered_g0);
        CHECK(d.pass);
    }
    SUBCASE("genus 1 with two omitted values: no clause fires") {
        const auto S = make_costa_type(1, 1, {1.0, 0.0});
        const auto rep = analyze(S);
        const auto d = low_genus_diagnostics(S, rep);
        CHECK(d.applicable);
        CHECK(!d.triggered_g1);
        CHECK(d.pass);
    }
    SUBCASE("non-algebraic data is out of scope") {
        const auto S = make_voss({{0.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}});
        const auto d = low_genus_diagnostics(S, analyze(S));
        CHECK(!d.applicable);
        CHECK(d.pass); // Dg = 4 with G = 0 must not trip the algebraic clause
    }
}

TEST_CASE("branching identity over random exact maps") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t) {
        const auto f = testutil::random_rational(rng, 6, true);
        std::vector<SpherePoint> punct{SpherePoint::finite_exact(GaussRat(7)),
                                       SpherePoint::infinity()};
        const auto rh = branching_totals(f, punct);
        CHECK(rh.identity_ok);
        CHECK(rh.n_g == 2 * (rat_degree(f) - 1));
        CHECK(rh.nb_ge_l);
    }
}

TEST_CASE("D_g <= nu_g and both within bounds on catalog entries") {
    for (const auto& e : catalog_entries()) {
        const auto r = analyze(e.make());
        CHECK(Rational(r.Dg) <= r.nu_g);
        CHECK(r.bounds.dg_ok);
        CHECK(r.bounds.dg_refined_ok);
        CHECK(r.bounds.nu_ok);
        CHECK(r.bounds.chain_ok);
        CHECK(r.bounds.invR_ok);
        CHECK(r.bounds.nu_strict_ok);
    }
}

TEST_CASE("float-path branching degree on well-separated random maps") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 15; ++t) {
        const auto f = testutil::random_rational(rng, 6, false);
        CHECK(ramification_divisor(f).degree() == 2 * rat_degree(f) - 2);
    }
}

TEST_CASE("tolerance-close but exactly distinct puncture is a hard error") {
    // g = z with punctures {1, 1 + 1e-11, inf}: the two finite punctures are
    // exactly distinct (so the surface is legal) but chordally closer than
    // eps, and the fiber of one lands within tolerance of the other. The
    // omitted-value scan must refuse rather than guess.
    const GaussRat nearby{Rational(1) + Rational(1, 100000000000LL), Rational(0)};
    ScaledRat g{RationalFunction::identity(), {1.0, 0.0}};
    ScaledRat h{RationalFunction::constant({1.0, 0.0}), {1.0, 0.0}};
    const auto S = WeierstrassSurface::sphere(
        {SpherePoint::finite_exact(GaussRat(1)), SpherePoint::finite_exact(nearby),
         SpherePoint::infinity()},
        g, h);
    CHECK_THROWS_AS(exceptional_values(S), input_error);
}

TEST_CASE("enforce throws on violated reports") {
    const auto r = analyze(make_catenoid());
    CHECK_NOTHROW(enforce(r));
    AnalysisReport bad = r;
    bad.rh.identity_ok = false;
    CHECK_THROWS_AS(enforce(bad), check_error);
}
