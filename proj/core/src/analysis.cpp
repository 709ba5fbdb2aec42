#include "minsurf/analysis.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <sstream>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

// ---------------------------------------------------------------------------
// Shared Gauss-map bookkeeping over either base surface
// ---------------------------------------------------------------------------

struct SphereOps {
    using Pt = SpherePoint;
    const RationalFunction& g; // unscaled base map
    const std::vector<SpherePoint>& punctures;
    double eps;

    int degree() const { return rat_degree(g); }
    std::vector<std::pair<Pt, int>> fiber_of(const SpherePoint& v) const {
        std::vector<std::pair<Pt, int>> out;
        for (const auto& fp : fiber(g, v)) out.push_back({fp.point, fp.multiplicity});
        return out;
    }
    SpherePoint value_of(const Pt& p) const { return g.value_at(p); }
    Divisor<Pt> ramification() const { return ramification_divisor(g); }
    bool is_puncture(const Pt& p) const {
        for (const auto& q : punctures) {
            if (p.exact() && q.exact()) {
                if (*p.exact() == *q.exact()) return true;
                // Tolerance-close but exactly distinct points make omitted
                // values undecidable; refuse rather than guess.
                if (chordal_distance(p, q) <= eps)
                    throw input_error("fiber point within tolerance of puncture " + q.str() +
                                      " but exactly distinct");
                continue;
            }
            if (same_point(p, q, eps)) return true;
        }
        return false;
    }
};

struct TorusOps {
    using Pt = TorusPoint;
    const EllipticFunction& g;
    const SquareTorus& T;
    const std::vector<TorusPoint>& punctures;
    double eps;

    int degree() const { return ell_degree(g, T); }
    std::vector<std::pair<Pt, int>> fiber_of(const SpherePoint& v) const {
        std::vector<std::pair<Pt, int>> out;
        for (const auto& fp : ell_fiber(g, v, T)) out.push_back({fp.point, fp.multiplicity});
        return out;
    }
    SpherePoint value_of(const Pt& p) const { return ell_value_at(g, p, T); }
    Divisor<Pt> ramification() const { return ell_ramification(g, T); }
    bool is_puncture(const Pt& p) const {
        for (const auto& q : punctures)
            if (same_point(p, q, eps)) return true;
        return false;
    }
};

bool contains_value(const std::vector<SpherePoint>& vs, const SpherePoint& v, double eps) {
    for (const auto& w : vs)
        if (same_point(w, v, eps)) return true;
    return false;
}

struct CoreResult {
    int d = 0;
    std::vector<SpherePoint> exceptional;
    std::vector<TotallyRamifiedValue> totally_ramified; // finite-nu entries only
    Rational nu_g{0};
    RamificationTotals rh;
};

template <class Ops>
CoreResult compute_core(const Ops& ops, int G, int k, double eps) {
    CoreResult res;
    res.d = ops.degree();

    // Omitted values: a value is omitted iff its whole fiber lies in the
    // punctures, so candidates are the values of g at punctures.
    std::vector<SpherePoint> candidates;
    for (const auto& p : ops.punctures) {
        const SpherePoint v = ops.value_of(p);
        if (!contains_value(candidates, v, eps)) candidates.push_back(v);
    }
    for (const auto& v : candidates) {
        bool omitted = true;
        for (const auto& [pt, m] : ops.fiber_of(v)) {
            (void)m;
            if (!ops.is_puncture(pt)) {
                omitted = false;
                break;
            }
        }
        if (omitted) res.exceptional.push_back(v);
    }
    const int r0 = static_cast<int>(res.exceptional.size());

    // Branching totals split by the value being omitted or not.
    const auto ram = ops.ramification();
    int n_g = 0, n_0 = 0, n_b = 0;
    std::vector<SpherePoint> m_ram_values; // values ramified somewhere in M
    for (const auto& e : ram.entries) {
        n_g += e.mult;
        const SpherePoint v = ops.value_of(e.point);
        if (contains_value(res.exceptional, v, eps)) {
            n_0 += e.mult;
        } else {
            n_b += e.mult;
            if (!ops.is_puncture(e.point) && !contains_value(m_ram_values, v, eps))
                m_ram_values.push_back(v);
        }
    }

    // Totally ramified values: every preimage in M branches; the weight uses
    // the minimal multiplicity over M only.
    Rational weight_sum{0};
    for (const auto& v : m_ram_values) {
        int min_mult = INT_MAX;
        bool any_in_M = false, all_branched = true;
        for (const auto& [pt, m] : ops.fiber_of(v)) {
            if (ops.is_puncture(pt)) continue;
            any_in_M = true;
            min_mult = std::min(min_mult, m);
            if (m < 2) all_branched = false;
        }
        if (any_in_M && all_branched) {
            res.totally_ramified.push_back({v, false, min_mult});
            weight_sum += Rational(1) - Rational(1, min_mult);
        }
    }
    res.nu_g = Rational(r0) + weight_sum;

    res.rh.d = res.d;
    res.rh.G = G;
    res.rh.k = k;
    res.rh.n_g = n_g;
    res.rh.n_0 = n_0;
    res.rh.n_b = n_b;
    res.rh.r0 = r0;
    res.rh.l = static_cast<int>(m_ram_values.size());
    res.rh.identity_ok = (n_g == 2 * (res.d + G - 1)) && (n_0 + n_b == n_g);
    res.rh.puncture_bound_ok = (k >= res.d * r0 - n_0);
    res.rh.nb_ge_l = (n_b >= res.rh.l);
    return res;
}

// ---------------------------------------------------------------------------
// Regularity and completeness from divisors
// ---------------------------------------------------------------------------

template <class Pt>
bool among(const std::vector<Pt>& pts, const Pt& p, double eps) {
    for (const auto& q : pts)
        if (same_point(q, p, eps)) return true;
    return false;
}

template <class Pt>
RegularityReport regularity_core(const Divisor<Pt>& gdiv, const Divisor<Pt>& hdiv,
                                 const std::vector<Pt>& punctures, double eps) {
    RegularityReport rep;
    for (const auto& e : gdiv.entries) {
        if (e.mult >= 0 || among(punctures, e.point, eps)) continue;
        const int need = -2 * e.mult;
        const int have = hdiv.order_at(e.point);
        if (have != need) {
            std::ostringstream os;
            os << "pole of g of order " << -e.mult << " at " << e.point.str()
               << " needs a zero of hdz of order " << need << ", found " << have;
            rep.witnesses.push_back(os.str());
            rep.ok = false;
        }
    }
    for (const auto& e : hdiv.entries) {
        if (e.mult <= 0 || among(punctures, e.point, eps)) continue;
        const int gp = gdiv.order_at(e.point);
        if (!(gp < 0 && e.mult == -2 * gp)) {
            std::ostringstream os;
            os << "zero of hdz of order " << e.mult << " at " << e.point.str()
               << " is not matched by a pole of g of order " << e.mult << "/2";
            rep.witnesses.push_back(os.str());
            rep.ok = false;
        }
    }
    return rep;
}

template <class Pt>
CompletenessReport completeness_core(const Divisor<Pt>& gdiv, const Divisor<Pt>& hdiv,
                                     const std::vector<Pt>& punctures, int G) {
    CompletenessReport rep;
    rep.euler_ok = (hdiv.degree() == 2 * G - 2);
    bool all_mu = true, all_end1 = true, all_end2 = true;
    for (const auto& p : punctures) {
        const int mu = -hdiv.order_at(p);
        const int gpole = std::max(0, -gdiv.order_at(p));
        const int end = mu + 2 * gpole; // metric growth order of the end
        rep.mu.push_back(mu);
        rep.end_order.push_back(end);
        all_mu &= (mu >= 1);
        all_end1 &= (end >= 1);
        all_end2 &= (end >= 2);
    }
    rep.divisor_tier = all_mu;
    rep.complete = all_end1;
    rep.algebraic_type = all_end2;
    return rep;
}

// Least-squares slope of log F against log t along a geometric ladder; the
// numeric witness for a divergent end.
double fit_exponent(const std::vector<double>& logt, const std::vector<double>& logF) {
    const size_t n = logt.size();
    if (n < 3) return std::numeric_limits<double>::quiet_NaN();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += logt[i];
        sy += logF[i];
        sxx += logt[i] * logt[i];
        sxy += logt[i] * logF[i];
    }
    const double denom = n * sxx - sx * sx;
    return -(n * sxy - sx * sy) / denom; // F ~ t^-alpha
}

double ray_exponent(const WeierstrassSurface& S, int puncture_index) {
    // ds/|dt| ~ t^-alpha approaching the end; alpha >= 1 means the ray has
    // infinite length.
    const Complex dir = std::polar(1.0, 0.7123);
    std::vector<double> logt, logF;
    auto push = [&](double t, double F) {
        if (std::isfinite(F) && F > 0.0) {
            logt.push_back(std::log(t));
            logF.push_back(std::log(F));
        }
    };
    if (S.is_sphere()) {
        const auto& sd = S.sphere_data();
        const SpherePoint& p = sd.punctures[puncture_index];
        for (int k = 6; k < 20; ++k) {
            const double t = std::pow(0.5, k);
            if (p.is_finite()) {
                const Complex z = p.value() + t * dir;
                push(t, std::abs(sd.h.eval(z)) * (1.0 + std::norm(sd.g.eval(z))) / 2.0);
            } else {
                const Complex z = dir / t; // w = t toward w = 0
                push(t, std::abs(sd.h.eval(z)) * (1.0 + std::norm(sd.g.eval(z))) / (2.0 * t * t));
            }
        }
    } else {
        const auto& td = S.torus_data();
        const TorusPoint& p = td.punctures[puncture_index];
        Complex z0;
        switch (p.kind()) {
            case TorusPoint::Kind::Lattice: z0 = {0.0, 0.0}; break;
            case TorusPoint::Kind::HalfPeriod: z0 = td.torus.half_period(p.index()); break;
            default: return std::numeric_limits<double>::quiet_NaN();
        }
        for (int k = 6; k < 20; ++k) {
            const double t = std::pow(0.5, k) * td.torus.omega1();
            const Complex z = z0 + t * dir;
            push(t, std::abs(td.h.eval(z, td.torus)) *
                        (1.0 + std::norm(td.g.eval(z, td.torus))) / 2.0);
        }
    }
    return fit_exponent(logt, logF);
}

BoundsReport make_bounds(int d, int G, int k, int Dg, int l, const Rational& nu_g, bool complete,
                         bool algebraic) {
    BoundsReport b;
    b.invR = Rational(2 * (G - 1) + k, 2 * d);
    b.bound = Rational(2) + 2 * b.invR;
    b.refined_bound = b.bound - Rational(l, d);
    b.hyperbolic = (2 - 2 * G - k) < 0;
    const Rational dg{Dg};
    b.dg_ok = dg <= b.bound;
    b.eq_dg = dg == b.bound;
    b.dg_refined_ok = dg <= b.refined_bound;
    b.eq_dg_refined = dg == b.refined_bound;
    b.nu_ok = nu_g <= b.bound;
    b.eq_nu = nu_g == b.bound;
    b.chain_ok = dg <= nu_g && nu_g <= Rational(4);
    b.invR_ok = !complete || b.invR <= Rational(1);
    b.nu_strict_ok = !algebraic || nu_g < Rational(4);
    return b;
}

Divisor<SpherePoint> sphere_hdz_divisor(const SphereData& sd) {
    Divisor<SpherePoint> div = zeros_poles(sd.h.base);
    div.add(SpherePoint::infinity(), -2); // dz has a double pole at infinity
    div.prune();
    return div;
}

SpherePoint scaled_value(const SpherePoint& v, Complex scale) {
    if (v.is_infinity() || scale == Complex{1.0, 0.0}) return v;
    return SpherePoint::finite(scale * v.value());
}

} // namespace

Rational ratio_inv_R(int G, int k, int d) {
    if (d < 1) throw input_error("ratio needs degree >= 1");
    return Rational(2 * (G - 1) + k, 2 * d);
}

AnalysisReport analyze(const WeierstrassSurface& S, const AnalyzeOptions& opt) {
    AnalysisReport r;
    r.G = S.genus();
    r.k = S.puncture_count();

    CoreResult core;
    if (S.is_sphere()) {
        const auto& sd = S.sphere_data();
        SphereOps ops{sd.g.base, sd.punctures, opt.eps};
        core = compute_core(ops, r.G, r.k, opt.eps);
        const auto gdiv = zeros_poles(sd.g.base);
        const auto hdiv = sphere_hdz_divisor(sd);
        r.regularity = regularity_core(gdiv, hdiv, sd.punctures, opt.eps);
        r.completeness = completeness_core(gdiv, hdiv, sd.punctures, r.G);
        bool punctures_exact = true;
        for (const auto& p : sd.punctures)
            if (p.is_finite() && !p.exact()) punctures_exact = false;
        r.exact = sd.g.base.has_exact() && punctures_exact;
        // Report values of the actual (scaled) map.
        for (auto& v : core.exceptional) v = scaled_value(v, sd.g.scale);
        for (auto& t : core.totally_ramified) t.value = scaled_value(t.value, sd.g.scale);
    } else {
        const auto& td = S.torus_data();
        TorusOps ops{td.g, td.torus, td.punctures, opt.eps};
        core = compute_core(ops, r.G, r.k, opt.eps);
        const auto gdiv = ell_divisor(td.g, td.torus);
        const auto hdiv = ell_divisor(td.h, td.torus);
        r.regularity = regularity_core(gdiv, hdiv, td.punctures, opt.eps);
        r.completeness = completeness_core(gdiv, hdiv, td.punctures, r.G);
        r.exact = false;
    }

    r.d = core.d;
    r.Dg = core.rh.r0;
    r.l = core.rh.l;
    r.nu_g = core.nu_g;
    r.exceptional = core.exceptional;
    for (const auto& v : core.exceptional) r.totally_ramified.push_back({v, true, 0});
    for (const auto& t : core.totally_ramified) r.totally_ramified.push_back(t);
    r.rh = core.rh;
    r.bounds = make_bounds(r.d, r.G, r.k, r.Dg, r.l, r.nu_g, r.completeness.complete,
                           r.completeness.algebraic_type);
    if (opt.ray_witness)
        for (int i = 0; i < r.k; ++i) r.completeness.ray_exponent.push_back(ray_exponent(S, i));
    return r;
}

std::vector<std::string> AnalysisReport::violations() const {
    std::vector<std::string> v;
    if (!regularity.ok)
        for (const auto& w : regularity.witnesses) v.push_back("regularity: " + w);
    if (!completeness.complete) v.push_back("completeness: an end has metric order < 1");
    if (!completeness.euler_ok) v.push_back("differential degree: deg div(hdz) != 2G-2");
    if (!rh.identity_ok) v.push_back("branching identity: n_g != 2(d+G-1) or n_0+n_b != n_g");
    if (!rh.puncture_bound_ok) v.push_back("puncture bound: k < d*r0 - n_0");
    if (!rh.nb_ge_l) v.push_back("branching bound: n_b < l");
    if (!bounds.dg_ok) v.push_back("exceptional-value bound: Dg > 2 + 2/R");
    if (!bounds.dg_refined_ok) v.push_back("refined exceptional-value bound: Dg > 2 + 2/R - l/d");
    if (!bounds.nu_ok) v.push_back("ramified-value bound: nu_g > 2 + 2/R");
    if (!bounds.chain_ok) v.push_back("chain bound: Dg <= nu_g <= 4 fails");
    if (!bounds.invR_ok) v.push_back("ratio bound: 1/R > 1 on complete data");
    if (!bounds.nu_strict_ok) v.push_back("strictness: nu_g = 4 on algebraic-type data");
    return v;
}

void enforce(const AnalysisReport& report) {
    const auto v = report.violations();
    if (v.empty()) return;
    std::string msg = "analysis checks failed:";
    for (const auto& s : v) msg += "\n  - " + s;
    throw check_error(msg);
}

std::vector<SpherePoint> exceptional_values(const WeierstrassSurface& S) {
    AnalyzeOptions opt;
    opt.ray_witness = false;
    return analyze(S, opt).exceptional;
}

RegularityReport regularity_check(const WeierstrassSurface& S) {
    AnalyzeOptions opt;
    opt.ray_witness = false;
    return analyze(S, opt).regularity;
}

CompletenessReport completeness_check(const WeierstrassSurface& S, bool ray_witness) {
    AnalyzeOptions opt;
    opt.ray_witness = ray_witness;
    return analyze(S, opt).completeness;
}

RamificationTotals branching_totals(const RationalFunction& g,
                                    const std::vector<SpherePoint>& punctures) {
    SphereOps ops{g, punctures, kPointTol};
    return compute_core(ops, 0, static_cast<int>(punctures.size()), kPointTol).rh;
}

RamificationTotals riemann_hurwitz_check(const WeierstrassSurface& S) {
    AnalyzeOptions opt;
    opt.ray_witness = false;
    return analyze(S, opt).rh;
}

LowGenusDiagnosis low_genus_diagnostics(const WeierstrassSurface& S, const AnalysisReport& rep) {
    LowGenusDiagnosis d;
    d.applicable = rep.completeness.algebraic_type;
    if (!d.applicable) {
        d.notes.push_back("surface is not of algebraic type; no clause applies");
        return d;
    }
    if (S.genus() == 0) {
        d.triggered_g0 = true;
        if (rep.Dg > 2) {
            d.pass = false;
            d.notes.push_back("genus 0 algebraic data must omit at most 2 values, found " +
                              std::to_string(rep.Dg));
        }
    }
    if (S.genus() == 1 && rep.Dg == 3) {
        d.triggered_g1 = true;
        if (rep.d != rep.k) {
            d.pass = false;
            d.notes.push_back("genus 1 with 3 omitted values forces d = k");
        }
        if (rep.l != 0) {
            d.pass = false;
            d.notes.push_back("genus 1 with 3 omitted values forbids branching in M");
        }
        for (int e : rep.completeness.end_order)
            if (e != 2) {
                d.pass = false;
                d.notes.push_back("genus 1 with 3 omitted values forces embedded ends");
                break;
            }
        if (d.pass)
            d.notes.push_back(
                "all branch points sit at the punctures; g restricts to an unbranched covering of "
                "the thrice-punctured sphere");
    }
    return d;
}

namespace {

template <class Pt>
DivisorTable table_core(const Divisor<Pt>& gdiv, const Divisor<Pt>& hdiv,
                        const std::vector<Pt>& punctures) {
    DivisorTable t;
    std::vector<Pt> support;
    auto push = [&](const Pt& p) {
        if (!among(support, p, kPointTol)) support.push_back(p);
    };
    for (const auto& e : gdiv.entries) push(e.point);
    for (const auto& e : hdiv.entries) push(e.point);
    for (const auto& p : punctures) push(p);
    for (const auto& p : support) {
        DivisorTable::Row row;
        row.point = p.str();
        row.puncture = among(punctures, p, kPointTol);
        row.g_ord = gdiv.order_at(p);
        row.hdz_ord = hdiv.order_at(p);
        t.rows.push_back(row);
    }
    return t;
}

} // namespace

DivisorTable divisor_table(const WeierstrassSurface& S) {
    if (S.is_sphere()) {
        const auto& sd = S.sphere_data();
        return table_core(zeros_poles(sd.g.base), sphere_hdz_divisor(sd), sd.punctures);
    }
    const auto& td = S.torus_data();
    return table_core(ell_divisor(td.g, td.torus), ell_divisor(td.h, td.torus), td.punctures);
}

// ---------------------------------------------------------------------------
// Unicity scan
// ---------------------------------------------------------------------------

namespace {

template <class Pt>
void require_same_punctures(const std::vector<Pt>& a, const std::vector<Pt>& b) {
    if (a.size() != b.size()) throw input_error("unicity scan needs a common basic domain");
    for (const auto& p : a)
        if (!among(b, p, kPointTol)) throw input_error("unicity scan needs a common basic domain");
}

} // namespace

namespace {

// Puncture-filtered fiber of the display value c, as a set of points.
template <class Ops>
std::vector<typename Ops::Pt> fiber_points_in_M(const Ops& ops, const SpherePoint& cb) {
    std::vector<typename Ops::Pt> pts;
    for (const auto& [pt, m] : ops.fiber_of(cb)) {
        (void)m;
        if (!ops.is_puncture(pt)) pts.push_back(pt);
    }
    return pts;
}

template <class Ops>
void unicity_verify(const Ops& ops1, const Ops& ops2,
                    const std::vector<SpherePoint>& candidates,
                    const std::vector<SpherePoint>& base1,
                    const std::vector<SpherePoint>& base2, UnicityReport& rep) {
    for (size_t i = 0; i < candidates.size(); ++i) {
        const auto f1 = fiber_points_in_M(ops1, base1[i]);
        const auto f2 = fiber_points_in_M(ops2, base2[i]);
        bool equal = f1.size() == f2.size();
        if (equal)
            for (const auto& p : f1)
                if (!among(f2, p, 1e-6)) {
                    equal = false;
                    break;
                }
        if (equal)
            for (const auto& p : f2)
                if (!among(f1, p, 1e-6)) {
                    equal = false;
                    break;
                }
        if (equal) {
            rep.values.push_back(candidates[i]);
            rep.delta.push_back(static_cast<int>(f1.size()));
        }
    }
}

} // namespace

UnicityReport unicity_scan(const WeierstrassSurface& s1, const WeierstrassSurface& s2) {
    if (s1.is_sphere() != s2.is_sphere())
        throw input_error("unicity scan needs a common basic domain");
    const int d = s1.gauss_degree();
    if (d != s2.gauss_degree())
        throw input_error("unicity scan needs Gauss maps of equal degree");

    UnicityReport rep;
    std::vector<SpherePoint> candidates;
    auto add_candidate = [&](const SpherePoint& v) {
        if (!contains_value(candidates, v, kPointTol)) candidates.push_back(v);
    };

    if (s1.is_sphere()) {
        const auto& a = s1.sphere_data();
        const auto& b = s2.sphere_data();
        require_same_punctures(a.punctures, b.punctures);
        const RationalFunction diff = a.g.base * a.g.scale - b.g.base * b.g.scale;
        const double input_scale =
            std::max(a.g.base.num().coeff_scale() * std::abs(a.g.scale),
                     b.g.base.num().coeff_scale() * std::abs(b.g.scale));
        if (diff.is_zero() || diff.num().coeff_scale() <= 1e-12 * input_scale)
            throw input_error("maps coincide");
        if (diff.num().degree() >= 1)
            for (const auto& rc : poly_roots(diff.num())) add_candidate(a.g.value_at(rc.point()));
        add_candidate(a.g.value_at(SpherePoint::infinity()));
        for (const auto& v : exceptional_values(s1))
            if (contains_value(exceptional_values(s2), v, kPointTol)) add_candidate(v);

        // Fibers of the true map over c are fibers of the base over c/scale.
        auto to_base = [](const ScaledRat& g, const SpherePoint& c) {
            if (c.is_infinity() || g.scale_is_one()) return c;
            return SpherePoint::finite(c.value() / g.scale);
        };
        std::vector<SpherePoint> base1, base2;
        for (const auto& c : candidates) {
            base1.push_back(to_base(a.g, c));
            base2.push_back(to_base(b.g, c));
        }
        SphereOps ops1{a.g.base, a.punctures, kPointTol};
        SphereOps ops2{b.g.base, b.punctures, kPointTol};
        unicity_verify(ops1, ops2, candidates, base1, base2, rep);
    } else {
        const auto& a = s1.torus_data();
        const auto& b = s2.torus_data();
        require_same_punctures(a.punctures, b.punctures);
        if (a.g.eps() != b.g.eps())
            throw input_error("unicity scan on the torus needs matching wp' powers");
        const EllipticFunction diff = ell_sub(a.g, b.g);
        if (diff.is_zero()) throw input_error("maps coincide");
        for (const auto& e : ell_divisor(diff, a.torus).entries)
            if (e.mult > 0) add_candidate(ell_value_at(a.g, e.point, a.torus));
        for (const auto& v : exceptional_values(s1))
            if (contains_value(exceptional_values(s2), v, kPointTol)) add_candidate(v);
        TorusOps ops1{a.g, a.torus, a.punctures, kPointTol};
        TorusOps ops2{b.g, b.torus, b.punctures, kPointTol};
        unicity_verify(ops1, ops2, candidates, candidates, candidates, rep);
    }

    rep.q = static_cast<int>(rep.values.size());
    rep.bound = Rational(4) + 2 * ratio_inv_R(s1.genus(), s1.puncture_count(), d);
    rep.q_ok = Rational(rep.q) <= rep.bound;
    rep.sum_delta = 0;
    for (int x : rep.delta) rep.sum_delta += x;
    rep.delta_ok = rep.sum_delta <= 2 * d;
    return rep;
}

} // namespace minsurf
