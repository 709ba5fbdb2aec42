#include "minsurf/json_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "minsurf/errors.hpp"

namespace minsurf {

using nlohmann::json;

namespace {

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw input_error("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const std::exception& e) {
        throw input_error("malformed JSON in '" + path + "': " + e.what());
    }
}

struct Coeff {
    Complex value;
    std::optional<GaussRat> exact;
};

// One real component: a string "p/q" is exact, an integral number is exact,
// any other number is a plain double.
std::pair<double, std::optional<Rational>> parse_component(const json& j) {
    if (j.is_string()) {
        const Rational q = parse_rational(j.get<std::string>());
        return {to_double(q), q};
    }
    if (j.is_number_integer()) {
        const long long v = j.get<long long>();
        return {static_cast<double>(v), Rational(v)};
    }
    if (j.is_number()) {
        const double v = j.get<double>();
        if (v == std::round(v) && std::abs(v) < 9e15) return {v, Rational(static_cast<long long>(v))};
        return {v, std::nullopt};
    }
    throw input_error("expected a number or a \"p/q\" string");
}

Coeff parse_coeff(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw input_error("complex scalars are two-element arrays [re, im]");
    const auto re = parse_component(j[0]);
    const auto im = parse_component(j[1]);
    Coeff c;
    c.value = {re.first, im.first};
    if (re.second && im.second) c.exact = GaussRat{*re.second, *im.second};
    return c;
}

Polynomial parse_polynomial(const json& j) {
    if (!j.is_array()) throw input_error("polynomial coefficients must be an array");
    std::vector<Coeff> cs;
    for (const auto& cj : j) cs.push_back(parse_coeff(cj));
    bool exact = true;
    for (const auto& c : cs)
        if (!c.exact) exact = false;
    if (exact) {
        std::vector<GaussRat> e;
        for (const auto& c : cs) e.push_back(*c.exact);
        return Polynomial(std::move(e));
    }
    std::vector<Complex> v;
    for (const auto& c : cs) v.push_back(c.value);
    return Polynomial(std::move(v));
}

SpherePoint parse_sphere_point(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return SpherePoint::infinity();
        throw input_error("puncture strings must be \"inf\"");
    }
    const Coeff c = parse_coeff(j);
    return c.exact ? SpherePoint::finite_exact(*c.exact) : SpherePoint::finite(c.value);
}

ScaledRat parse_scaled_rational(const json& j) {
    ScaledRat f;
    f.base = RationalFunction(parse_polynomial(j.at("num")), parse_polynomial(j.at("den")));
    if (j.contains("scale")) f.scale = parse_coeff(j.at("scale")).value;
    return f;
}

EllipticFunction parse_elliptic(const json& j, const SquareTorus& T) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "elliptic-raw") {
        const Complex c = parse_coeff(j.at("c")).value;
        RationalFunction r(parse_polynomial(j.at("num")), parse_polynomial(j.at("den")));
        return EllipticFunction(c, std::move(r), j.at("eps").get<int>());
    }
    const int fam_case = j.value("case", 1);
    const int jj = j.at("j").get<int>();
    Complex sigma{1.0, 0.0};
    if (j.contains("sigma")) sigma = parse_coeff(j.at("sigma")).value;
    if (j.value("role", "g") == std::string("h")) {
        return EllipticFunction::wp_power(fam_case == 1 ? 1 : jj + 1).scaled(sigma);
    }
    return ell_reciprocal(
               ell_mul(EllipticFunction::wp_power(jj), EllipticFunction::wp_prime(), T), T)
        .scaled(sigma);
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json gaussrat_to_json(const GaussRat& g) {
    return json::array({to_string(g.re), to_string(g.im)});
}

json point_to_json(const SpherePoint& p) {
    if (p.is_infinity()) return "inf";
    if (p.exact()) return gaussrat_to_json(*p.exact());
    return complex_to_json(p.value());
}

json polynomial_to_json(const Polynomial& p) {
    json arr = json::array();
    if (p.has_exact()) {
        for (const auto& c : p.exact()) arr.push_back(gaussrat_to_json(c));
    } else {
        for (const auto& c : p.coeffs()) arr.push_back(complex_to_json(c));
    }
    if (arr.empty()) arr.push_back(complex_to_json({0.0, 0.0}));
    return arr;
}

json scaled_rational_to_json(const ScaledRat& f) {
    json j;
    j["kind"] = "rational";
    j["num"] = polynomial_to_json(f.base.num());
    j["den"] = polynomial_to_json(f.base.den());
    if (!f.scale_is_one()) j["scale"] = complex_to_json(f.scale);
    return j;
}

json elliptic_to_json(const EllipticFunction& f) {
    json j;
    j["kind"] = "elliptic-raw";
    j["c"] = complex_to_json(f.prefactor());
    j["num"] = polynomial_to_json(f.r().num());
    j["den"] = polynomial_to_json(f.r().den());
    j["eps"] = f.eps();
    return j;
}

std::string rat_str(const Rational& q) { return to_string(q); }

} // namespace

WeierstrassSurface surface_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("malformed surface JSON: ") + e.what());
    }
    try {
        const json& base = j.at("base");
        const std::string kind = base.at("kind").get<std::string>();
        if (kind == "sphere") {
            std::vector<SpherePoint> punctures;
            for (const auto& pj : base.at("punctures")) punctures.push_back(parse_sphere_point(pj));
            ScaledRat g = parse_scaled_rational(j.at("g"));
            ScaledRat h = parse_scaled_rational(j.at("h"));
            return WeierstrassSurface::sphere(std::move(punctures), std::move(g), std::move(h));
        }
        if (kind == "torus-square") {
            const SquareTorus T = SquareTorus::unit();
            std::vector<TorusPoint> punctures;
            const std::string tag = base.at("punctures").get<std::string>();
            if (tag == "standard4") {
                punctures = {TorusPoint::half_period(2), TorusPoint::half_period(1),
                             TorusPoint::half_period(3), TorusPoint::lattice()};
            } else if (tag == "standard3") {
                punctures = {TorusPoint::lattice(), TorusPoint::half_period(1),
                             TorusPoint::half_period(3)};
            } else {
                throw input_error("torus punctures must be \"standard4\" or \"standard3\"");
            }
            json gj = j.at("g");
            json hj = j.at("h");
            if (!hj.contains("role")) hj["role"] = "h";
            return WeierstrassSurface::torus(T, std::move(punctures), parse_elliptic(gj, T),
                                             parse_elliptic(hj, T));
        }
        throw input_error("base kind must be \"sphere\" or \"torus-square\"");
    } catch (const json::exception& e) {
        throw input_error(std::string("surface JSON schema error: ") + e.what());
    }
}

WeierstrassSurface surface_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw input_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return surface_from_json_text(ss.str());
}

std::string surface_to_json_text(const WeierstrassSurface& S) {
    json j;
    if (S.is_sphere()) {
        const auto& sd = S.sphere_data();
        j["base"]["kind"] = "sphere";
        j["base"]["punctures"] = json::array();
        for (const auto& p : sd.punctures) j["base"]["punctures"].push_back(point_to_json(p));
        j["g"] = scaled_rational_to_json(sd.g);
        j["h"] = scaled_rational_to_json(sd.h);
    } else {
        const auto& td = S.torus_data();
        j["base"]["kind"] = "torus-square";
        j["base"]["punctures"] = td.punctures.size() == 3 ? "standard3" : "standard4";
        j["g"] = elliptic_to_json(td.g);
        j["h"] = elliptic_to_json(td.h);
    }
    return j.dump(2);
}

std::string report_to_json_text(const AnalysisReport& r) {
    json j;
    j["d"] = r.d;
    j["G"] = r.G;
    j["k"] = r.k;
    j["mu"] = r.completeness.mu;
    j["end_orders"] = r.completeness.end_order;
    if (!r.completeness.ray_exponent.empty()) j["ray_exponents"] = r.completeness.ray_exponent;
    j["invR"] = rat_str(r.bounds.invR);
    if (r.bounds.invR != 0) j["R"] = rat_str(Rational(1) / r.bounds.invR);
    j["Dg"] = r.Dg;
    j["exceptional_values"] = json::array();
    for (const auto& v : r.exceptional) j["exceptional_values"].push_back(point_to_json(v));
    j["totally_ramified_values"] = json::array();
    for (const auto& t : r.totally_ramified) {
        json tj;
        tj["value"] = point_to_json(t.value);
        if (t.exceptional)
            tj["nu"] = "inf";
        else
            tj["nu"] = t.nu;
        j["totally_ramified_values"].push_back(tj);
    }
    j["nu_g"] = rat_str(r.nu_g);
    j["l"] = r.l;
    j["n_g"] = r.rh.n_g;
    j["n_0"] = r.rh.n_0;
    j["n_b"] = r.rh.n_b;
    j["bounds"]["Dg_max"] = rat_str(r.bounds.bound);
    j["bounds"]["Dg_max_refined"] = rat_str(r.bounds.refined_bound);
    j["bounds"]["nu_max"] = rat_str(r.bounds.bound);
    j["equalities"]["Dg_bound"] = r.bounds.eq_dg;
    j["equalities"]["Dg_bound_refined"] = r.bounds.eq_dg_refined;
    j["equalities"]["nu_bound"] = r.bounds.eq_nu;
    j["checks"]["regularity"] = r.regularity.ok;
    j["checks"]["completeness"] = r.completeness.complete;
    j["checks"]["completeness_divisor_tier"] = r.completeness.divisor_tier;
    j["checks"]["algebraic_type"] = r.completeness.algebraic_type;
    j["checks"]["differential_degree"] = r.completeness.euler_ok;
    j["checks"]["branching_identity"] = r.rh.identity_ok;
    j["checks"]["puncture_bound"] = r.rh.puncture_bound_ok;
    j["checks"]["nb_ge_l"] = r.rh.nb_ge_l;
    j["checks"]["Dg_bound"] = r.bounds.dg_ok;
    j["checks"]["Dg_bound_refined"] = r.bounds.dg_refined_ok;
    j["checks"]["nu_bound"] = r.bounds.nu_ok;
    j["checks"]["chain_bound"] = r.bounds.chain_ok;
    j["checks"]["ratio_bound"] = r.bounds.invR_ok;
    j["checks"]["nu_strict"] = r.bounds.nu_strict_ok;
    j["hyperbolic"] = r.bounds.hyperbolic;
    j["exact"] = r.exact;
    j["violations"] = r.violations();
    return j.dump(2);
}

std::string report_to_text_table(const WeierstrassSurface& S, const AnalysisReport& r) {
    std::ostringstream os;
    os << "d = " << r.d << "  G = " << r.G << "  k = " << r.k << "  1/R = " << rat_str(r.bounds.invR)
       << "\n";
    os << "Dg = " << r.Dg << "  nu_g = " << rat_str(r.nu_g) << "  l = " << r.l
       << "  n_g = " << r.rh.n_g << " (n_0 = " << r.rh.n_0 << ", n_b = " << r.rh.n_b << ")\n";
    os << "omitted values:";
    for (const auto& v : r.exceptional) os << " " << v.str();
    os << "\ntotally ramified:";
    for (const auto& t : r.totally_ramified) {
        os << " " << t.value.str() << " (nu=";
        if (t.exceptional)
            os << "inf)";
        else
            os << t.nu << ")";
    }
    os << "\nbounds: Dg <= " << rat_str(r.bounds.bound) << (r.bounds.eq_dg ? " (=)" : "")
       << ", Dg <= " << rat_str(r.bounds.refined_bound) << (r.bounds.eq_dg_refined ? " (=)" : "")
       << ", nu_g <= " << rat_str(r.bounds.bound) << (r.bounds.eq_nu ? " (=)" : "") << "\n";
    os << "mu =";
    for (int m : r.completeness.mu) os << " " << m;
    os << "   end orders =";
    for (int m : r.completeness.end_order) os << " " << m;
    os << (r.completeness.algebraic_type ? "   [algebraic type]" : "") << "\n";
    os << "order table (point: g, hdz, g hdz):\n";
    for (const auto& row : divisor_table(S).rows) {
        os << "  " << row.point << (row.puncture ? " [puncture]" : "") << ": " << row.g_ord << ", "
           << row.hdz_ord << ", " << (row.g_ord + row.hdz_ord) << "\n";
    }
    const auto v = r.violations();
    if (v.empty()) {
        os << "all checks pass" << (r.exact ? " (exact arithmetic)" : "") << "\n";
    } else {
        os << "VIOLATIONS:\n";
        for (const auto& s : v) os << "  - " << s << "\n";
    }
    return os.str();
}

CoverSpec cover_spec_from_json_file(const std::string& path) {
    const json j = read_file(path);
    try {
        CoverSpec spec;
        spec.m = j.at("m").get<int>();
        for (const auto& pj : j.at("fibers")) spec.fibers.push_back(pj.get<std::vector<int>>());
        return spec;
    } catch (const json::exception& e) {
        throw input_error(std::string("cover spec schema error: ") + e.what());
    }
}

std::string cover_result_to_json_text(const CoverResult& r) {
    json j;
    j["G_prime"] = r.G_prime;
    j["k_prime"] = r.k_prime;
    j["d_prime"] = r.d_prime;
    j["invR_prime"] = rat_str(r.invR_prime);
    j["ratio_invariant"] = r.ratio_invariant;
    return j.dump(2);
}

std::vector<Cycle> cycles_from_json_file(const std::string& path) {
    const json j = read_file(path);
    std::vector<Cycle> out;
    auto parse_cycle = [&](const json& cj) {
        Cycle c;
        const json& pts = cj.is_object() ? cj.at("points") : cj;
        for (const auto& pj : pts) c.points.push_back(parse_coeff(pj).value);
        return c;
    };
    try {
        if (j.is_object() && j.contains("cycles")) {
            for (const auto& cj : j.at("cycles")) out.push_back(parse_cycle(cj));
        } else {
            out.push_back(parse_cycle(j));
        }
    } catch (const json::exception& e) {
        throw input_error(std::string("cycle schema error: ") + e.what());
    }
    return out;
}

std::string periods_to_json_text(const std::vector<PeriodResult>& prs) {
    json j = json::array();
    for (const auto& pr : prs) {
        json pj;
        pj["re_period"] = {pr.re_part[0], pr.re_part[1], pr.re_part[2]};
        if (pr.residue_side) {
            pj["residue_route"] = {complex_to_json((*pr.residue_side)[0]),
                                   complex_to_json((*pr.residue_side)[1]),
                                   complex_to_json((*pr.residue_side)[2])};
            pj["agreement"] = pr.agreement;
        }
        j.push_back(pj);
    }
    return j.dump(2);
}

std::array<SpherePoint, 3> three_punctures_from_json_file(const std::string& path) {
    const json j = read_file(path);
    if (!j.is_array() || j.size() != 3)
        throw input_error("expected an array of exactly three punctures");
    return {parse_sphere_point(j[0]), parse_sphere_point(j[1]), parse_sphere_point(j[2])};
}

std::string unicity_to_json_text(const UnicityReport& r) {
    json j;
    j["values"] = json::array();
    for (const auto& v : r.values) j["values"].push_back(point_to_json(v));
    j["delta"] = r.delta;
    j["q"] = r.q;
    j["bound"] = rat_str(r.bound);
    j["q_ok"] = r.q_ok;
    j["sum_delta"] = r.sum_delta;
    j["delta_ok"] = r.delta_ok;
    return j.dump(2);
}

std::string total_curvature_to_json_text(const TotalCurvatureReport& r) {
    json j;
    j["finite"] = r.finite;
    if (r.finite)
        j["value"] = r.value;
    else
        j["value"] = "-inf";
    j["domain_integral"] = r.domain_integral;
    j["max_period"] = r.max_period;
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (!r.partial_sums.empty()) j["partial_sums"] = r.partial_sums;
    return j.dump(2);
}

} // namespace minsurf
