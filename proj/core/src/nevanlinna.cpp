#include "minsurf/nevanlinna.hpp"

#include <cmath>

#include "minsurf/errors.hpp"
#include "minsurf/quadrature.hpp"

namespace minsurf {

HyperbolicArea hyperbolic_area(int G, int k) {
    return {Rational(2 * (G - 1) + k, 2), (2 - 2 * G - k) < 0};
}

AreaReport area_ratio_check(const WeierstrassSurface& S) {
    const int G = S.genus(), k = S.puncture_count(), d = S.gauss_degree();
    AreaReport rep;
    const auto ha = hyperbolic_area(G, k);
    rep.A_hyp = ha.value;
    rep.hyperbolic = ha.hyperbolic;
    rep.A_FS = Rational(d);
    if (!rep.hyperbolic) {
        rep.ratio = Rational(0);
        rep.ok = false;
        return rep;
    }
    rep.ratio = rep.A_FS / rep.A_hyp;
    // ratio == R == 1/invR, exactly.
    rep.ok = rep.ratio * ratio_inv_R(G, k, d) == Rational(1);
    return rep;
}

// ---------------------------------------------------------------------------
// Modular lambda
// ---------------------------------------------------------------------------

namespace {

struct ThetaPair {
    Complex t2, t3;   // theta_2, theta_3 nulls
    Complex dt2, dt3; // d/dtau
};

ThetaPair theta_nulls(Complex tau) {
    const Complex iPi{0.0, M_PI};
    const Complex q = std::exp(iPi * tau);
    ThetaPair th{{0.0}, {1.0}, {0.0}, {0.0}};
    for (int n = 0; n < 12; ++n) {
        const double e2 = (n + 0.5) * (n + 0.5);
        const Complex q2 = std::exp(iPi * tau * e2);
        th.t2 += 2.0 * q2;
        th.dt2 += 2.0 * iPi * e2 * q2;
        if (n >= 1) {
            const double e3 = static_cast<double>(n) * n;
            const Complex q3 = std::exp(iPi * tau * e3);
            th.t3 += 2.0 * q3;
            th.dt3 += 2.0 * iPi * e3 * q3;
        }
        if (std::abs(q2) < 1e-18) break;
    }
    (void)q;
    return th;
}

// 2x2 integer Moebius matrices: the anharmonic action on lambda and the
// tau-side group element.
struct IMat {
    long a = 1, b = 0, c = 0, d = 1;
    friend IMat operator*(const IMat& x, const IMat& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
    }
};

struct Reduced {
    Complex tau;  // in the fundamental domain
    IMat lam_map; // lambda(tau0) = lam_map applied to lambda(tau)
    IMat gamma;   // tau = gamma(tau0)
};

Reduced reduce_to_fundamental(Complex tau) {
    if (!(tau.imag() > 0.0)) throw input_error("modular lambda needs Im tau > 0");
    Reduced r{tau, {}, {}};
    const IMat A{-1, 1, 0, 1};    // x -> 1 - x   (from tau -> -1/tau)
    const IMat B{1, 0, 1, -1};    // x -> x/(x-1) (from tau -> tau + 1), involution
    for (int iter = 0; iter < 512; ++iter) {
        const long n = std::lround(r.tau.real());
        if (n != 0) {
            r.tau -= static_cast<double>(n);
            r.gamma = IMat{1, -n, 0, 1} * r.gamma;
            if (n % 2 != 0) r.lam_map = r.lam_map * B;
        }
        if (std::norm(r.tau) >= 1.0 - 1e-15) return r;
        r.tau = -1.0 / r.tau;
        r.gamma = IMat{0, -1, 1, 0} * r.gamma;
        r.lam_map = r.lam_map * A;
    }
    throw numeric_error("modular reduction did not terminate");
}

Complex apply(const IMat& m, Complex x) {
    return (static_cast<double>(m.a) * x + static_cast<double>(m.b)) /
           (static_cast<double>(m.c) * x + static_cast<double>(m.d));
}

} // namespace

std::pair<Complex, Complex> modular_lambda_with_derivative(Complex tau) {
    const Reduced red = reduce_to_fundamental(tau);
    const ThetaPair th = theta_nulls(red.tau);
    const Complex ratio = th.t2 / th.t3;
    const Complex lam0 = ratio * ratio * ratio * ratio;
    const Complex dlam0 =
        4.0 * ratio * ratio * ratio * (th.dt2 * th.t3 - th.t2 * th.dt3) / (th.t3 * th.t3);
    // lambda(tau0) = M(lambda(gamma(tau0))): chain rule through both maps.
    const Complex cx = static_cast<double>(red.lam_map.c) * lam0 + static_cast<double>(red.lam_map.d);
    const double detM = static_cast<double>(red.lam_map.a * red.lam_map.d -
                                            red.lam_map.b * red.lam_map.c);
    const Complex dM = detM / (cx * cx);
    const Complex ct = static_cast<double>(red.gamma.c) * tau + static_cast<double>(red.gamma.d);
    const double detG =
        static_cast<double>(red.gamma.a * red.gamma.d - red.gamma.b * red.gamma.c);
    const Complex dgamma = detG / (ct * ct);
    return {apply(red.lam_map, lam0), dM * dlam0 * dgamma};
}

Complex modular_lambda(Complex tau) { return modular_lambda_with_derivative(tau).first; }

// ---------------------------------------------------------------------------
// Disk characteristic for the triply punctured identity map
// ---------------------------------------------------------------------------

namespace {

struct Moebius {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};
    Complex apply(Complex w) const { return (a * w + b) / (c * w + d); }
    Complex derivative(Complex w) const {
        const Complex den = c * w + d;
        return (a * d - b * c) / (den * den);
    }
    bool is_identity() const {
        return a == Complex{1.0} && b == Complex{0.0} && c == Complex{0.0} && d == Complex{1.0};
    }
};

// Moebius map with 0 -> p0, 1 -> p1, inf -> p2 (any one may be infinite).
Moebius target_moebius(const std::array<SpherePoint, 3>& p) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (same_point(p[i], p[j])) throw input_error("punctures must be distinct");
    if (p[2].is_infinity()) {
        const Complex a = p[0].value(), b = p[1].value();
        return Moebius{b - a, a, {0.0}, {1.0}};
    }
    if (p[0].is_infinity()) {
        const Complex b = p[1].value(), c = p[2].value();
        return Moebius{c, b - c, {1.0}, {0.0}}; // (c w + (b-c))/w
    }
    if (p[1].is_infinity()) {
        const Complex a = p[0].value(), c = p[2].value();
        return Moebius{c, -a, {1.0}, {-1.0}}; // (c w - a)/(w - 1)
    }
    const Complex a = p[0].value(), b = p[1].value(), c = p[2].value();
    return Moebius{c * (a - b), a * (b - c), a - b, b - c};
}

} // namespace

double hyperbolic_comparison_integral(double r) {
    if (!(r > 0.0 && r < 1.0)) throw input_error("radius must lie in (0,1)");
    // T(r) = int_0^r a(s) log(r/s) ds with a(s) the angular mass at radius s;
    // dyadically graded panels toward both endpoints.
    auto mass = [&](double s) { return 2.0 * s / ((1.0 - s * s) * (1.0 - s * s)); };
    const auto& [gx, gw] = gauss_legendre(12);
    std::vector<double> cuts{0.0};
    for (int k = 40; k >= 1; --k) cuts.push_back(r * std::pow(0.5, k));
    for (int k = 1; k <= 30; ++k) cuts.push_back(r * (1.0 - std::pow(0.5, k)));
    cuts.push_back(r);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (size_t p = 0; p + 1 < cuts.size(); ++p) {
        const double a = cuts[p], b = cuts[p + 1];
        if (b <= a) continue;
        for (size_t i = 0; i < gx.size(); ++i) {
            const double s = 0.5 * (a + b) + 0.5 * (b - a) * gx[i];
            total += gw[i] * 0.5 * (b - a) * mass(s) * std::log(r / s);
        }
    }
    return total;
}

CharacteristicReport characteristic_voss3(const std::array<SpherePoint, 3>& punctures,
                                          const std::vector<double>& rs) {
    const Moebius T = target_moebius(punctures);

    // Density of the pullback of the area-1 spherical form under the lifted
    // map D -> H -> C \ {0,1} -> P^1 \ {punctures}.
    auto dens = [&](Complex z) {
        const Complex one{1.0, 0.0};
        const Complex tau = Complex{0.0, 1.0} * (one + z) / (one - z);
        const Complex dtau = Complex{0.0, 2.0} / ((one - z) * (one - z));
        const auto [lam, dlam] = modular_lambda_with_derivative(tau);
        const Complex G = T.apply(lam);
        const Complex dG = T.derivative(lam) * dlam * dtau;
        const double denom = 1.0 + std::norm(G);
        return std::norm(dG) / (M_PI * denom * denom);
    };

    // Angular mass with doubling until stable.
    auto angular_mass = [&](double s) {
        double prev = 0.0;
        for (int nt = 128; nt <= 16384; nt *= 2) {
            double sum = 0.0;
            for (int j = 0; j < nt; ++j) sum += dens(std::polar(s, 2.0 * M_PI * (j + 0.5) / nt));
            const double cur = s * sum * 2.0 * M_PI / nt;
            if (nt > 128 && std::abs(cur - prev) <= 1e-7 * std::max(std::abs(cur), 1e-12))
                return cur;
            prev = cur;
        }
        throw numeric_error("angular quadrature did not stabilize");
    };

    CharacteristicReport rep;
    const auto& [gx, gw] = gauss_legendre(8);
    for (double r : rs) {
        CharacteristicSample sample{r, 0.0, std::log(1.0 / (1.0 - r)), 0.0, true};
        try {
            std::vector<double> cuts{0.0};
            for (int k = 30; k >= 1; --k) cuts.push_back(r * std::pow(0.5, k));
            for (int k = 1; k <= 12; ++k) cuts.push_back(r * (1.0 - std::pow(0.5, k)));
            cuts.push_back(r);
            std::sort(cuts.begin(), cuts.end());
            double total = 0.0;
            for (size_t p = 0; p + 1 < cuts.size(); ++p) {
                const double a = cuts[p], b = cuts[p + 1];
                if (b <= a) continue;
                for (size_t i = 0; i < gx.size(); ++i) {
                    const double s = 0.5 * (a + b) + 0.5 * (b - a) * gx[i];
                    total += gw[i] * 0.5 * (b - a) * angular_mass(s) * std::log(r / s);
                }
            }
            sample.T = total;
            sample.slack = std::max(0.0, sample.bound - total);
        } catch (const numeric_error&) {
            sample.reliable = false;
        }
        rep.samples.push_back(sample);
    }
    // Fitted growth coefficient: slope of T against (1/2) log 1/(1-r).
    double sxx = 0.0, sxy = 0.0;
    for (const auto& s : rep.samples) {
        if (!s.reliable) continue;
        const double x = 0.5 * std::log(1.0 / (1.0 - s.r));
        sxx += x * x;
        sxy += x * s.T;
    }
    rep.eta_fit = sxx > 0.0 ? sxy / sxx : 0.0;
    return rep;
}

} // namespace minsurf
