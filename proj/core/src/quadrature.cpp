#include "minsurf/quadrature.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

// 15-point Kronrod abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights on the odd-indexed nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct SegResult {
    Vec3c kronrod;
    double err;
    double l1;
};

double norm3(const Vec3c& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

SegResult gk15(const std::function<Vec3c(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Vec3c k{{{0.0}, {0.0}, {0.0}}}, g{{{0.0}, {0.0}, {0.0}}};
    double l1 = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double x = kXgk[i];
        Vec3c sum{{{0.0}, {0.0}, {0.0}}};
        if (i == 7) {
            sum = f(c);
        } else {
            const Vec3c lo = f(c - h * x), hi = f(c + h * x);
            for (int j = 0; j < 3; ++j) sum[j] = lo[j] + hi[j];
        }
        for (int j = 0; j < 3; ++j) k[j] += kWgk[i] * sum[j];
        l1 += kWgk[i] * norm3(sum);
        if (i % 2 == 1) {
            for (int j = 0; j < 3; ++j) g[j] += kWg[i / 2] * sum[j];
        } else if (i == 7) {
            for (int j = 0; j < 3; ++j) g[j] += kWg[3] * sum[j];
        }
    }
    Vec3c diff;
    for (int j = 0; j < 3; ++j) diff[j] = k[j] - g[j];
    SegResult r;
    for (int j = 0; j < 3; ++j) r.kronrod[j] = h * k[j];
    r.err = std::abs(h) * norm3(diff);
    r.l1 = std::abs(h) * l1;
    return r;
}

} // namespace

Vec3c integrate_gk(const std::function<Vec3c(double)>& f, double a, double b, double rel_tol,
                   int max_depth) {
    struct Seg {
        double a, b;
        int depth;
    };
    const SegResult whole = gk15(f, a, b);
    const double floor = std::max(whole.l1, 1e-300);
    Vec3c total{{{0.0}, {0.0}, {0.0}}};
    std::vector<Seg> stack{{a, b, 0}};
    while (!stack.empty()) {
        const Seg s = stack.back();
        stack.pop_back();
        const SegResult r = gk15(f, s.a, s.b);
        const double budget = rel_tol * floor * std::abs(s.b - s.a) / std::abs(b - a);
        if (r.err <= budget || r.err <= 1e-16 * r.l1) {
            for (int j = 0; j < 3; ++j) total[j] += r.kronrod[j];
            continue;
        }
        if (s.depth >= max_depth) {
            std::ostringstream os;
            os << "quadrature did not converge on [" << s.a << ", " << s.b << "] (error " << r.err
               << ")";
            throw numeric_error(os.str());
        }
        const double m = 0.5 * (s.a + s.b);
        stack.push_back({s.a, m, s.depth + 1});
        stack.push_back({m, s.b, s.depth + 1});
    }
    return total;
}

Complex integrate_gk_scalar(const std::function<Complex(double)>& f, double a, double b,
                            double rel_tol, int max_depth) {
    const Vec3c v = integrate_gk([&](double t) { return Vec3c{f(t), Complex{0.0}, Complex{0.0}}; },
                                 a, b, rel_tol, max_depth);
    return v[0];
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<double> x(n), w(n);
    for (int i = 0; i < n; ++i) {
        // Newton from the Chebyshev-like initial guess.
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-16) break;
        }
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n * (t * p1 - p0) / (t * t - 1.0);
        x[i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

} // namespace minsurf
