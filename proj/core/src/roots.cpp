#include "minsurf/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

// Backward-error scale of p at z: eps * sum |c_k| |z|^k.
double eval_scale(const std::vector<Complex>& c, double az) {
    double s = 0.0, zp = 1.0;
    for (const auto& ck : c) {
        s += std::abs(ck) * zp;
        zp *= az;
    }
    return s * 2.2e-16 * static_cast<double>(c.size());
}

std::vector<Complex> initial_guesses(const std::vector<Complex>& monic, std::mt19937_64& rng,
                                     bool perturb) {
    const int n = static_cast<int>(monic.size()) - 1;
    double maxc = 0.0;
    for (int i = 0; i < n; ++i) maxc = std::max(maxc, std::abs(monic[i]));
    const double cauchy = 1.0 + maxc;
    double r0 = std::pow(std::max(std::abs(monic[0]), 1e-300), 1.0 / n);
    r0 = std::clamp(r0, 1e-3, cauchy);
    std::uniform_real_distribution<double> jitter(-0.5, 0.5);
    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * M_PI * k / n + 0.4;
        double rad = r0;
        if (perturb) {
            ang += jitter(rng) * 0.8;
            rad *= std::exp(jitter(rng));
        }
        z[k] = std::polar(rad, ang);
    }
    return z;
}

// Simultaneous (Aberth-Ehrlich) iteration on a monic polynomial. Returns the
// approximations; convergence is judged by backward error.
std::vector<Complex> aberth(const std::vector<Complex>& monic, std::mt19937_64& rng) {
    const int n = static_cast<int>(monic.size()) - 1;
    const Polynomial p{std::vector<Complex>(monic)};
    std::vector<Complex> z;
    for (int attempt = 0; attempt < 5; ++attempt) {
        z = initial_guesses(monic, rng, attempt > 0);
        std::vector<bool> done(n, false);
        const int max_iter = 300 + 60 * n;
        for (int iter = 0; iter < max_iter; ++iter) {
            bool all_done = true;
            for (int i = 0; i < n; ++i) {
                if (done[i]) continue;
                auto [pv, dv] = p.eval_with_derivative(z[i]);
                if (std::abs(pv) <= eval_scale(monic, std::abs(z[i]))) {
                    done[i] = true;
                    continue;
                }
                all_done = false;
                if (dv == Complex{0.0}) {
                    z[i] += Complex{1e-8, 1e-8} * (1.0 + std::abs(z[i]));
                    continue;
                }
                const Complex w = pv / dv;
                Complex s{0.0};
                for (int j = 0; j < n; ++j)
                    if (j != i) s += 1.0 / (z[i] - z[j]);
                const Complex denom = 1.0 - w * s;
                Complex step = (std::abs(denom) < 1e-300) ? w : w / denom;
                // Damp absurd steps so escapees come back.
                const double cap = 2.0 * (1.0 + std::abs(z[i]));
                if (std::abs(step) > cap) step *= cap / std::abs(step);
                z[i] -= step;
                if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z[i]))) done[i] = true;
            }
            if (all_done) return z;
        }
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            // Multiple roots stall with a residual above the simple-root
            // test; accept a relaxed backward error before restarting.
            if (std::abs(p.eval(z[i])) > 1e6 * eval_scale(monic, std::abs(z[i]))) ok = false;
        }
        if (ok) return z;
    }
    std::ostringstream os;
    os << "root finder did not converge (degree " << n << "); residuals:";
    for (int i = 0; i < n; ++i) os << ' ' << std::abs(p.eval(z[i]));
    throw numeric_error(os.str());
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

// Newton refinement of a simple root of q, starting at z0.
Complex newton_polish(const Polynomial& q, Complex z0, int iters = 60) {
    Complex z = z0;
    for (int it = 0; it < iters; ++it) {
        auto [v, d] = q.eval_with_derivative(z);
        if (d == Complex{0.0}) break;
        const Complex step = v / d;
        z -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
    }
    return z;
}

// Cluster raw approximations into multiple roots: merge when either the
// fixed tolerance or the Newton-correction inclusion disks overlap, then
// refine an order-m cluster on the (m-1)-th derivative where the root is
// simple.
std::vector<RootCluster> cluster_roots(const Polynomial& p, const std::vector<Complex>& z) {
    const int n = static_cast<int>(z.size());
    std::vector<double> incl(n, 0.0);
    for (int i = 0; i < n; ++i) {
        auto [pv, dv] = p.eval_with_derivative(z[i]);
        incl[i] = (dv == Complex{0.0}) ? 1.0 : std::min(1.0, n * std::abs(pv / dv));
    }
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double sep = std::abs(z[i] - z[j]);
            const double tol = kClusterTol * std::max(1.0, std::abs(z[i]));
            if (sep <= tol || sep <= incl[i] + incl[j]) uf.merge(i, j);
        }
    std::vector<std::vector<int>> groups(n);
    for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);

    std::vector<RootCluster> out;
    for (const auto& g : groups) {
        if (g.empty()) continue;
        RootCluster rc;
        rc.multiplicity = static_cast<int>(g.size());
        Complex mean{0.0};
        for (int i : g) mean += z[i];
        mean /= static_cast<double>(g.size());
        rc.center = mean;
        if (rc.multiplicity > 1) {
            // The centroid of an order-m cluster is already good; the root of
            // p^(m-1) nearby is simple and polishes it to full precision.
            const Polynomial dm = p.derivative(rc.multiplicity - 1);
            const Complex refined = newton_polish(dm, mean);
            double spread = 0.0;
            for (int i : g) spread = std::max(spread, std::abs(z[i] - mean));
            if (std::abs(refined - mean) <= 4.0 * spread + kClusterTol) rc.center = refined;
        } else {
            rc.center = newton_polish(p, mean);
        }
        rc.residual = std::abs(p.eval(rc.center));
        out.push_back(rc);
    }

    // Derivative-based sanity check of cluster sizes.
    for (const auto& rc : out) {
        const double az = std::abs(rc.center);
        const Polynomial dm = p.derivative(rc.multiplicity - 1);
        const double scale = [&] {
            double s = 0.0, zp = 1.0;
            for (const auto& ck : dm.coeffs()) {
                s += std::abs(ck) * zp;
                zp *= az;
            }
            return s;
        }();
        if (rc.multiplicity > 1 && scale > 0.0) {
            const double v = std::abs(dm.eval(rc.center));
            if (v > 1e-2 * scale) {
                std::ostringstream os;
                os << "inconsistent root cluster: multiplicity " << rc.multiplicity << " at ("
                   << rc.center.real() << "," << rc.center.imag() << "), derivative residual " << v;
                throw numeric_error(os.str());
            }
        }
    }
    return out;
}

std::vector<RootCluster> roots_float(const Polynomial& p) {
    // Exact zero coefficients at the bottom give exact roots at the origin.
    int ord0 = 0;
    const auto& c = p.coeffs();
    while (ord0 < static_cast<int>(c.size()) && c[ord0] == Complex{0.0}) ++ord0;
    std::vector<Complex> rest(c.begin() + ord0, c.end());

    std::vector<RootCluster> out;
    if (ord0 > 0) {
        RootCluster rc;
        rc.center = Complex{0.0};
        rc.multiplicity = ord0;
        rc.exact = GaussRat(0);
        out.push_back(rc);
    }
    const int n = static_cast<int>(rest.size()) - 1;
    if (n <= 0) return out;
    if (n == 1) {
        RootCluster rc;
        rc.center = -rest[0] / rest[1];
        out.push_back(rc);
        return out;
    }
    // Monic normalization.
    const Complex inv = 1.0 / rest.back();
    for (auto& x : rest) x *= inv;
    static thread_local std::mt19937_64 rng(0x5eedULL);
    const auto raw = aberth(rest, rng);
    auto clustered = cluster_roots(Polynomial{std::vector<Complex>(rest)}, raw);
    for (auto& rc : clustered) out.push_back(std::move(rc));
    return out;
}

std::vector<RootCluster> roots_exact(const Polynomial& p) {
    const auto factors = exact_squarefree(p.exact());
    std::vector<RootCluster> out;
    for (size_t idx = 0; idx < factors.size(); ++idx) {
        const int mult = static_cast<int>(idx) + 1;
        const ExactPoly& f = factors[idx];
        if (f.size() <= 1) continue;
        if (f.size() == 2) {
            RootCluster rc;
            rc.exact = -f[0] / f[1];
            rc.center = rc.exact->to_complex();
            rc.multiplicity = mult;
            out.push_back(rc);
            continue;
        }
        // Square-free factor: all roots simple, no clustering wanted.
        Polynomial pf{ExactPoly(f)};
        std::vector<Complex> cf = pf.coeffs();
        const Complex inv = 1.0 / cf.back();
        for (auto& x : cf) x *= inv;
        static thread_local std::mt19937_64 rng(0xabcdULL);
        auto raw = aberth(cf, rng);
        for (auto& z : raw) {
            RootCluster rc;
            rc.center = newton_polish(pf, z);
            rc.multiplicity = mult;
            rc.residual = std::abs(pf.eval(rc.center));
            out.push_back(rc);
        }
    }
    return out;
}

} // namespace

std::vector<RootCluster> poly_roots(const Polynomial& p) {
    if (p.is_zero()) throw input_error("poly_roots: zero polynomial");
    if (p.degree() == 0) return {};
    auto out = p.has_exact() ? roots_exact(p) : roots_float(p);
    int total = 0;
    for (const auto& rc : out) total += rc.multiplicity;
    if (total != p.degree()) {
        std::ostringstream os;
        os << "root multiplicities sum to " << total << ", expected " << p.degree();
        throw numeric_error(os.str());
    }
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
        return a.center.imag() < b.center.imag();
    });
    return out;
}

} // namespace minsurf
