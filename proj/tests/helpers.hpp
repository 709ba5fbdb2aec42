#pragma once

#include <random>

#include "minsurf/polynomial.hpp"
#include "minsurf/rational_function.hpp"

namespace testutil {

using minsurf::Complex;
using minsurf::GaussRat;
using minsurf::Polynomial;
using minsurf::RationalFunction;

inline Polynomial random_poly_exact(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<long> coeff(-3, 3);
    while (true) {
        std::vector<GaussRat> c(deg + 1);
        for (auto& x : c) x = GaussRat{minsurf::Rational(coeff(rng)), minsurf::Rational(coeff(rng))};
        if (!c.back().is_zero()) return Polynomial(std::move(c));
    }
}

inline Polynomial random_poly_float(std::mt19937_64& rng, int deg) {
    std::normal_distribution<double> n(0.0, 1.0);
    while (true) {
        std::vector<Complex> c(deg + 1);
        for (auto& x : c) x = Complex{n(rng), n(rng)};
        if (std::abs(c.back()) > 0.1) return Polynomial(std::move(c));
    }
}

inline RationalFunction random_rational(std::mt19937_64& rng, int max_deg, bool exact) {
    std::uniform_int_distribution<int> dn(0, max_deg), dd(0, max_deg);
    while (true) {
        const int a = dn(rng), b = dd(rng);
        if (a == 0 && b == 0) continue;
        RationalFunction f = exact ? RationalFunction(random_poly_exact(rng, a), random_poly_exact(rng, b))
                                   : RationalFunction(random_poly_float(rng, a), random_poly_float(rng, b));
        if (!f.is_constant()) return f;
    }
}

// Roughly uniform random point of the sphere via stereographic projection.
inline Complex random_sphere_value(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    const double x = n(rng), y = n(rng), z = n(rng);
    const double r = std::sqrt(x * x + y * y + z * z);
    const double denom = 1.0 - z / r;
    if (std::abs(denom) < 1e-6) return {1e6, 0.0};
    return {x / r / denom, y / r / denom};
}

} // namespace testutil
