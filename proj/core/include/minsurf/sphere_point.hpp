#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "minsurf/rational.hpp"

namespace minsurf {

// Default tolerance for point identity on the Riemann sphere (chordal
// metric). One shared value keeps divisor membership, puncture matching and
// fiber classification mutually consistent.
inline constexpr double kPointTol = 1e-8;

// Tolerance used to merge numerically coincident roots into one multiple
// root, relative to max(1, |root|).
inline constexpr double kClusterTol = 1e-7;

/// A point of the Riemann sphere: a finite complex value or infinity. When
/// the coordinate is known exactly (Gaussian rational input) the exact value
/// rides along and equality tests become exact.
class SpherePoint {
  public:
    SpherePoint() : finite_(true), value_(0.0) {}

    static SpherePoint finite(Complex z) {
        SpherePoint p;
        p.finite_ = true;
        p.value_ = z;
        return p;
    }
    static SpherePoint finite_exact(GaussRat z) {
        SpherePoint p;
        p.finite_ = true;
        p.value_ = z.to_complex();
        p.exact_ = std::move(z);
        return p;
    }
    static SpherePoint infinity() {
        SpherePoint p;
        p.finite_ = false;
        return p;
    }

    bool is_infinity() const { return !finite_; }
    bool is_finite() const { return finite_; }
    Complex value() const { return value_; }
    const std::optional<GaussRat>& exact() const { return exact_; }

    std::string str() const;

    friend double chordal_distance(const SpherePoint& a, const SpherePoint& b);

  private:
    bool finite_;
    Complex value_{0.0};
    std::optional<GaussRat> exact_;
};

/// Chordal metric on the sphere, range [0,2]; the uniform yardstick for all
/// point-identity decisions.
inline double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
    if (a.is_infinity() && b.is_infinity()) return 0.0;
    if (a.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(b.value_));
    if (b.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(a.value_));
    return 2.0 * std::abs(a.value_ - b.value_) /
           std::sqrt((1.0 + std::norm(a.value_)) * (1.0 + std::norm(b.value_)));
}

/// Point identity: exact when both sides carry exact coordinates, chordal
/// within eps otherwise.
inline bool same_point(const SpherePoint& a, const SpherePoint& b, double eps = kPointTol) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    if (a.exact() && b.exact()) return *a.exact() == *b.exact();
    return chordal_distance(a, b) <= eps;
}

inline std::string SpherePoint::str() const {
    if (!finite_) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", value_.real(), value_.imag());
    return buf;
}

} // namespace minsurf
