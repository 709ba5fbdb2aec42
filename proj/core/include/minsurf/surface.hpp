#pragma once

#include <variant>
#include <vector>

#include "minsurf/elliptic.hpp"
#include "minsurf/rational_function.hpp"

namespace minsurf {

/// A rational map together with a constant complex factor kept outside the
/// coefficients: full map = scale * base. Divisors, fibers and multiplicity
/// bookkeeping are scale-invariant and run on the (often exact) base; the
/// scale only enters values and geometry.
struct ScaledRat {
    RationalFunction base;
    Complex scale{1.0, 0.0};

    bool scale_is_one() const { return scale == Complex{1.0, 0.0}; }
    Complex eval(Complex z) const { return scale * base.eval(z); }
    SpherePoint value_at(const SpherePoint& p) const;
};

struct SphereData {
    std::vector<SpherePoint> punctures;
    ScaledRat g;
    ScaledRat h; // hdz = h(z) dz in the affine chart
};

struct TorusData {
    SquareTorus torus;
    std::vector<TorusPoint> punctures;
    EllipticFunction g;
    EllipticFunction h; // hdz = h dz; dz is global on the torus
};

/// Weierstrass data on a punctured compact surface of genus 0 or 1.
class WeierstrassSurface {
  public:
    static WeierstrassSurface sphere(std::vector<SpherePoint> punctures, ScaledRat g, ScaledRat h);
    static WeierstrassSurface torus(SquareTorus T, std::vector<TorusPoint> punctures,
                                    EllipticFunction g, EllipticFunction h);

    bool is_sphere() const { return std::holds_alternative<SphereData>(data_); }
    const SphereData& sphere_data() const { return std::get<SphereData>(data_); }
    const TorusData& torus_data() const { return std::get<TorusData>(data_); }

    int genus() const { return is_sphere() ? 0 : 1; }
    int puncture_count() const;
    int gauss_degree() const;

    /// Numeric chart evaluation of g, h and g' (for geometry).
    Complex g_at(Complex z) const;
    Complex h_at(Complex z) const;
    Complex g_prime_at(Complex z) const;

    /// Rotate hdz by e^{i theta}; the Gauss map is unchanged.
    WeierstrassSurface associated(double theta) const;

  private:
    explicit WeierstrassSurface(std::variant<SphereData, TorusData> d) : data_(std::move(d)) {}
    std::variant<SphereData, TorusData> data_;
};

} // namespace minsurf
