#pragma once

#include <optional>
#include <vector>

#include "minsurf/rational.hpp"
#include "minsurf/sphere_point.hpp"

namespace minsurf {

/// Dense polynomial over the Gaussian rationals, ascending degree, empty =
/// zero. The exact backbone of divisor and fiber computations.
using ExactPoly = std::vector<GaussRat>;

ExactPoly exact_trim(ExactPoly p);
ExactPoly exact_add(const ExactPoly& a, const ExactPoly& b);
ExactPoly exact_sub(const ExactPoly& a, const ExactPoly& b);
ExactPoly exact_mul(const ExactPoly& a, const ExactPoly& b);
ExactPoly exact_scale(const ExactPoly& a, const GaussRat& s);
ExactPoly exact_derivative(const ExactPoly& a);
ExactPoly exact_monic(const ExactPoly& a);
GaussRat exact_eval(const ExactPoly& a, const GaussRat& z);
/// Quotient and remainder of a/b over the field Q(i).
std::pair<ExactPoly, ExactPoly> exact_divmod(const ExactPoly& a, const ExactPoly& b);
/// Monic gcd via the Euclidean algorithm.
ExactPoly exact_gcd(ExactPoly a, ExactPoly b);
/// Order of vanishing at an exact point (repeated exact division).
int exact_order_at(const ExactPoly& a, const GaussRat& z);
/// Yun square-free decomposition: returns factors f_i, pairwise coprime and
/// square-free, with p = lead * prod f_i^i.
std::vector<ExactPoly> exact_squarefree(const ExactPoly& p);

/// Complex-coefficient polynomial, ascending degree, empty = zero. When
/// every input coefficient is Gaussian rational the exact mirror is carried
/// along and downstream divisor computations make exact decisions.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> coeffs);
    explicit Polynomial(std::vector<GaussRat> coeffs);
    static Polynomial constant(Complex c) { return Polynomial(std::vector<Complex>{c}); }
    static Polynomial constant_exact(GaussRat c) { return Polynomial(std::vector<GaussRat>{std::move(c)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Complex>& coeffs() const { return c_; }
    Complex coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Complex{0.0}; }
    Complex lead() const { return c_.empty() ? Complex{0.0} : c_.back(); }

    bool has_exact() const { return exact_.has_value(); }
    const ExactPoly& exact() const { return *exact_; }
    void drop_exact() { exact_.reset(); }

    Complex eval(Complex z) const;
    /// Value and derivative in one Horner pass.
    std::pair<Complex, Complex> eval_with_derivative(Complex z) const;

    Polynomial derivative() const;
    /// k-th derivative.
    Polynomial derivative(int k) const;
    /// Deflation by a simple root: returns q with p = (z - r) q + p(r),
    /// remainder dropped.
    Polynomial deflate(Complex r) const;
    /// Coefficient-reversed polynomial z^deg * p(1/z); used for the chart at
    /// infinity.
    Polynomial reversed() const;
    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, Complex s);
    friend Polynomial operator*(Complex s, const Polynomial& a) { return a * s; }

    Polynomial scaled_exact(const GaussRat& s) const;

    /// Largest coefficient magnitude (0 for the zero polynomial).
    double coeff_scale() const;

  private:
    void sync_from_exact();
    std::vector<Complex> c_;
    std::optional<ExactPoly> exact_;
};

/// A root cluster: location, multiplicity, attained residual, and the exact
/// coordinate when the root came out of an exact linear factor.
struct RootCluster {
    Complex center;
    int multiplicity = 1;
    double residual = 0.0;
    std::optional<GaussRat> exact;

    SpherePoint point() const {
        return exact ? SpherePoint::finite_exact(*exact) : SpherePoint::finite(center);
    }
};

/// All roots of a nonzero polynomial counted with multiplicity. Exact
/// square-free splitting is used when the coefficients are exact; otherwise
/// simultaneous iteration plus inclusion-disk clustering.
std::vector<RootCluster> poly_roots(const Polynomial& p);

} // namespace minsurf
