#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <optional>
#include <string>

#include "minsurf/errors.hpp"

namespace minsurf {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Parses "p", "-p/q" or a plain integer string into an exact rational.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

/// Gaussian rational: the exact scalar field for polynomial coefficients,
/// puncture coordinates and fiber bookkeeping.
struct GaussRat {
    Rational re{0};
    Rational im{0};

    GaussRat() = default;
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussRat(long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }
    Complex to_complex() const { return {to_double(re), to_double(im)}; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        if (b.is_zero()) throw input_error("GaussRat: division by zero");
        const Rational n = b.norm();
        const GaussRat c = a * b.conj();
        return {c.re / n, c.im / n};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
};

} // namespace minsurf
