#include "minsurf/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "minsurf/errors.hpp"

namespace minsurf {

Rational parse_rational(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) {
            return Rational(boost::multiprecision::cpp_int(s));
        }
        const boost::multiprecision::cpp_int num(s.substr(0, slash));
        const boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0) throw input_error("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw input_error("cannot parse rational: '" + s + "'");
    }
}

std::string to_string(const Rational& q) { return q.str(); }

// ---------------------------------------------------------------------------
// Exact polynomial arithmetic over Q(i)
// ---------------------------------------------------------------------------

ExactPoly exact_trim(ExactPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

ExactPoly exact_add(const ExactPoly& a, const ExactPoly& b) {
    ExactPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = r[i] + a[i];
        if (i < b.size()) r[i] = r[i] + b[i];
    }
    return exact_trim(std::move(r));
}

ExactPoly exact_sub(const ExactPoly& a, const ExactPoly& b) {
    ExactPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = r[i] + a[i];
        if (i < b.size()) r[i] = r[i] - b[i];
    }
    return exact_trim(std::move(r));
}

ExactPoly exact_mul(const ExactPoly& a, const ExactPoly& b) {
    if (a.empty() || b.empty()) return {};
    ExactPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return exact_trim(std::move(r));
}

ExactPoly exact_scale(const ExactPoly& a, const GaussRat& s) {
    if (s.is_zero()) return {};
    ExactPoly r = a;
    for (auto& c : r) c = c * s;
    return r;
}

ExactPoly exact_derivative(const ExactPoly& a) {
    if (a.size() <= 1) return {};
    ExactPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * GaussRat(static_cast<long>(i));
    return exact_trim(std::move(r));
}

ExactPoly exact_monic(const ExactPoly& a) {
    if (a.empty()) return {};
    return exact_scale(a, GaussRat(1) / a.back());
}

GaussRat exact_eval(const ExactPoly& a, const GaussRat& z) {
    GaussRat acc;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::pair<ExactPoly, ExactPoly> exact_divmod(const ExactPoly& a, const ExactPoly& b) {
    if (b.empty()) throw input_error("polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    ExactPoly rem = a;
    ExactPoly quot(a.size() - b.size() + 1);
    const GaussRat inv_lead = GaussRat(1) / b.back();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        const GaussRat q = rem[k + b.size() - 1] * inv_lead;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) rem[k + j] = rem[k + j] - q * b[j];
    }
    rem.resize(b.size() - 1);
    return {exact_trim(std::move(quot)), exact_trim(std::move(rem))};
}

ExactPoly exact_gcd(ExactPoly a, ExactPoly b) {
    a = exact_trim(std::move(a));
    b = exact_trim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = exact_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = exact_monic(std::move(r)); // monic remainders keep numerators small
    }
    return exact_monic(a);
}

int exact_order_at(const ExactPoly& a, const GaussRat& z) {
    if (a.empty()) throw input_error("order of the zero polynomial");
    ExactPoly cur = a;
    const ExactPoly lin{-z, GaussRat(1)};
    int ord = 0;
    while (!cur.empty()) {
        auto [q, r] = exact_divmod(cur, lin);
        if (!r.empty()) break;
        ++ord;
        cur = std::move(q);
    }
    return ord;
}

std::vector<ExactPoly> exact_squarefree(const ExactPoly& p) {
    std::vector<ExactPoly> factors;
    ExactPoly f = exact_monic(p);
    if (f.size() <= 1) return factors;
    const ExactPoly fp = exact_derivative(f);
    ExactPoly g = exact_gcd(f, fp);
    ExactPoly c = exact_divmod(f, g).first;
    ExactPoly d = exact_sub(exact_divmod(fp, g).first, exact_derivative(c));
    while (c.size() > 1) {
        ExactPoly a = exact_gcd(c, d);
        factors.push_back(a);
        c = exact_divmod(c, a).first;
        d = exact_sub(exact_divmod(d, a).first, exact_derivative(c));
    }
    return factors;
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

namespace {
std::vector<Complex> trim_complex(std::vector<Complex> c) {
    while (!c.empty() && c.back() == Complex{0.0}) c.pop_back();
    return c;
}
} // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : c_(trim_complex(std::move(coeffs))) {}

Polynomial::Polynomial(std::vector<GaussRat> coeffs) : exact_(exact_trim(std::move(coeffs))) {
    sync_from_exact();
}

void Polynomial::sync_from_exact() {
    c_.clear();
    c_.reserve(exact_->size());
    for (const auto& g : *exact_) c_.push_back(g.to_complex());
}

Complex Polynomial::eval(Complex z) const {
    Complex acc{0.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::pair<Complex, Complex> Polynomial::eval_with_derivative(Complex z) const {
    Complex p{0.0}, dp{0.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    return {p, dp};
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    if (exact_) return Polynomial(exact_derivative(*exact_));
    std::vector<Complex> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<double>(i);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::derivative(int k) const {
    Polynomial p = *this;
    for (int i = 0; i < k; ++i) p = p.derivative();
    return p;
}

Polynomial Polynomial::deflate(Complex r) const {
    if (c_.size() <= 1) return {};
    std::vector<Complex> q(c_.size() - 1);
    Complex acc = c_.back();
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) {
        q[i] = acc;
        acc = acc * r + c_[i];
    }
    return Polynomial(std::move(q));
}

Polynomial Polynomial::reversed() const {
    if (exact_) {
        ExactPoly r(exact_->rbegin(), exact_->rend());
        return Polynomial(exact_trim(std::move(r)));
    }
    std::vector<Complex> r(c_.rbegin(), c_.rend());
    return Polynomial(trim_complex(std::move(r)));
}

Polynomial Polynomial::monic() const {
    if (c_.empty()) return {};
    if (exact_) return Polynomial(exact_monic(*exact_));
    std::vector<Complex> r = c_;
    const Complex inv = 1.0 / c_.back();
    for (auto& x : r) x *= inv;
    return Polynomial(std::move(r));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.exact_ && b.exact_) return Polynomial(exact_add(*a.exact_, *b.exact_));
    std::vector<Complex> r(std::max(a.c_.size(), b.c_.size()), Complex{0.0});
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    if (a.exact_ && b.exact_) return Polynomial(exact_sub(*a.exact_, *b.exact_));
    std::vector<Complex> r(std::max(a.c_.size(), b.c_.size()), Complex{0.0});
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.exact_ && b.exact_) return Polynomial(exact_mul(*a.exact_, *b.exact_));
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Complex> r(a.c_.size() + b.c_.size() - 1, Complex{0.0});
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, Complex s) {
    if (s == Complex{0.0}) return {};
    std::vector<Complex> r = a.c_;
    for (auto& x : r) x *= s;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled_exact(const GaussRat& s) const {
    if (!exact_) return *this * s.to_complex();
    return Polynomial(exact_scale(*exact_, s));
}

double Polynomial::coeff_scale() const {
    double m = 0.0;
    for (const auto& x : c_) m = std::max(m, std::abs(x));
    return m;
}

} // namespace minsurf
