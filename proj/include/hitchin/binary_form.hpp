#pragma once

#include <gmpxx.h>

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hitchin/errors.hpp"
#include "hitchin/quadext.hpp"
#include "hitchin/rational.hpp"

namespace hitchin {

template <typename K>
concept ScalarField = requires(K a, K b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    K(0);
    K(1);
};

namespace detail {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over a field, coefficients ascending, no
// trailing zeros (empty vector = zero polynomial).  These back the
// homogeneous-form algorithms after dehomogenization at x = 1.
// ---------------------------------------------------------------------------

template <ScalarField K>
void upoly_trim(std::vector<K>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <ScalarField K>
int upoly_degree(const std::vector<K>& p) {
    return static_cast<int>(p.size()) - 1;  // zero polynomial: -1
}

template <ScalarField K>
std::vector<K> upoly_add(const std::vector<K>& a, const std::vector<K>& b) {
    std::vector<K> r(std::max(a.size(), b.size()), K(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    upoly_trim(r);
    return r;
}

template <ScalarField K>
std::vector<K> upoly_scale(std::vector<K> a, const K& s) {
    if (s.is_zero()) return {};
    for (K& c : a) c = c * s;
    return a;
}

template <ScalarField K>
std::vector<K> upoly_mul(const std::vector<K>& a, const std::vector<K>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<K> r(a.size() + b.size() - 1, K(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    upoly_trim(r);
    return r;
}

template <ScalarField K>
std::pair<std::vector<K>, std::vector<K>> upoly_divmod(std::vector<K> a, const std::vector<K>& b) {
    if (b.empty()) throw std::domain_error("univariate division by zero");
    const int db = upoly_degree(b);
    std::vector<K> q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, K(0));
    while (upoly_degree(a) >= db) {
        const int shift = upoly_degree(a) - db;
        const K factor = a.back() / b.back();
        q[shift] = factor;
        for (int i = 0; i <= db; ++i) a[shift + i] = a[shift + i] - factor * b[i];
        upoly_trim(a);
    }
    upoly_trim(q);
    return {std::move(q), std::move(a)};
}

template <ScalarField K>
std::vector<K> upoly_derivative(const std::vector<K>& p) {
    if (p.size() < 2) return {};
    std::vector<K> r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * K(static_cast<long>(i));
    upoly_trim(r);
    return r;
}

template <ScalarField K>
std::vector<K> upoly_monic(std::vector<K> p) {
    if (p.empty()) return p;
    const K lead = p.back();
    for (K& c : p) c = c / lead;
    return p;
}

// --- integer polynomial helpers for the subresultant PRS -------------------

void ipoly_trim(std::vector<mpz_class>& p);
// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a  mod  b.
std::vector<mpz_class> ipoly_prem(std::vector<mpz_class> a, const std::vector<mpz_class>& b);
std::vector<mpz_class> ipoly_primitive(std::vector<mpz_class> p);
// Primitive gcd of two nonzero primitive integer polynomials via the
// subresultant polynomial remainder sequence (Collins/Brown).
std::vector<mpz_class> ipoly_subresultant_gcd(std::vector<mpz_class> a, std::vector<mpz_class> b);
// Clears denominators and content.
std::vector<mpz_class> rational_to_primitive(const std::vector<Rational>& p);

// Monic gcd over the coefficient field.  Rationals route through the
// subresultant PRS on integer-cleared inputs; other fields use the Euclidean
// algorithm with monic normalization at each step.
template <ScalarField K>
std::vector<K> upoly_gcd(std::vector<K> a, std::vector<K> b) {
    if (a.empty()) return upoly_monic(std::move(b));
    if (b.empty()) return upoly_monic(std::move(a));
    if constexpr (std::same_as<K, Rational>) {
        std::vector<mpz_class> ia = rational_to_primitive(a);
        std::vector<mpz_class> ib = rational_to_primitive(b);
        std::vector<mpz_class> g = ipoly_subresultant_gcd(std::move(ia), std::move(ib));
        std::vector<Rational> r(g.size());
        for (size_t i = 0; i < g.size(); ++i) r[i] = Rational(g[i], 1);
        return upoly_monic(std::move(r));
    } else {
        while (!b.empty()) {
            auto [q, rem] = upoly_divmod(std::move(a), b);
            (void)q;
            a = std::move(b);
            b = upoly_monic(std::move(rem));
        }
        return upoly_monic(std::move(a));
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Homogeneous binary form of fixed degree d: coefficient k multiplies
// x^(d-k) y^k.  The zero form is a distinguished degree-less value; an
// all-zero coefficient list collapses to it on construction.
// ---------------------------------------------------------------------------
template <ScalarField K>
class BinaryForm {
public:
    BinaryForm() = default;  // zero form

    BinaryForm(int degree, std::vector<K> coeffs) {
        if (degree < 0) throw ValidationError("binary form with negative degree");
        if (static_cast<int>(coeffs.size()) != degree + 1)
            throw ValidationError("binary form of degree " + std::to_string(degree) +
                                  " needs " + std::to_string(degree + 1) + " coefficients");
        bool all_zero = true;
        for (const K& c : coeffs)
            if (!c.is_zero()) { all_zero = false; break; }
        if (!all_zero) c_ = std::move(coeffs);
    }

    static BinaryForm zero() { return BinaryForm(); }

    static BinaryForm constant(const K& v) {
        return v.is_zero() ? BinaryForm() : BinaryForm(0, {v});
    }

    static BinaryForm monomial(const K& v, int xpow, int ypow) {
        if (v.is_zero()) return BinaryForm();
        std::vector<K> c(xpow + ypow + 1, K(0));
        c[ypow] = v;
        return BinaryForm(xpow + ypow, std::move(c));
    }

    // Homogenizes a univariate polynomial in y (ascending coefficients) to
    // the requested total degree; the padding supplies the x power.
    static BinaryForm from_univariate(const std::vector<K>& p, int degree) {
        if (p.empty()) return BinaryForm();
        if (detail::upoly_degree(p) > degree)
            throw std::logic_error("homogenization degree below univariate degree");
        std::vector<K> c(degree + 1, K(0));
        for (size_t i = 0; i < p.size(); ++i) c[i] = p[i];
        return BinaryForm(degree, std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    int degree() const {
        if (is_zero()) throw std::logic_error("degree of the zero form");
        return static_cast<int>(c_.size()) - 1;
    }

    const std::vector<K>& coeffs() const { return c_; }
    const K& coeff(int k) const { return c_.at(k); }

    bool is_constant() const { return c_.size() == 1; }
    K constant_value() const {
        if (is_zero()) return K(0);
        if (!is_constant()) throw std::logic_error("constant_value of a non-constant form");
        return c_[0];
    }

    // Index of the first nonzero coefficient (lowest y power).
    int leading_index() const {
        for (size_t k = 0; k < c_.size(); ++k)
            if (!c_[k].is_zero()) return static_cast<int>(k);
        throw std::logic_error("leading coefficient of the zero form");
    }
    const K& leading_coeff() const { return c_[leading_index()]; }

    // Dehomogenization at x = 1: the coefficient list read as a univariate
    // polynomial in y (trailing zeros trimmed).
    std::vector<K> dehomogenize() const {
        std::vector<K> p = c_;
        detail::upoly_trim(p);
        return p;
    }

    BinaryForm operator-() const {
        std::vector<K> c = c_;
        for (K& v : c) v = -v;
        BinaryForm r;
        r.c_ = std::move(c);
        return r;
    }

    BinaryForm operator+(const BinaryForm& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        if (degree() != o.degree())
            throw std::invalid_argument("adding forms of degrees " + std::to_string(degree()) +
                                        " and " + std::to_string(o.degree()));
        std::vector<K> c(c_.size());
        for (size_t k = 0; k < c_.size(); ++k) c[k] = c_[k] + o.c_[k];
        return BinaryForm(degree(), std::move(c));
    }

    BinaryForm operator-(const BinaryForm& o) const { return *this + (-o); }

    BinaryForm operator*(const BinaryForm& o) const {
        if (is_zero() || o.is_zero()) return BinaryForm();
        std::vector<K> c(c_.size() + o.c_.size() - 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
        return BinaryForm(degree() + o.degree(), std::move(c));
    }

    BinaryForm operator*(const K& s) const {
        if (is_zero() || s.is_zero()) return BinaryForm();
        std::vector<K> c = c_;
        for (K& v : c) v = v * s;
        BinaryForm r;
        r.c_ = std::move(c);
        return r;
    }

    BinaryForm operator/(const K& s) const {
        if (s.is_zero()) throw std::domain_error("form division by zero scalar");
        if (is_zero()) return BinaryForm();
        std::vector<K> c = c_;
        for (K& v : c) v = v / s;
        BinaryForm r;
        r.c_ = std::move(c);
        return r;
    }

    friend bool operator==(const BinaryForm& f, const BinaryForm& g) { return f.c_ == g.c_; }

    K evaluate(const K& x, const K& y) const {
        if (is_zero()) return K(0);
        K acc(0);
        const int d = degree();
        for (int k = 0; k <= d; ++k) {
            K term = c_[k];
            for (int i = 0; i < d - k; ++i) term = term * x;
            for (int i = 0; i < k; ++i) term = term * y;
            acc = acc + term;
        }
        return acc;
    }

    // Scales the first nonzero coefficient to 1.
    BinaryForm monic() const {
        if (is_zero()) throw std::domain_error("monic of the zero form");
        return *this / leading_coeff();
    }

    std::string str() const;

private:
    std::vector<K> c_;
};

template <ScalarField K>
BinaryForm<K> pow(const BinaryForm<K>& f, int e) {
    if (e < 0) throw std::domain_error("negative form power");
    BinaryForm<K> acc = BinaryForm<K>::constant(K(1));
    for (int i = 0; i < e; ++i) acc = acc * f;
    return acc;
}

// Exact division f / g; nullopt when g does not divide f (or g is zero).
template <ScalarField K>
std::optional<BinaryForm<K>> divide_exact(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return BinaryForm<K>::zero();
    if (f.degree() < g.degree()) return std::nullopt;
    const std::vector<K> pf = f.dehomogenize();
    const std::vector<K> pg = g.dehomogenize();
    // x-power of f must dominate the x-power of g.
    const int xf = f.degree() - detail::upoly_degree(pf);
    const int xg = g.degree() - detail::upoly_degree(pg);
    if (xf < xg) return std::nullopt;
    auto [q, r] = detail::upoly_divmod(pf, pg);
    if (!r.empty()) return std::nullopt;
    return BinaryForm<K>::from_univariate(q, f.degree() - g.degree());
}

// Monic homogeneous gcd.  Dehomogenize at x = 1, take the univariate gcd,
// and restore the common pure-x power lost under dehomogenization.
template <ScalarField K>
BinaryForm<K> form_gcd(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd of zero forms");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    const std::vector<K> pf = f.dehomogenize();
    const std::vector<K> pg = g.dehomogenize();
    const int xf = f.degree() - detail::upoly_degree(pf);
    const int xg = g.degree() - detail::upoly_degree(pg);
    const std::vector<K> gc = detail::upoly_gcd(pf, pg);
    const int xpow = std::min(xf, xg);
    return BinaryForm<K>::from_univariate(gc, detail::upoly_degree(gc) + xpow).monic();
}

template <ScalarField K>
struct SquarefreeDecomposition {
    // Pairwise coprime monic squarefree factors with multiplicities;
    // f = constant * prod factor^multiplicity.
    std::vector<std::pair<BinaryForm<K>, int>> factors;
    K constant;
};

// Squarefree decomposition: the pure x and y powers are split off first
// (dehomogenization hides the x power), the rest goes through Yun's
// derivative-gcd algorithm on the dehomogenized polynomial.
template <ScalarField K>
SquarefreeDecomposition<K> squarefree_decomposition(const BinaryForm<K>& f) {
    if (f.is_zero()) throw std::domain_error("squarefree decomposition of the zero form");
    SquarefreeDecomposition<K> out;
    std::vector<K> p = f.dehomogenize();
    const int xpow = f.degree() - detail::upoly_degree(p);
    if (xpow > 0) out.factors.push_back({BinaryForm<K>::monomial(K(1), 1, 0), xpow});
    int ypow = 0;
    while (p.size() > 1 && p.front().is_zero()) {
        p.erase(p.begin());
        ++ypow;
    }
    if (ypow > 0) out.factors.push_back({BinaryForm<K>::monomial(K(1), 0, 1), ypow});

    if (detail::upoly_degree(p) > 0) {
        std::vector<K> w = detail::upoly_monic(p);
        // Yun: u = gcd(w, w'); v = w/u carries the squarefree part, and the
        // auxiliary sequence peels multiplicity classes one at a time.
        std::vector<K> dw = detail::upoly_derivative(w);
        std::vector<K> u = detail::upoly_gcd(w, dw);
        std::vector<K> v = detail::upoly_divmod(w, u).first;
        std::vector<K> s = detail::upoly_divmod(dw, u).first;
        int mult = 1;
        while (detail::upoly_degree(v) > 0) {
            const std::vector<K> diff =
                detail::upoly_add(s, detail::upoly_scale(detail::upoly_derivative(v), K(-1)));
            std::vector<K> h = detail::upoly_gcd(v, diff);
            if (detail::upoly_degree(h) > 0) {
                BinaryForm<K> factor =
                    BinaryForm<K>::from_univariate(h, detail::upoly_degree(h)).monic();
                out.factors.push_back({std::move(factor), mult});
            }
            v = detail::upoly_divmod(v, h).first;
            s = detail::upoly_divmod(diff, h).first;
            ++mult;
        }
    }

    // The constant is what exact division by the factor product leaves over;
    // doubles as an internal consistency check.
    BinaryForm<K> prod = BinaryForm<K>::constant(K(1));
    for (const auto& [factor, mult] : out.factors) prod = prod * pow(factor, mult);
    const std::optional<BinaryForm<K>> rest = divide_exact(f, prod);
    if (!rest || rest->is_zero() || !rest->is_constant())
        throw std::logic_error("squarefree decomposition failed to reconstruct its input");
    out.constant = rest->constant_value();
    return out;
}

struct FormSquareRoot {
    mpz_class radicand;        // squarefree integer c
    BinaryForm<Rational> root;  // h over the rationals with f = c * h^2
};

// Detects f = c*h^2 over the complex numbers while staying rational: all
// squarefree multiplicities must be even, and the leftover rational constant
// contributes the squarefree radicand c.
std::optional<FormSquareRoot> form_sqrt(const BinaryForm<Rational>& f);

BinaryForm<QuadExt> lift(const BinaryForm<Rational>& f);
// nullopt when some coefficient is irrational.
std::optional<BinaryForm<Rational>> restrict_rational(const BinaryForm<QuadExt>& f);

}  // namespace hitchin
