#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "hitchin/rational.hpp"

namespace hitchin {

// Splits n = squarefree * root^2 with sign(squarefree) = sign(n).
// Trial division up to a fixed bound plus a perfect-square check on the
// cofactor; the coefficients produced at desk scale stay far below the bound.
struct SquarefreeSplit {
    mpz_class squarefree;
    mpz_class root;
};
SquarefreeSplit squarefree_part(const mpz_class& n);

// Element a + b*sqrt(c) of Q(sqrt(c)) for a squarefree radicand c.  Values
// with b = 0 are rational and carry radicand 0; the constructor normalizes
// square factors of c into b.  Arithmetic between two distinct nonzero
// radicands is a domain error (one radicand per computation context).
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long n) : a_(n) {}            // NOLINT: integers embed implicitly
    QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT: rationals embed implicitly
    QuadExt(Rational a, Rational b, mpz_class c);

    // sqrt(r) as an element of Q(sqrt(c)) with c the squarefree part of
    // num(r)*den(r).  Throws on r = 0 (the radicand would be lost).
    static QuadExt sqrt_of(const Rational& r);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const mpz_class& radicand() const { return c_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    // Throws std::domain_error when the value is irrational.
    const Rational& to_rational() const;

    QuadExt conjugate() const { return QuadExt(a_, -b_, c_); }
    // a^2 - b^2 c; zero only for the zero element (c is never a square).
    Rational field_norm() const;

    QuadExt inverse() const;  // throws std::domain_error on zero
    static QuadExt pow(const QuadExt& base, long exp);

    QuadExt operator-() const { return QuadExt(-a_, -b_, c_); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { x += y; return x; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { x -= y; return x; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { x *= y; return x; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { x /= y; return x; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

    std::string str() const;

private:
    // Shared radicand of the two operands; throws on a genuine mismatch.
    static const mpz_class& merge_radicand(const QuadExt& x, const QuadExt& y);

    Rational a_;
    Rational b_;
    mpz_class c_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadExt& v);

}  // namespace hitchin
