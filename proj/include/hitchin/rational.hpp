#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

namespace hitchin {

// Arbitrary-precision rational in canonical form: positive denominator,
// gcd(|numerator|, denominator) = 1.  Canonicity is maintained through GMP's
// mpq layer; every constructor canonicalizes.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: integers embed implicitly
    Rational(long num, long den);
    Rational(mpz_class num, mpz_class den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "n" or "p/q" in base 10 (optional sign, no whitespace).
    // Throws ValidationError on malformed text or a zero denominator.
    static Rational parse(const std::string& text);

    // Canonical form: "n" when the denominator is 1, else "p/q".
    std::string str() const;

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    // 1/x; throws std::domain_error on zero.
    Rational inverse() const;

    // base^exp for integer exp (negative allowed on nonzero base).
    static Rational pow(const Rational& base, long exp);

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hitchin
