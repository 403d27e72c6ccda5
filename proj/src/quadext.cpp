#include "hitchin/quadext.hpp"

#include <ostream>
#include <stdexcept>

namespace hitchin {

namespace {
constexpr unsigned long kTrialBound = 1u << 20;
}

SquarefreeSplit squarefree_part(const mpz_class& n) {
    if (n == 0) return {0, 1};
    mpz_class rest = ::abs(n);
    mpz_class sf = n < 0 ? -1 : 1;
    mpz_class root = 1;
    for (unsigned long p = 2; p <= kTrialBound && rest > 1; p = p == 2 ? 3 : p + 2) {
        if (rest % p != 0) {
            if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0) break;  // cofactor is prime
            continue;
        }
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p, e / 2);
        root *= pw;
        if (e % 2) sf *= p;
    }
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            mpz_class s;
            mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
            root *= s;
        } else {
            // Cofactor has all prime factors above the trial bound; at desk
            // scale it is squarefree.
            sf *= rest;
        }
    }
    return {sf, root};
}

QuadExt::QuadExt(Rational a, Rational b, mpz_class c) : a_(std::move(a)), b_(std::move(b)) {
    if (b_.is_zero()) return;  // rational value, radicand stays 0
    if (c == 0) {
        b_ = Rational(0);  // b*sqrt(0) vanishes
        return;
    }
    const SquarefreeSplit split = squarefree_part(c);
    if (split.squarefree == 1) {  // c was a perfect square: fold into a
        a_ += b_ * Rational(split.root, 1);
        b_ = Rational(0);
        return;
    }
    b_ *= Rational(split.root, 1);
    c_ = split.squarefree;
}

QuadExt QuadExt::sqrt_of(const Rational& r) {
    if (r.is_zero()) throw std::domain_error("sqrt_of(0) has no radicand");
    // p/q = (p*q)/q^2 = s*(v/q)^2 with p*q = s*v^2.
    const SquarefreeSplit split = squarefree_part(r.num() * r.den());
    return QuadExt(Rational(0), Rational(split.root, r.den()), split.squarefree);
}

const Rational& QuadExt::to_rational() const {
    if (!is_rational()) throw std::domain_error("irrational element of Q(sqrt(" + c_.get_str() + "))");
    return a_;
}

Rational QuadExt::field_norm() const {
    return a_ * a_ - b_ * b_ * Rational(c_, 1);
}

const mpz_class& QuadExt::merge_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.c_ == 0) return y.c_;
    if (y.c_ == 0 || x.c_ == y.c_) return x.c_;
    throw std::domain_error("incompatible radicands sqrt(" + x.c_.get_str() + ") and sqrt(" +
                            y.c_.get_str() + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    const mpz_class c = merge_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    c_ = b_.is_zero() ? mpz_class(0) : c;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    const mpz_class c = merge_radicand(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    c_ = b_.is_zero() ? mpz_class(0) : c;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    const mpz_class c = merge_radicand(*this, o);
    const Rational rc(c, 1);
    Rational na = a_ * o.a_ + b_ * o.b_ * rc;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    c_ = b_.is_zero() ? mpz_class(0) : c;
    return *this;
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    const Rational n = field_norm();
    return QuadExt(a_ / n, -b_ / n, c_);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

QuadExt QuadExt::pow(const QuadExt& base, long exp) {
    if (exp == 0) return QuadExt(1);
    QuadExt b = exp < 0 ? base.inverse() : base;
    unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    QuadExt acc(1);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

std::string QuadExt::str() const {
    if (is_rational()) return a_.str();
    std::string rad = "sqrt(" + c_.get_str() + ")";
    std::string irr = b_.is_one() ? rad : (b_ == Rational(-1) ? "-" + rad : b_.str() + "*" + rad);
    if (a_.is_zero()) return irr;
    if (irr[0] == '-') return a_.str() + irr;
    return a_.str() + "+" + irr;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& v) { return os << v.str(); }

}  // namespace hitchin
