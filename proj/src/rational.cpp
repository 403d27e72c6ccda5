#include "hitchin/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "hitchin/errors.hpp"

namespace hitchin {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    q_ = mpq_class(std::move(num)) / mpq_class(std::move(den));
}

Rational Rational::parse(const std::string& text) {
    const auto bad = [&]() -> ValidationError {
        return ValidationError("malformed rational: \"" + text + "\"");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    mpz_class num, den;
    try {
        if (slash == std::string::npos) {
            num = mpz_class(text);
            den = 1;
        } else {
            num = mpz_class(text.substr(0, slash));
            den = mpz_class(text.substr(slash + 1));
        }
    } catch (const std::invalid_argument&) {
        throw bad();
    }
    if (den == 0) throw ValidationError("rational with zero denominator: \"" + text + "\"");
    return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base.is_zero()) {
        if (exp < 0) throw std::domain_error("negative power of zero");
        return Rational(0);
    }
    const Rational b = exp < 0 ? base.inverse() : base;
    const unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp)
                                    : static_cast<unsigned long>(exp);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), b.num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), b.den().get_mpz_t(), e);
    return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hitchin
