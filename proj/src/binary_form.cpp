#include "hitchin/binary_form.hpp"

#include <sstream>

namespace hitchin {

namespace detail {

void ipoly_trim(std::vector<mpz_class>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<mpz_class> ipoly_prem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const mpz_class lb = b.back();
    int pending = static_cast<int>(a.size()) - 1 - db + 1;
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const mpz_class la = a.back();
        for (mpz_class& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
        ipoly_trim(a);
        --pending;
    }
    // The loop may shed more than one degree per step; pad the remaining
    // lc(b) factors so divisions in the subresultant sequence stay exact.
    for (; pending > 0; --pending)
        for (mpz_class& c : a) c *= lb;
    return a;
}

std::vector<mpz_class> ipoly_primitive(std::vector<mpz_class> p) {
    ipoly_trim(p);
    if (p.empty()) return p;
    mpz_class g = 0;
    for (const mpz_class& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (sgn(p.back()) < 0) g = -g;
    for (mpz_class& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

std::vector<mpz_class> ipoly_subresultant_gcd(std::vector<mpz_class> a, std::vector<mpz_class> b) {
    a = ipoly_primitive(std::move(a));
    b = ipoly_primitive(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    mpz_class g = 1, h = 1;
    while (true) {
        const int delta = static_cast<int>(a.size()) - static_cast<int>(b.size());
        std::vector<mpz_class> r = ipoly_prem(a, b);
        if (r.empty()) break;
        a = std::move(b);
        mpz_class divisor;
        mpz_class hp;
        mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        divisor = g * hp;
        for (mpz_class& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        b = std::move(r);
        g = a.back();
        if (delta > 0) {
            mpz_class gd;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_class hd;
            mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
        }
    }
    return ipoly_primitive(std::move(b));
}

std::vector<mpz_class> rational_to_primitive(const std::vector<Rational>& p) {
    mpz_class common = 1;
    for (const Rational& c : p) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = p[i].num() * (common / p[i].den());
    return ipoly_primitive(std::move(out));
}

}  // namespace detail

std::optional<FormSquareRoot> form_sqrt(const BinaryForm<Rational>& f) {
    if (f.is_zero()) throw std::domain_error("square root of the zero form");
    const SquarefreeDecomposition<Rational> dec = squarefree_decomposition(f);
    for (const auto& [factor, mult] : dec.factors)
        if (mult % 2) return std::nullopt;
    BinaryForm<Rational> half = BinaryForm<Rational>::constant(Rational(1));
    for (const auto& [factor, mult] : dec.factors) half = half * pow(factor, mult / 2);
    // constant = c * t^2 with c squarefree: c from the squarefree part of
    // num*den, t = root/den.
    const SquarefreeSplit split = squarefree_part(dec.constant.num() * dec.constant.den());
    const Rational t(split.root, dec.constant.den());
    return FormSquareRoot{split.squarefree, half * t};
}

BinaryForm<QuadExt> lift(const BinaryForm<Rational>& f) {
    if (f.is_zero()) return {};
    std::vector<QuadExt> c;
    c.reserve(f.coeffs().size());
    for (const Rational& v : f.coeffs()) c.emplace_back(v);
    return BinaryForm<QuadExt>(f.degree(), std::move(c));
}

std::optional<BinaryForm<Rational>> restrict_rational(const BinaryForm<QuadExt>& f) {
    if (f.is_zero()) return BinaryForm<Rational>();
    std::vector<Rational> c;
    c.reserve(f.coeffs().size());
    for (const QuadExt& v : f.coeffs()) {
        if (!v.is_rational()) return std::nullopt;
        c.push_back(v.a());
    }
    return BinaryForm<Rational>(f.degree(), std::move(c));
}

namespace {

template <ScalarField K>
std::string render_form(const BinaryForm<K>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    const int d = f.degree();
    bool first = true;
    for (int k = 0; k <= d; ++k) {
        const K& c = f.coeff(k);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        const bool negated = !first && cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
        if (!first) os << (negated ? " - " : " + ");
        if (negated) cs = cs.substr(1);
        const int xp = d - k, yp = k;
        std::string mono;
        if (xp > 0) mono += xp == 1 ? "x" : "x^" + std::to_string(xp);
        if (yp > 0) {
            if (!mono.empty()) mono += "*";
            mono += yp == 1 ? "y" : "y^" + std::to_string(yp);
        }
        const bool unit = cs == "1";
        const bool needs_parens = cs.find_first_of("+-") != std::string::npos &&
                                  !(cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos);
        if (mono.empty()) {
            os << cs;
        } else if (unit) {
            os << mono;
        } else {
            if (needs_parens)
                os << "(" << cs << ")*" << mono;
            else
                os << cs << "*" << mono;
        }
        first = false;
    }
    return os.str();
}

}  // namespace

template <>
std::string BinaryForm<Rational>::str() const { return render_form(*this); }

template <>
std::string BinaryForm<QuadExt>::str() const { return render_form(*this); }

}  // namespace hitchin
