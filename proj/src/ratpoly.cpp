#include "mckay/ratpoly.hpp"

#include <stdexcept>

namespace mckay {

RatPoly RatPoly::monomial(const Rational& coeff, size_t deg) {
    if (coeff.is_zero()) return RatPoly();
    std::vector<Rational> c(deg + 1);
    c[deg] = coeff;
    return RatPoly(std::move(c));
}

const Rational& RatPoly::leading() const {
    if (c_.empty()) throw std::domain_error("RatPoly: leading coefficient of zero");
    return c_.back();
}

RatPoly RatPoly::operator-() const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rational& s) const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    if (d.is_zero()) throw std::domain_error("RatPoly: division by zero polynomial");
    RatPoly rem = *this;
    if (rem.degree() < d.degree()) return {RatPoly(), rem};
    std::vector<Rational> q(rem.degree() - d.degree() + 1);
    Rational lead_inv = d.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        size_t k = rem.degree() - d.degree();
        Rational f = rem.leading() * lead_inv;
        q[k] = f;
        rem = rem - d.shift(k) * f;
    }
    return {RatPoly(std::move(q)), rem};
}

RatPoly RatPoly::divide_exact(const RatPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("RatPoly: inexact division");
    return q;
}

RatPoly RatPoly::pow(long e) const {
    if (e < 0) throw std::domain_error("RatPoly: negative exponent");
    RatPoly r(Rational(1)), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

RatPoly RatPoly::shift(size_t k) const {
    if (is_zero()) return RatPoly();
    std::vector<Rational> r(c_.size() + k);
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return RatPoly(std::move(r));
}

Rational RatPoly::eval(const Rational& t) const {
    Rational acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c;
        if (out.empty()) {
            if (a.is_negative()) {
                out += "-";
                a = -a;
            }
        } else {
            out += a.is_negative() ? " - " : " + ";
            if (a.is_negative()) a = -a;
        }
        bool unit = (a == Rational(1));
        if (i == 0) {
            out += a.str();
        } else {
            if (!unit) out += a.str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

std::vector<Rational> series_divide(const RatPoly& num, const RatPoly& den, size_t len) {
    if (den.coeff(0).is_zero())
        throw std::domain_error("series_divide: denominator has zero constant term");
    Rational inv0 = den.coeff(0).inverse();
    std::vector<Rational> out(len);
    for (size_t k = 0; k < len; ++k) {
        Rational acc = num.coeff(k);
        for (size_t j = 1; j <= k; ++j) acc -= den.coeff(j) * out[k - j];
        out[k] = acc * inv0;
    }
    return out;
}

} // namespace mckay
