#pragma once

#include "mckay/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mckay {

/// Dense univariate polynomial with Rational coefficients.
/// coeff(i) is the coefficient of x^i; no trailing zeros are stored,
/// so the zero polynomial has an empty coefficient vector.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    RatPoly(const Rational& r) {
        if (!r.is_zero()) c_.push_back(r);
    }

    static RatPoly x() { return RatPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static RatPoly monomial(const Rational& coeff, size_t deg);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    const Rational& coeff(size_t i) const {
        static const Rational zero;
        return i < c_.size() ? c_[i] : zero;
    }
    const Rational& leading() const;
    bool is_one() const { return c_.size() == 1 && c_[0] == Rational(1); }
    bool is_constant() const { return c_.size() <= 1; }

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rational& s) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return c_ != o.c_; }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
    /// Exact division; throws if the remainder is nonzero.
    RatPoly divide_exact(const RatPoly& d) const;

    RatPoly pow(long e) const;
    /// Multiply by x^k.
    RatPoly shift(size_t k) const;

    Rational eval(const Rational& t) const;

    /// Leading coefficient scaled to 1.
    RatPoly monic() const;

    std::string str(const std::string& var) const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
RatPoly poly_gcd(RatPoly a, RatPoly b);

/// Truncated power-series quotient num/den with den(0) != 0:
/// coefficients of x^0..x^len-1.
std::vector<Rational> series_divide(const RatPoly& num, const RatPoly& den, size_t len);

} // namespace mckay
