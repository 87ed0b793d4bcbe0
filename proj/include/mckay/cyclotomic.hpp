#pragma once

#include "mckay/ratpoly.hpp"

#include <string>
#include <vector>

namespace mckay {

/// Thrown when an exact computation reaches a state that contradicts an
/// invariant it is entitled to assume (inconsistent traces, broken
/// orthogonality, ...). Distinct from invalid_argument: this one means a bug
/// or inconsistent input data, never a user-facing precondition.
class ComputationError : public std::runtime_error {
public:
    explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

long euler_phi(long m);

/// m-th cyclotomic polynomial, cached.
const RatPoly& cyclotomic_polynomial(long m);

/// Element of Q(zeta_m) in the power basis {zeta^i : 0 <= i < phi(m)},
/// reduced modulo the m-th cyclotomic polynomial. Conductor 1 is the
/// rationals. Mixed-conductor arithmetic promotes both operands to the lcm;
/// group-level code fixes one conductor up front so this is a safety net,
/// not a conversion layer.
class Cyclotomic {
public:
    Cyclotomic() : m_(1), c_(1) {}
    explicit Cyclotomic(const Rational& r, long conductor = 1);
    Cyclotomic(long v) : Cyclotomic(Rational(v)) {}

    /// zeta_m^k.
    static Cyclotomic root_of_unity(long m, long k);
    /// Element with the given power-basis coefficients (length phi(m)).
    static Cyclotomic from_coeffs(long m, std::vector<Rational> coeffs);
    /// Reduction of an arbitrary polynomial in zeta_m.
    static Cyclotomic from_poly(long m, const RatPoly& p);

    long conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Rational value; throws if the element is irrational.
    Rational rational_value() const;

    Cyclotomic promoted(long new_conductor) const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    Cyclotomic inverse() const;
    /// Galois map zeta -> zeta^j, gcd(j, m) = 1.
    Cyclotomic galois(long j) const;
    /// Complex conjugation zeta -> zeta^{-1}.
    Cyclotomic conj() const { return galois(m_ == 1 ? 1 : m_ - 1); }

    Cyclotomic pow(long e) const;

    /// Deterministic serialization, also used as an ordering key.
    std::string str(const std::string& root_symbol = "z") const;
    std::string key() const;

private:
    long m_;
    std::vector<Rational> c_; // length phi(m_)
};

/// Given traces of g^k for k = 0..r-1 where g^r = 1, recover the
/// multiplicity of each eigenvalue zeta_r^j by the inverse discrete Fourier
/// transform m_j = (1/r) sum_k trace(g^k) zeta_r^{-jk}. Every m_j must come
/// out a nonnegative integer; anything else means the traces are not those
/// of a finite-order matrix with g^r = 1.
std::vector<long> cyclo_dft_multiplicities(const std::vector<Cyclotomic>& traces, long r);

} // namespace mckay
