#include "mckay/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace mckay {

long euler_phi(long m) {
    if (m <= 0) throw std::invalid_argument("euler_phi: m must be positive");
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

std::mutex cache_mutex;

RatPoly x_pow_minus_one(long m) {
    std::vector<Rational> c(m + 1);
    c[0] = Rational(-1);
    c[m] = Rational(1);
    return RatPoly(std::move(c));
}

const RatPoly& cyclotomic_polynomial_locked(long m, std::map<long, RatPoly>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    RatPoly p = x_pow_minus_one(m);
    for (long d = 1; d < m; ++d)
        if (m % d == 0) p = p.divide_exact(cyclotomic_polynomial_locked(d, cache));
    return cache.emplace(m, std::move(p)).first->second;
}

// Reduction table for conductor m: row k holds the coefficients of
// x^{phi(m)+k} mod Phi_m, for k = 0..phi(m)-2 (enough for products).
struct ReductionTable {
    long phi;
    std::vector<std::vector<Rational>> rows;
};

const ReductionTable& reduction_table(long m) {
    static std::map<long, ReductionTable> tables;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = tables.find(m);
    if (it != tables.end()) return it->second;

    static std::map<long, RatPoly> poly_cache;
    const RatPoly& phi_m = cyclotomic_polynomial_locked(m, poly_cache);
    long phi = phi_m.degree();
    ReductionTable t;
    t.phi = phi;
    // x^phi mod Phi = -(lower part); Phi is monic.
    std::vector<Rational> cur(phi);
    for (long i = 0; i < phi; ++i) cur[i] = -phi_m.coeff(i);
    for (long k = 0; k + 1 < phi || k == 0; ++k) {
        if (k > 0) {
            // multiply previous row by x and reduce the overflow term
            std::vector<Rational> next(phi);
            Rational top = cur[phi - 1];
            for (long i = phi - 1; i > 0; --i) next[i] = cur[i - 1];
            if (!top.is_zero())
                for (long i = 0; i < phi; ++i) next[i] += top * t.rows[0][i];
            cur = std::move(next);
        }
        t.rows.push_back(cur);
        if (phi == 1) break;
    }
    return tables.emplace(m, std::move(t)).first->second;
}

std::vector<Rational> reduce_coeffs(long m, const std::vector<Rational>& raw) {
    const ReductionTable& t = reduction_table(m);
    long phi = t.phi;
    std::vector<Rational> out(phi);
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].is_zero()) continue;
        if (static_cast<long>(i) < phi) {
            out[i] += raw[i];
        } else {
            size_t k = i - phi;
            if (k >= t.rows.size())
                throw std::invalid_argument("Cyclotomic: degree too large for reduction table");
            for (long j = 0; j < phi; ++j) out[j] += raw[i] * t.rows[k][j];
        }
    }
    return out;
}

} // namespace

const RatPoly& cyclotomic_polynomial(long m) {
    if (m <= 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    static std::map<long, RatPoly> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cyclotomic_polynomial_locked(m, cache);
}

Cyclotomic::Cyclotomic(const Rational& r, long conductor) : m_(conductor) {
    if (conductor <= 0) throw std::invalid_argument("Cyclotomic: conductor must be positive");
    c_.assign(euler_phi(conductor), Rational());
    c_[0] = r;
}

Cyclotomic Cyclotomic::root_of_unity(long m, long k) {
    if (m <= 0) throw std::invalid_argument("Cyclotomic: conductor must be positive");
    k %= m;
    if (k < 0) k += m;
    // x^k, then reduce by repeated squaring through the table is overkill:
    // k < m and the table covers degree <= 2 phi - 2, so fold k via x^m = 1
    // first and reduce once. k < m always holds here; reduce through powers.
    long phi = euler_phi(m);
    std::vector<Rational> raw(m);
    raw[k] = Rational(1);
    if (k < phi) {
        std::vector<Rational> out(phi);
        out[k] = Rational(1);
        return from_coeffs(m, std::move(out));
    }
    // reduce x^k step by step: x^k = x^{phi} * x^{k-phi}; iterate via table rows
    // available up to 2 phi - 2. Do it by repeated multiplication by x.
    Cyclotomic acc = from_coeffs(m, [&] {
        std::vector<Rational> v(phi);
        v[phi - 1] = Rational(1);
        return v;
    }());
    Cyclotomic x = from_coeffs(m, [&] {
        std::vector<Rational> v(phi);
        v[phi > 1 ? 1 : 0] = Rational(1);
        if (phi == 1) {
            // zeta is rational: zeta_1 = 1, zeta_2 = -1
            v[0] = (m == 1) ? Rational(1) : Rational(-1);
        }
        return v;
    }());
    for (long i = phi - 1; i < k; ++i) acc = acc * x;
    return acc;
}

Cyclotomic Cyclotomic::from_coeffs(long m, std::vector<Rational> coeffs) {
    Cyclotomic z;
    z.m_ = m;
    if (static_cast<long>(coeffs.size()) != euler_phi(m))
        throw std::invalid_argument("Cyclotomic: coefficient vector has wrong length");
    z.c_ = std::move(coeffs);
    return z;
}

Cyclotomic Cyclotomic::from_poly(long m, const RatPoly& p) {
    std::vector<Rational> raw(p.degree() + 1);
    for (long i = 0; i <= p.degree(); ++i) raw[i] = p.coeff(i);
    // fold exponents >= m via zeta^m = 1 before table reduction
    long phi = euler_phi(m);
    std::vector<Rational> folded(std::min<size_t>(raw.size(), m));
    folded.resize(m);
    for (size_t i = 0; i < raw.size(); ++i) folded[i % m] += raw[i];
    // now reduce degrees phi..m-1 by multiplying down with root_of_unity
    Cyclotomic acc(Rational(0), m);
    std::vector<Rational> low(phi);
    for (long i = 0; i < std::min<long>(phi, m); ++i) low[i] = folded[i];
    acc = from_coeffs(m, std::move(low));
    for (long i = phi; i < m; ++i)
        if (!folded[i].is_zero()) acc += root_of_unity(m, i) * Cyclotomic(folded[i], m);
    return acc;
}

bool Cyclotomic::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("Cyclotomic: value is irrational: " + str());
    return c_[0];
}

Cyclotomic Cyclotomic::promoted(long new_conductor) const {
    if (new_conductor == m_) return *this;
    if (new_conductor % m_ != 0)
        throw std::invalid_argument("Cyclotomic: conductor does not divide target");
    long step = new_conductor / m_;
    // zeta_m = zeta_M^step; substitute via Horner in the big field.
    Cyclotomic zeta_step = root_of_unity(new_conductor, step);
    Cyclotomic acc(Rational(0), new_conductor);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * zeta_step + Cyclotomic(c_[i], new_conductor);
    return acc;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

namespace {
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (m_ != o.m_) {
        long m = lcm_long(m_, o.m_);
        return promoted(m) + o.promoted(m);
    }
    Cyclotomic r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (m_ != o.m_) {
        long m = lcm_long(m_, o.m_);
        return promoted(m) * o.promoted(m);
    }
    size_t phi = c_.size();
    std::vector<Rational> raw(2 * phi - 1);
    for (size_t i = 0; i < phi; ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < phi; ++j) {
            if (o.c_[j].is_zero()) continue;
            raw[i + j] += c_[i] * o.c_[j];
        }
    }
    return from_coeffs(m_, reduce_coeffs(m_, raw));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (m_ != o.m_) {
        long m = lcm_long(m_, o.m_);
        return promoted(m) == o.promoted(m);
    }
    return c_ == o.c_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
    // Extended Euclid in Q[x] against Phi_m: s*f + t*Phi = 1.
    RatPoly f(std::vector<Rational>(c_));
    RatPoly phi = cyclotomic_polynomial(m_);
    RatPoly r0 = phi, r1 = f;
    RatPoly s0, s1 = RatPoly(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        RatPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant; Phi_m is irreducible)
    if (r0.degree() != 0)
        throw ComputationError("Cyclotomic: gcd with cyclotomic polynomial not constant");
    RatPoly inv = s0 * r0.coeff(0).inverse();
    return from_poly(m_, inv);
}

Cyclotomic Cyclotomic::galois(long j) const {
    j %= m_;
    if (j < 0) j += m_;
    if (std::gcd(j, m_) != 1) throw std::invalid_argument("Cyclotomic: galois exponent not coprime");
    Cyclotomic zeta_j = root_of_unity(m_, j);
    Cyclotomic acc(Rational(0), m_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * zeta_j + Cyclotomic(c_[i], m_);
    return acc;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic r(Rational(1), m_), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string Cyclotomic::str(const std::string& root_symbol) const {
    RatPoly p{std::vector<Rational>(c_)};
    return p.str(root_symbol);
}

std::string Cyclotomic::key() const {
    std::string s = std::to_string(m_) + ":";
    for (const auto& v : c_) s += v.str() + ",";
    return s;
}

std::vector<long> cyclo_dft_multiplicities(const std::vector<Cyclotomic>& traces, long r) {
    if (r <= 0) throw std::invalid_argument("cyclo_dft_multiplicities: r must be positive");
    if (static_cast<long>(traces.size()) != r)
        throw std::invalid_argument("cyclo_dft_multiplicities: need exactly r traces");
    long cond = r;
    for (const auto& t : traces) cond = cond / std::gcd(cond, t.conductor()) * t.conductor();
    Rational r_inv = Rational(1, r);
    std::vector<long> m(r);
    long total = 0;
    for (long j = 0; j < r; ++j) {
        Cyclotomic acc(Rational(0), cond);
        for (long k = 0; k < r; ++k) {
            long e = ((-j * k) % r + r) % r;
            acc += traces[k].promoted(cond) * Cyclotomic::root_of_unity(cond, e * (cond / r));
        }
        Cyclotomic scaled = acc * Cyclotomic(r_inv, cond);
        if (!scaled.is_rational() || !scaled.rational_value().is_integer())
            throw ComputationError("cyclo_dft_multiplicities: non-integral multiplicity (traces inconsistent with g^r = 1)");
        Rational v = scaled.rational_value();
        if (v.is_negative())
            throw ComputationError("cyclo_dft_multiplicities: negative multiplicity (traces inconsistent)");
        m[j] = v.as_long();
        total += m[j];
    }
    if (!traces[0].is_rational() || Rational(total) != traces[0].rational_value())
        throw ComputationError("cyclo_dft_multiplicities: multiplicities do not sum to the dimension");
    return m;
}

} // namespace mckay
