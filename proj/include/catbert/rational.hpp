#pragma once

// Exact arithmetic substrate: arbitrary-precision integers and rationals
// (GMP-backed), generalized binomial coefficients, p-adic valuations.

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace catbert {

using Int = mpz_class;

/// Exact rational number, always kept in canonical reduced form
/// (denominator >= 1, gcd(|num|, den) = 1). All arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Int& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Exact integer value; throws if the denominator is not 1.
    Int to_integer() const {
        if (!is_integer())
            throw std::domain_error("Rational: " + str() + " is not an integer");
        return v_.get_num();
    }

    /// "num" when integral, otherwise "num/den".
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Parses "num" or "num/den" (exact inverse of str()).
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(v_.get_den(), v_.get_num());
    }

private:
    mpq_class v_;
};

/// Generalized binomial coefficient binom(x, k) = prod_{i=1..k} (x - i + 1) / i
/// for rational x. binom(x, 0) = 1; vanishes exactly when x is a nonnegative
/// integer less than k.
inline Rational binom_rational(const Rational& x, unsigned long k) {
    Rational result(1);
    Rational factor = x;
    for (unsigned long i = 1; i <= k; ++i) {
        result *= factor / Rational(static_cast<long>(i));
        factor -= Rational(1);
        if (result.is_zero()) break;
    }
    return result;
}

/// Trial-division primality test for the small primes this library works with.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// p-adic valuation of a nonzero rational: the exponent of p in x, negative
/// when p divides the denominator. Satisfies v_p(xy) = v_p(x) + v_p(y).
/// Primality of p is the caller's responsibility (see is_prime).
inline long valuation(const Int& p, const Rational& x) {
    if (x.is_zero()) throw std::domain_error("valuation: undefined at zero");
    if (p < 2) throw std::domain_error("valuation: p must be >= 2");
    Int scratch;
    long vnum = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), x.num().get_mpz_t(), p.get_mpz_t()));
    long vden = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), x.den().get_mpz_t(), p.get_mpz_t()));
    return vnum - vden;
}

/// v_p(k!) by Legendre's formula, sum_i floor(k / p^i).
inline long legendre_valuation(const Int& p, unsigned long k) {
    if (p < 2) throw std::domain_error("legendre_valuation: p must be >= 2");
    long total = 0;
    Int power = p;
    while (power <= k) {
        total += static_cast<long>(mpz_class(Int(k) / power).get_si());
        power *= p;
    }
    return total;
}

}  // namespace catbert
