#ifndef SUMCOL_RATIONAL_HPP
#define SUMCOL_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumcol {

using Integer = mpz_class;

/// Exact arbitrary-precision fraction. Always stored in lowest terms with a
/// positive denominator; every operation is exact. No floating point is used
/// anywhere in bound or LP computations.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}  // NOLINT: implicit wanted
    Rational(const Integer& v) : q_(v) {}                // NOLINT
    Rational(const Integer& num, const Integer& den) : q_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long long num, long long den)
        : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return q_ == 0; }

    /// Largest integer <= value.
    Integer floor() const {
        Integer r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    /// Smallest integer >= value.
    Integer ceil() const {
        Integer r;
        mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.q_ == 0) throw std::invalid_argument("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// "p/q", or just "p" when the value is an integer.
    std::string to_string() const;

    /// Rounded decimal rendering, display convenience only ("2.500000").
    std::string decimal_string(int digits = 6) const;

    /// Inverse of to_string; accepts "p" and "p/q".
    static Rational from_string(const std::string& s);

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

/// Binomial coefficient C(m, n); zero when n > m.
Integer binomial(unsigned long m, unsigned long n);

/// Exact integer square roots (no floating point).
Integer isqrt_floor(const Integer& x);
Integer isqrt_ceil(const Integer& x);

}  // namespace sumcol

#endif
