#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace dstir {

using BigInt = mpz_class;

// Exact fraction over arbitrary-precision integers. Always reduced,
// denominator > 0, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(BigInt n) : v_(std::move(n)) {}
    Rational(BigInt num, BigInt den);

    // Parses "p" or "p/q". Throws std::invalid_argument on malformed input
    // or zero denominator.
    static Rational from_string(std::string_view s);

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    // Numerator of the reduced form; requires is_integer().
    BigInt integer_value() const;

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

// a^e with e >= 0; 0^0 = 1.
Rational pow(const Rational& a, unsigned e);

// n! as an exact integer.
BigInt factorial(unsigned n);

// Binomial coefficient C(n, k); 0 when k > n.
BigInt binomial(unsigned n, unsigned k);

}  // namespace dstir
