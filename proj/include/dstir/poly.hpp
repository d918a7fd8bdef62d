#pragma once

#include <span>
#include <vector>

#include "dstir/rational.hpp"

namespace dstir {

// Dense univariate polynomial in the degeneracy parameter lambda over
// Rational. Canonical form: no trailing zero coefficients; the zero
// polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rational c);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // Coefficient of lambda^i; zero beyond the stored range.
    Rational coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : Rational(0);
    }
    std::span<const Rational> coeffs() const { return c_; }

    Rational eval(const Rational& v) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

// Generalized falling factorial (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda)
// as a polynomial in lambda; (x)_{0,lambda} = 1.
Poly falling_lambda(const Rational& x, unsigned n);

// c_n(lambda) = prod_{i=1}^{n-1} (lambda - i), the n-th EGF coefficient
// polynomial of the degenerate logarithm. Monic of degree n-1; c_1 = 1.
// Throws std::invalid_argument for n = 0.
Poly log_coeff(unsigned n);

}  // namespace dstir
