#pragma once

#include <vector>

#include "dstir/poly.hpp"

namespace dstir {

// Truncated formal power series in t with Poly coefficients. The order M is
// the exclusive truncation bound: terms t^0 ... t^{M-1} are retained and
// coeffs[n] is the raw coefficient of t^n (no factorial scaling).
class Series {
public:
    // Zero series of the given order; order must be >= 1.
    explicit Series(std::size_t order);
    Series(std::size_t order, std::vector<Poly> coeffs);

    std::size_t order() const { return c_.size(); }
    const Poly& coeff(std::size_t n) const;
    void set_coeff(std::size_t n, Poly p);

    const std::vector<Poly>& coeffs() const { return c_; }

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

private:
    std::vector<Poly> c_;
};

// Truncation of e_lambda^x(t) = sum_n (x)_{n,lambda} t^n / n!.
Series series_e_lambda(const Rational& x, std::size_t order);

// Truncation of log_lambda(1+t) = sum_{n>=1} c_n(lambda) t^n / n!.
Series series_log_lambda(std::size_t order);

// Binary operations require equal orders and throw std::invalid_argument
// otherwise. series_exp and the inner series of series_compose must have a
// zero constant term.
Series series_mul(const Series& a, const Series& b);
Series series_pow(const Series& a, unsigned k);
Series series_exp(const Series& a);
Series series_compose(const Series& a, const Series& b);

// n! * coeffs[n]; throws std::out_of_range when n >= order.
Poly egf_coefficient(const Series& a, std::size_t n);

}  // namespace dstir
