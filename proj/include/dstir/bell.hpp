#pragma once

#include "dstir/stirling.hpp"

namespace dstir {

// Degenerate r-associated Bell polynomial in x: coefficient of x^k is the
// second-kind table entry (n, k), for 0 <= k <= floor(n/r).
class BellPoly {
public:
    BellPoly(unsigned n, unsigned r, std::vector<Poly> coeffs_in_x);

    unsigned n() const { return n_; }
    unsigned r() const { return r_; }
    const std::vector<Poly>& coeffs_in_x() const { return coeffs_; }

    friend bool operator==(const BellPoly& a, const BellPoly& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.coeffs_ == b.coeffs_;
    }

private:
    unsigned n_;
    unsigned r_;
    std::vector<Poly> coeffs_;
};

// Builds the Bell polynomial from a second-kind table with matching r and
// nmax >= n; throws std::invalid_argument on a mismatched table.
BellPoly bell_poly(unsigned n, unsigned r, const StirlingTable& table);

// sum_k x0^k * (coefficient evaluated at lambda0).
Rational bell_eval(const BellPoly& b, const Rational& x0, const Rational& lambda0);

// Verification path through the generating function: exp(x0 * base series)
// with the second-kind base, n-th EGF coefficient. Requires order > n.
Poly bell_by_egf(unsigned n, unsigned r, const Rational& x0, std::size_t order);

}  // namespace dstir
