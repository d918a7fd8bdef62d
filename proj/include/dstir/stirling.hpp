#pragma once

#include <cstddef>
#include <vector>

#include "dstir/series.hpp"

namespace dstir {

enum class Kind { first, second };

// Memoized triangle of degenerate r-associated Stirling values for one
// (kind, r) pair. Entry (n, k) is stored for 0 <= k <= floor(n/r),
// 0 <= n <= nmax; entries with n < k*r are zero, entry (0,0) is 1.
class StirlingTable {
public:
    StirlingTable(Kind kind, unsigned r, unsigned nmax);

    Kind kind() const { return kind_; }
    unsigned r() const { return r_; }
    unsigned nmax() const { return nmax_; }
    unsigned kmax(unsigned n) const { return n / r_; }

    // Zero outside the stored triangle.
    const Poly& at(unsigned n, unsigned k) const;
    void set(unsigned n, unsigned k, Poly value);

private:
    Kind kind_;
    unsigned r_;
    unsigned nmax_;
    std::vector<std::vector<Poly>> rows_;
};

// Second-kind triangle filled by the derivative recurrence
//   S(n+1,k) = (k - n*lambda) S(n,k)
//              + (1 - (r-1)*lambda) (1)_{r-1,lambda} C(n,r-1) S(n-r+1,k-1),
// seeded by S(0,0) = 1 and the n < kr zero boundary.
StirlingTable build_table_second(unsigned r, unsigned nmax);

// First-kind triangle filled by
//   S(n+1,k) = (k*lambda - n) S(n,k) + c_r(lambda) C(n,r-1) S(n-r+1,k-1),
// where c_r(lambda) = prod_{i=1}^{r-1}(lambda - i).
StirlingTable build_table_first(unsigned r, unsigned nmax);

// Explicit sum over compositions l_1+...+l_k = n with every l_i >= r:
//   (1/k!) sum n! prod_i (1)_{l_i,lambda} / prod_i l_i!.
Poly second_kind_by_composition_sum(unsigned n, unsigned k, unsigned r);

// Inclusion-exclusion form of the same value:
//   (1/k!) sum_{m=0}^{k} C(k,m)(-1)^m sum_{l_1..l_m in [0,r)}
//     n! prod_j (1)_{l_j,lambda} (k-m)_{n-sum(l),lambda} / (prod_j l_j! (n-sum(l))!).
Poly second_kind_by_inclusion_exclusion(unsigned n, unsigned k, unsigned r);

// Coefficient extraction from the defining generating function: the base
// series is e_lambda(t) minus its first r terms (second kind) or
// log_lambda(1+t) minus its first r-1 terms (first kind); the value is the
// n-th EGF coefficient of base^k / k!. Requires order > n.
Poly number_by_series(Kind kind, unsigned n, unsigned k, unsigned r, std::size_t order);

// Table entry evaluated at lambda = 0. Throws std::domain_error if the
// evaluation is not an integer (which would signal an arithmetic bug).
BigInt classical_value(const StirlingTable& table, unsigned n, unsigned k);

}  // namespace dstir
