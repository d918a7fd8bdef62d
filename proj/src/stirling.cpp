#include "dstir/stirling.hpp"

#include <stdexcept>

namespace dstir {

namespace {

const Poly kZeroPoly{};

void require_positive_r(unsigned r) {
    if (r == 0) throw std::invalid_argument("stirling: r must be >= 1");
}

}  // namespace

StirlingTable::StirlingTable(Kind kind, unsigned r, unsigned nmax)
    : kind_(kind), r_(r), nmax_(nmax) {
    require_positive_r(r);
    rows_.resize(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n) rows_[n].resize(n / r + 1);
}

const Poly& StirlingTable::at(unsigned n, unsigned k) const {
    if (n > nmax_) throw std::out_of_range("StirlingTable::at: n beyond nmax");
    if (k >= rows_[n].size()) return kZeroPoly;
    return rows_[n][k];
}

void StirlingTable::set(unsigned n, unsigned k, Poly value) {
    rows_.at(n).at(k) = std::move(value);
}

StirlingTable build_table_second(unsigned r, unsigned nmax) {
    StirlingTable table(Kind::second, r, nmax);
    table.set(0, 0, Poly::one());
    // (1)_{r-1,lambda} - lambda*(r-1)*(1)_{r-1,lambda}, the Theorem-2 weight
    // on the k-1 term.
    const Poly weight =
        falling_lambda(Rational(1), r - 1) *
        Poly({Rational(1), Rational(-static_cast<long>(r - 1))});
    for (unsigned n = 0; n < nmax; ++n) {
        const unsigned m = n + 1;
        for (unsigned k = 1; k <= table.kmax(m); ++k) {
            // m >= kr here, hence n >= kr - 1 and the recurrence applies.
            Poly value = Poly({Rational(static_cast<long>(k)),
                               Rational(-static_cast<long>(n))}) *
                         table.at(n, k);
            if (m >= r) {
                Poly step = weight * table.at(m - r, k - 1);
                step *= Rational(binomial(n, r - 1));
                value += step;
            }
            table.set(m, k, std::move(value));
        }
    }
    return table;
}

StirlingTable build_table_first(unsigned r, unsigned nmax) {
    StirlingTable table(Kind::first, r, nmax);
    table.set(0, 0, Poly::one());
    const Poly weight = log_coeff(r);  // prod_{i=1}^{r-1}(lambda - i)
    for (unsigned n = 0; n < nmax; ++n) {
        const unsigned m = n + 1;
        for (unsigned k = 1; k <= table.kmax(m); ++k) {
            Poly value = Poly({Rational(-static_cast<long>(n)),
                               Rational(static_cast<long>(k))}) *
                         table.at(n, k);
            if (m >= r) {
                Poly step = weight * table.at(m - r, k - 1);
                step *= Rational(binomial(n, r - 1));
                value += step;
            }
            table.set(m, k, std::move(value));
        }
    }
    return table;
}

Poly second_kind_by_composition_sum(unsigned n, unsigned k, unsigned r) {
    require_positive_r(r);
    if (k == 0) return n == 0 ? Poly::one() : Poly::zero();

    std::vector<Poly> fall(n + 1);
    std::vector<BigInt> fact(n + 1);
    for (unsigned l = 0; l <= n; ++l) {
        fall[l] = falling_lambda(Rational(1), l);
        fact[l] = factorial(l);
    }

    Poly sum;
    // Depth-first over compositions l_1+...+l_k = n with l_i >= r,
    // accumulating prod (1)_{l_i,lambda} / l_i! along the way.
    auto recurse = [&](auto&& self, unsigned remaining, unsigned slots,
                       const Poly& acc_num, const BigInt& acc_den) -> void {
        if (slots == 1) {
            if (remaining >= r)
                sum += acc_num * fall[remaining] *
                       Rational(BigInt(1), acc_den * fact[remaining]);
            return;
        }
        for (unsigned l = r; l + r * (slots - 1) <= remaining; ++l)
            self(self, remaining - l, slots - 1, acc_num * fall[l],
                 acc_den * fact[l]);
    };
    if (n >= k * r) recurse(recurse, n, k, Poly::one(), BigInt(1));

    sum *= Rational(factorial(n), factorial(k));
    return sum;
}

Poly second_kind_by_inclusion_exclusion(unsigned n, unsigned k, unsigned r) {
    require_positive_r(r);
    const BigInt n_fact = factorial(n);
    Poly sum;
    for (unsigned m = 0; m <= k; ++m) {
        // Odometer over (l_1,...,l_m) in [0, r-1]^m.
        std::vector<unsigned> ls(m, 0);
        Poly inner;
        while (true) {
            unsigned l_total = 0;
            for (unsigned l : ls) l_total += l;
            if (l_total <= n) {
                Poly term = falling_lambda(Rational(static_cast<long>(k - m)), n - l_total);
                BigInt denom = factorial(n - l_total);
                for (unsigned l : ls) {
                    term *= falling_lambda(Rational(1), l);
                    denom *= factorial(l);
                }
                term *= Rational(n_fact, denom);
                inner += term;
            }
            unsigned i = 0;
            while (i < m && ls[i] + 1 == r) ls[i++] = 0;
            if (i == m) break;
            ++ls[i];
        }
        inner *= Rational(BigInt(binomial(k, m) * ((m % 2 == 0) ? 1 : -1)));
        sum += inner;
    }
    sum *= Rational(BigInt(1), factorial(k));
    return sum;
}

Poly number_by_series(Kind kind, unsigned n, unsigned k, unsigned r,
                      std::size_t order) {
    require_positive_r(r);
    if (order <= n)
        throw std::invalid_argument(
            "number_by_series: truncation order must exceed n");
    // The subtracted partial sums in the defining generating functions cancel
    // the leading coefficients exactly, so the base series is the tail from t^r.
    Series base = (kind == Kind::second) ? series_e_lambda(Rational(1), order)
                                         : series_log_lambda(order);
    for (std::size_t l = 0; l < r && l < order; ++l) base.set_coeff(l, Poly::zero());
    Series powered = series_pow(base, k);
    Poly value = egf_coefficient(powered, n);
    value *= Rational(BigInt(1), factorial(k));
    return value;
}

BigInt classical_value(const StirlingTable& table, unsigned n, unsigned k) {
    const Rational v = table.at(n, k).eval(Rational(0));
    if (!v.is_integer())
        throw std::domain_error(
            "classical_value: lambda=0 evaluation is not an integer");
    return v.integer_value();
}

}  // namespace dstir
