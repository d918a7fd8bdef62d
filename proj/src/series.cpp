#include "dstir/series.hpp"

#include <stdexcept>

namespace dstir {

namespace {

void require_equal_orders(const Series& a, const Series& b, const char* op) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
}

void require_zero_constant_term(const Series& a, const char* op) {
    if (!a.coeff(0).is_zero())
        throw std::invalid_argument(std::string(op) +
                                    ": argument must have zero constant term");
}

}  // namespace

Series::Series(std::size_t order) {
    if (order == 0) throw std::invalid_argument("Series: order must be >= 1");
    c_.resize(order);
}

Series::Series(std::size_t order, std::vector<Poly> coeffs) : c_(std::move(coeffs)) {
    if (order == 0) throw std::invalid_argument("Series: order must be >= 1");
    if (c_.size() != order)
        throw std::invalid_argument("Series: coefficient count does not match order");
}

const Poly& Series::coeff(std::size_t n) const {
    if (n >= c_.size()) throw std::out_of_range("Series::coeff: index beyond order");
    return c_[n];
}

void Series::set_coeff(std::size_t n, Poly p) {
    if (n >= c_.size()) throw std::out_of_range("Series::set_coeff: index beyond order");
    c_[n] = std::move(p);
}

Series Series::operator-() const {
    Series out = *this;
    for (auto& p : out.c_) p = -p;
    return out;
}

Series& Series::operator+=(const Series& o) {
    require_equal_orders(*this, o, "Series::operator+");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    require_equal_orders(*this, o, "Series::operator-");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Series series_e_lambda(const Rational& x, std::size_t order) {
    Series out(order);
    for (std::size_t n = 0; n < order; ++n) {
        Poly p = falling_lambda(x, static_cast<unsigned>(n));
        p *= Rational(BigInt(1), factorial(static_cast<unsigned>(n)));
        out.set_coeff(n, std::move(p));
    }
    return out;
}

Series series_log_lambda(std::size_t order) {
    Series out(order);
    for (std::size_t n = 1; n < order; ++n) {
        Poly p = log_coeff(static_cast<unsigned>(n));
        p *= Rational(BigInt(1), factorial(static_cast<unsigned>(n)));
        out.set_coeff(n, std::move(p));
    }
    return out;
}

Series series_mul(const Series& a, const Series& b) {
    require_equal_orders(a, b, "series_mul");
    const std::size_t m = a.order();
    Series out(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (std::size_t j = 0; i + j < m; ++j) {
            if (b.coeff(j).is_zero()) continue;
            Poly sum = out.coeff(i + j);
            sum += a.coeff(i) * b.coeff(j);
            out.set_coeff(i + j, std::move(sum));
        }
    }
    return out;
}

Series series_pow(const Series& a, unsigned k) {
    Series acc(a.order());
    acc.set_coeff(0, Poly::one());
    Series base = a;
    while (k > 0) {
        if (k & 1u) acc = series_mul(acc, base);
        k >>= 1u;
        if (k > 0) base = series_mul(base, base);
    }
    return acc;
}

// exp(a) for a with zero constant term, via b' = a'b:
//   b_n = (1/n) * sum_{j=1}^{n} j * a_j * b_{n-j}.
Series series_exp(const Series& a) {
    require_zero_constant_term(a, "series_exp");
    const std::size_t m = a.order();
    Series out(m);
    out.set_coeff(0, Poly::one());
    for (std::size_t n = 1; n < m; ++n) {
        Poly sum;
        for (std::size_t j = 1; j <= n; ++j)
            sum += Rational(static_cast<long>(j)) * (a.coeff(j) * out.coeff(n - j));
        sum *= Rational(1, static_cast<long>(n));
        out.set_coeff(n, std::move(sum));
    }
    return out;
}

Series series_compose(const Series& a, const Series& b) {
    require_equal_orders(a, b, "series_compose");
    require_zero_constant_term(b, "series_compose");
    const std::size_t m = a.order();
    Series out(m);
    // Horner over the outer coefficients.
    for (std::size_t i = m; i-- > 0;) {
        out = series_mul(out, b);
        Poly head = out.coeff(0);
        head += a.coeff(i);
        out.set_coeff(0, std::move(head));
    }
    return out;
}

Poly egf_coefficient(const Series& a, std::size_t n) {
    if (n >= a.order())
        throw std::out_of_range("egf_coefficient: index beyond truncation order");
    Poly p = a.coeff(n);
    p *= Rational(factorial(static_cast<unsigned>(n)), BigInt(1));
    return p;
}

}  // namespace dstir
