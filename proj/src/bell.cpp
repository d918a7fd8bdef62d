#include "dstir/bell.hpp"

#include <stdexcept>

namespace dstir {

BellPoly::BellPoly(unsigned n, unsigned r, std::vector<Poly> coeffs_in_x)
    : n_(n), r_(r), coeffs_(std::move(coeffs_in_x)) {
    if (r == 0) throw std::invalid_argument("BellPoly: r must be >= 1");
    if (coeffs_.size() != static_cast<std::size_t>(n / r) + 1)
        throw std::invalid_argument("BellPoly: coefficient count must be floor(n/r)+1");
}

BellPoly bell_poly(unsigned n, unsigned r, const StirlingTable& table) {
    if (table.kind() != Kind::second)
        throw std::invalid_argument("bell_poly: table must be second kind");
    if (table.r() != r)
        throw std::invalid_argument("bell_poly: table r does not match");
    if (table.nmax() < n)
        throw std::invalid_argument("bell_poly: table nmax too small");
    std::vector<Poly> coeffs;
    coeffs.reserve(n / r + 1);
    for (unsigned k = 0; k <= n / r; ++k) coeffs.push_back(table.at(n, k));
    return BellPoly(n, r, std::move(coeffs));
}

Rational bell_eval(const BellPoly& b, const Rational& x0, const Rational& lambda0) {
    Rational acc(0);
    const auto& coeffs = b.coeffs_in_x();
    for (std::size_t k = coeffs.size(); k-- > 0;)
        acc = acc * x0 + coeffs[k].eval(lambda0);
    return acc;
}

Poly bell_by_egf(unsigned n, unsigned r, const Rational& x0, std::size_t order) {
    if (r == 0) throw std::invalid_argument("bell_by_egf: r must be >= 1");
    if (order <= n)
        throw std::invalid_argument("bell_by_egf: truncation order must exceed n");
    Series base = series_e_lambda(Rational(1), order);
    for (std::size_t l = 0; l < r && l < order; ++l) base.set_coeff(l, Poly::zero());
    for (std::size_t l = 0; l < order; ++l) {
        Poly p = base.coeff(l);
        p *= x0;
        base.set_coeff(l, std::move(p));
    }
    return egf_coefficient(series_exp(base), n);
}

}  // namespace dstir
