#include "dstir/rational.hpp"

#include <stdexcept>

namespace dstir {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(BigInt num, BigInt den) : v_(num, den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    mpq_class v;
    if (s.empty() || mpq_set_str(v.get_mpq_t(), std::string(s).c_str(), 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    if (v.get_den() == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return v_.get_str();
}

BigInt Rational::integer_value() const {
    if (!is_integer())
        throw std::domain_error("Rational: " + str() + " is not an integer");
    return v_.get_num();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational pow(const Rational& a, unsigned e) {
    Rational acc(1);
    Rational base = a;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

BigInt factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace dstir
