#include "dstir/io.hpp"

#include <sstream>
#include <stdexcept>

namespace dstir::io {

json rational_to_json(const Rational& v) { return v.str(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string())
        throw std::invalid_argument("rational_from_json: expected a string");
    return Rational::from_string(j.get<std::string>());
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("poly_from_json: expected an array");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return Poly(std::move(coeffs));
}

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i > 0) out += ';';
        out += p.coeffs()[i].str();
    }
    return out;
}

Poly poly_from_string(const std::string& s) {
    std::vector<Rational> coeffs;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, ';')) coeffs.push_back(Rational::from_string(part));
    return Poly(std::move(coeffs));
}

std::string poly_pretty(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Rational& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        const bool negative = c < Rational(0);
        const Rational mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = mag == Rational(1) && i > 0;
        if (!unit) out += mag.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += "lambda";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

json series_to_json(const Series& s) {
    json coeffs = json::array();
    for (const auto& p : s.coeffs()) coeffs.push_back(poly_to_json(p));
    return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Series series_from_json(const json& j) {
    const auto order = j.at("order").get<std::size_t>();
    std::vector<Poly> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(poly_from_json(c));
    return Series(order, std::move(coeffs));
}

namespace {

std::string kind_name(Kind k) { return k == Kind::second ? "second" : "first"; }

Kind kind_from_name(const std::string& s) {
    if (s == "second") return Kind::second;
    if (s == "first") return Kind::first;
    throw std::invalid_argument("unknown kind '" + s + "'");
}

}  // namespace

json table_to_json(const StirlingTable& t, const std::optional<Rational>& lambda) {
    json entries = json::array();
    for (unsigned n = 0; n <= t.nmax(); ++n) {
        for (unsigned k = 0; k <= t.kmax(n); ++k) {
            json value = lambda ? json(t.at(n, k).eval(*lambda).str())
                                : poly_to_json(t.at(n, k));
            entries.push_back(json{{"n", n}, {"k", k}, {"value", std::move(value)}});
        }
    }
    return json{{"kind", kind_name(t.kind())},
                {"r", t.r()},
                {"nmax", t.nmax()},
                {"entries", std::move(entries)}};
}

StirlingTable table_from_json(const json& j) {
    StirlingTable t(kind_from_name(j.at("kind").get<std::string>()),
                    j.at("r").get<unsigned>(), j.at("nmax").get<unsigned>());
    for (const auto& e : j.at("entries")) {
        const auto& value = e.at("value");
        Poly p = value.is_string() ? Poly(rational_from_json(value))
                                   : poly_from_json(value);
        t.set(e.at("n").get<unsigned>(), e.at("k").get<unsigned>(), std::move(p));
    }
    return t;
}

std::string table_to_csv(const StirlingTable& t, const std::optional<Rational>& lambda) {
    std::string out = "n,k,value\n";
    for (unsigned n = 0; n <= t.nmax(); ++n) {
        for (unsigned k = 0; k <= t.kmax(n); ++k) {
            out += std::to_string(n) + "," + std::to_string(k) + ",";
            out += lambda ? t.at(n, k).eval(*lambda).str()
                          : poly_to_string(t.at(n, k));
            out += '\n';
        }
    }
    return out;
}

json bell_to_json(const BellPoly& b) {
    json coeffs = json::array();
    for (const auto& p : b.coeffs_in_x()) coeffs.push_back(poly_to_json(p));
    return json{{"n", b.n()}, {"r", b.r()}, {"coeffs_in_x", std::move(coeffs)}};
}

BellPoly bell_from_json(const json& j) {
    std::vector<Poly> coeffs;
    for (const auto& c : j.at("coeffs_in_x")) coeffs.push_back(poly_from_json(c));
    return BellPoly(j.at("n").get<unsigned>(), j.at("r").get<unsigned>(),
                    std::move(coeffs));
}

std::string bell_pretty(const BellPoly& b) {
    std::string out;
    const auto& coeffs = b.coeffs_in_x();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += poly_pretty(coeffs[k]);
        } else {
            out += "x^" + std::to_string(k) + "*(" + poly_pretty(coeffs[k]) + ")";
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace dstir::io
