#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dstir/bell.hpp"
#include "dstir/io.hpp"
#include "dstir/selfcheck.hpp"

namespace {

using namespace dstir;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string kind = "second";
    unsigned r = 1;
    unsigned nmax = 8;
    unsigned n = 0;
    unsigned k = 0;
    std::optional<std::string> lambda;
    std::optional<std::string> x;
    std::size_t order = 8;
    std::string format = "csv";
    std::optional<std::string> out;
    std::string which = "e_lambda";
    unsigned rmax = 3;
    unsigned oracle_nmax = 9;
};

Kind parse_kind(const std::string& s) {
    if (s == "second") return Kind::second;
    if (s == "first") return Kind::first;
    throw CLI::ValidationError("--kind must be 'first' or 'second'");
}

std::optional<Rational> parse_rational(const std::optional<std::string>& s) {
    if (!s) return std::nullopt;
    return Rational::from_string(*s);
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out) {
        std::ofstream f(*opt.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + *opt.out);
        f << text;
    } else {
        std::cout << text;
    }
}

int run_table(const Options& opt) {
    const Kind kind = parse_kind(opt.kind);
    const StirlingTable table = (kind == Kind::second)
                                    ? build_table_second(opt.r, opt.nmax)
                                    : build_table_first(opt.r, opt.nmax);
    const auto lambda = parse_rational(opt.lambda);
    std::string text;
    if (opt.format == "csv") {
        text = io::table_to_csv(table, lambda);
    } else if (opt.format == "json") {
        text = io::table_to_json(table, lambda).dump(2) + "\n";
    } else {
        for (unsigned n = 0; n <= table.nmax(); ++n)
            for (unsigned k = 0; k <= table.kmax(n); ++k) {
                text += "S(" + std::to_string(n) + "," + std::to_string(k) + ") = ";
                text += lambda ? table.at(n, k).eval(*lambda).str()
                               : io::poly_pretty(table.at(n, k));
                text += "\n";
            }
    }
    emit(opt, text);
    return kExitOk;
}

int run_value(const Options& opt) {
    const Kind kind = parse_kind(opt.kind);
    const StirlingTable table = (kind == Kind::second)
                                    ? build_table_second(opt.r, opt.n)
                                    : build_table_first(opt.r, opt.n);
    const Poly& value = table.at(opt.n, opt.k);
    const auto lambda = parse_rational(opt.lambda);
    std::string text;
    if (lambda) {
        text = opt.format == "json" ? io::rational_to_json(value.eval(*lambda)).dump()
                                    : value.eval(*lambda).str();
    } else if (opt.format == "json") {
        text = io::poly_to_json(value).dump();
    } else if (opt.format == "pretty") {
        text = io::poly_pretty(value);
    } else {
        text = io::poly_to_string(value);
    }
    emit(opt, text + "\n");
    return kExitOk;
}

int run_bell(const Options& opt) {
    const StirlingTable table = build_table_second(opt.r, opt.n);
    const BellPoly b = bell_poly(opt.n, opt.r, table);
    const auto lambda = parse_rational(opt.lambda);
    const auto x = parse_rational(opt.x);
    std::string text;
    if (x && lambda) {
        const Rational v = bell_eval(b, *x, *lambda);
        text = opt.format == "json" ? io::rational_to_json(v).dump() : v.str();
    } else if (x) {
        Poly p;
        for (unsigned k = 0; k < b.coeffs_in_x().size(); ++k)
            p += pow(*x, k) * b.coeffs_in_x()[k];
        text = opt.format == "json"     ? io::poly_to_json(p).dump()
               : opt.format == "pretty" ? io::poly_pretty(p)
                                        : io::poly_to_string(p);
    } else if (opt.format == "pretty") {
        text = io::bell_pretty(b);
    } else {
        text = io::bell_to_json(b).dump(2);
    }
    emit(opt, text + "\n");
    return kExitOk;
}

int run_series(const Options& opt) {
    Series s(std::max<std::size_t>(opt.order, 1));
    const Rational x = parse_rational(opt.x).value_or(Rational(1));
    if (opt.which == "e_lambda") {
        s = series_e_lambda(x, opt.order);
    } else if (opt.which == "log_lambda") {
        s = series_log_lambda(opt.order);
    } else if (opt.which == "base_second" || opt.which == "base_first") {
        s = opt.which == "base_second" ? series_e_lambda(Rational(1), opt.order)
                                       : series_log_lambda(opt.order);
        for (std::size_t l = 0; l < opt.r && l < s.order(); ++l)
            s.set_coeff(l, Poly::zero());
    } else {
        throw CLI::ValidationError(
            "--which must be one of e_lambda, log_lambda, base_second, base_first");
    }
    std::string text;
    if (opt.format == "pretty") {
        for (std::size_t n = 0; n < s.order(); ++n)
            text += "t^" + std::to_string(n) + ": " + io::poly_pretty(s.coeff(n)) + "\n";
    } else {
        text = io::series_to_json(s).dump(2) + "\n";
    }
    emit(opt, text);
    return kExitOk;
}

int run_selfcheck_cmd(const Options& opt) {
    SelfcheckOptions sopts;
    sopts.nmax = opt.nmax;
    sopts.rmax = opt.rmax;
    sopts.oracle_nmax = opt.oracle_nmax;
    if (auto mismatch = run_selfcheck(sopts)) {
        std::cout << "selfcheck FAILED: " << mismatch->describe() << "\n";
        return kExitMismatch;
    }
    std::cout << "selfcheck OK (nmax=" << sopts.nmax << ", rmax=" << sopts.rmax
              << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact degenerate r-associated Stirling and Bell computations"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format: csv, json or pretty")
            ->check(CLI::IsMember({"csv", "json", "pretty"}));
        cmd->add_option("--out", opt.out, "Write output to a file instead of stdout");
    };

    auto* table = app.add_subcommand("table", "Emit a full Stirling triangle");
    table->add_option("--kind", opt.kind)->check(CLI::IsMember({"first", "second"}));
    table->add_option("--r", opt.r, "Minimum block size")->check(CLI::PositiveNumber);
    table->add_option("--nmax", opt.nmax)->required();
    table->add_option("--lambda", opt.lambda, "Evaluate entries at this rational");
    add_format(table);

    auto* value = app.add_subcommand("value", "Emit a single table entry");
    value->add_option("--kind", opt.kind)->check(CLI::IsMember({"first", "second"}));
    value->add_option("--r", opt.r)->check(CLI::PositiveNumber);
    value->add_option("--n", opt.n)->required();
    value->add_option("--k", opt.k)->required();
    value->add_option("--lambda", opt.lambda);
    add_format(value);

    auto* bell = app.add_subcommand("bell", "Emit a Bell polynomial or its value");
    bell->add_option("--r", opt.r)->check(CLI::PositiveNumber);
    bell->add_option("--n", opt.n)->required();
    bell->add_option("--x", opt.x, "Evaluate at this x");
    bell->add_option("--lambda", opt.lambda, "Evaluate coefficients at this lambda");
    add_format(bell);

    auto* series = app.add_subcommand("series", "Emit a truncated series");
    series->add_option("--which", opt.which,
                       "e_lambda, log_lambda, base_second or base_first");
    series->add_option("--order", opt.order, "Truncation order")->required();
    series->add_option("--x", opt.x, "Exponent parameter for e_lambda");
    series->add_option("--r", opt.r)->check(CLI::PositiveNumber);
    add_format(series);

    auto* selfcheck = app.add_subcommand("selfcheck", "Run the cross-path suites");
    selfcheck->add_option("--nmax", opt.nmax);
    selfcheck->add_option("--rmax", opt.rmax);
    selfcheck->add_option("--oracle-nmax", opt.oracle_nmax);

    try {
        app.parse(argc, argv);
        if (table->parsed()) return run_table(opt);
        if (value->parsed()) return run_value(opt);
        if (bell->parsed()) return run_bell(opt);
        if (series->parsed()) return run_series(opt);
        if (selfcheck->parsed()) return run_selfcheck_cmd(opt);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
