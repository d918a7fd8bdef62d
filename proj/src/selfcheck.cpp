#include "dstir/selfcheck.hpp"

#include <algorithm>

#include "dstir/bell.hpp"
#include "dstir/oracle.hpp"

namespace dstir {

std::string SelfcheckMismatch::describe() const {
    return check + " mismatch at (kind=" +
           (kind == Kind::second ? std::string("second") : std::string("first")) +
           ", r=" + std::to_string(r) + ", n=" + std::to_string(n) +
           ", k=" + std::to_string(k) + ")";
}

std::optional<SelfcheckMismatch> run_selfcheck(const SelfcheckOptions& opts) {
    const std::size_t order = opts.nmax + 1;

    for (unsigned r = 1; r <= opts.rmax; ++r) {
        const StirlingTable second = build_table_second(r, opts.nmax);
        const StirlingTable first = build_table_first(r, opts.nmax);

        for (unsigned n = 0; n <= opts.nmax; ++n) {
            for (unsigned k = 0; k <= n / r; ++k) {
                const Poly& rec = second.at(n, k);
                if (rec != second_kind_by_composition_sum(n, k, r))
                    return SelfcheckMismatch{"second-kind composition sum",
                                             Kind::second, r, n, k};
                if (rec != second_kind_by_inclusion_exclusion(n, k, r))
                    return SelfcheckMismatch{"second-kind inclusion-exclusion",
                                             Kind::second, r, n, k};
                if (rec != number_by_series(Kind::second, n, k, r, order))
                    return SelfcheckMismatch{"second-kind series extraction",
                                             Kind::second, r, n, k};
                if (first.at(n, k) != number_by_series(Kind::first, n, k, r, order))
                    return SelfcheckMismatch{"first-kind series extraction",
                                             Kind::first, r, n, k};
            }
        }

        // Classical specialization against brute-force partition counts.
        const unsigned oracle_nmax = std::min(
            {opts.nmax, opts.oracle_nmax, oracle::kMaxPartitionGroundSet});
        for (unsigned n = 0; n <= oracle_nmax; ++n)
            for (unsigned k = 0; k <= n / r; ++k)
                if (classical_value(second, n, k) !=
                    BigInt(static_cast<unsigned long>(
                        oracle::count_partitions({n, k, r}))))
                    return SelfcheckMismatch{"classical partition count",
                                             Kind::second, r, n, k};

        // Classical recursion S(n,k) = k S(n-1,k) + C(n-1,r-1) S(n-r,k-1).
        for (unsigned n = 1; n <= opts.nmax; ++n)
            for (unsigned k = 1; k <= n / r; ++k) {
                BigInt expected = BigInt(k) * classical_value(second, n - 1, k);
                if (n >= r)
                    expected += binomial(n - 1, r - 1) *
                                classical_value(second, n - r, k - 1);
                if (classical_value(second, n, k) != expected)
                    return SelfcheckMismatch{"classical recursion",
                                             Kind::second, r, n, k};
            }

        // Theorem 1 vs the generating-function route, a few rational x values.
        const Rational xs[] = {Rational(1), Rational(-2), Rational(1, 3)};
        for (unsigned n = 0; n <= std::min(opts.nmax, 8u); ++n) {
            for (const Rational& x : xs) {
                Poly expected;
                for (unsigned k = 0; k <= n / r; ++k)
                    expected += pow(x, k) * second.at(n, k);
                if (expected != bell_by_egf(n, r, x, order))
                    return SelfcheckMismatch{"Bell polynomial EGF",
                                             Kind::second, r, n, 0};
            }
        }
    }

    // r=1 reductions and the inverse relation between the two kinds.
    const StirlingTable second1 = build_table_second(1, opts.nmax);
    const StirlingTable first1 = build_table_first(1, opts.nmax);
    for (unsigned n = 0; n < opts.nmax; ++n)
        for (unsigned k = 1; k <= n + 1; ++k) {
            Poly s2 = Poly({Rational(static_cast<long>(k)),
                            Rational(-static_cast<long>(n))}) *
                          second1.at(n, k) +
                      second1.at(n, k - 1);
            if (second1.at(n + 1, k) != s2)
                return SelfcheckMismatch{"r=1 second-kind reduction",
                                         Kind::second, 1, n + 1, k};
            Poly s1 = Poly({Rational(-static_cast<long>(n)),
                            Rational(static_cast<long>(k))}) *
                          first1.at(n, k) +
                      first1.at(n, k - 1);
            if (first1.at(n + 1, k) != s1)
                return SelfcheckMismatch{"r=1 first-kind reduction",
                                         Kind::first, 1, n + 1, k};
        }
    for (unsigned n = 0; n <= opts.nmax; ++n)
        for (unsigned m = 0; m <= opts.nmax; ++m) {
            Poly sum;
            for (unsigned k = m; k <= n; ++k)
                sum += second1.at(n, k) * first1.at(k, m);
            const Poly expected = (n == m) ? Poly::one() : Poly::zero();
            if (sum != expected)
                return SelfcheckMismatch{"inverse relation", Kind::second, 1, n, m};
        }

    return std::nullopt;
}

}  // namespace dstir
