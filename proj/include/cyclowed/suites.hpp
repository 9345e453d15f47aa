#pragma once

// Randomized and exhaustive property suites shared by the command line tool and
// the acceptance run. Every suite is reproducible from its seed.

#include <cstdint>
#include <string>
#include <vector>

namespace cyclowed {

struct SuiteCheck {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;

    bool ok() const { return passed == total; }
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;

    bool ok() const;
};

/// The five identities on `trials` random rational tuples per size m in [1, 7], and on the
/// Dedekind and Wedderburn tuples at p^n in {2, 3, 4, 5, 8, 9, 16, 25, 27}.
SuiteReport vandermonde_suite(std::size_t trials, std::uint64_t seed);

/// G_q G_q^{-1} = I as polynomials (m <= 8) and at `trials` random rational q; the diagonalization
/// for m in [1, 16]; Fourier inversion for m in [1, 16]; the sign of det(V)^2 for m in [1, 12].
SuiteReport qpascal_suite(std::size_t trials, std::uint64_t seed);

/// Both composition laws, the telescoping identity, evaluation at zeta_{p^l} and the support
/// property, each on `trials` random sequences per p in {2, 3} with exponents in [0, 4].
SuiteReport toperator_suite(std::size_t trials, std::uint64_t seed);

} // namespace cyclowed
