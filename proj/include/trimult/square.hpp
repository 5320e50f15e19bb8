#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "trimult/nonsquare.hpp"

namespace trimult {

// For a fixed base index t >= 1, the lambda and xi sequences with
// lambda_n = (4t+2) lambda_{n-1} - lambda_{n-2}   (lambda_1 = 1)
// xi_n     = (4t+2) xi_{n-1} - xi_{n-2} + 2t      (xi_1 = t)
// so that lambda_n^2 * T_t = T_{xi_n} for every n.
struct SquareFamily {
    mpz_class t;
    std::vector<mpz_class> lambdas;  // lambda_1 .. lambda_n
    std::vector<mpz_class> xis;      // xi_1 .. xi_n
};

// Coefficients of lambda_n as a polynomial in u = 4t+2, ascending degree.
struct LambdaPolynomial {
    std::size_t n = 0;
    std::vector<mpz_class> coeffs;  // size n, degree n-1

    mpz_class eval_u(const mpz_class& u) const;
};

struct SquareScanRow {
    mpz_class lambda;
    mpz_class k;  // lambda^2
    mpz_class t;
    mpz_class xi;
};

// First n terms of both sequences. t >= 1, n >= 1.
SquareFamily square_family(const mpz_class& t, std::size_t n);

// Exact coefficient list via the Chebyshev-like recurrence
// p_n = u * p_{n-1} - p_{n-2}, p_0 = 0, p_1 = 1.
LambdaPolynomial lambda_polynomial(std::size_t n);

// All (lambda_n, lambda_n^2, t, xi_n) with n >= 2 and lambda_n^2 <= k_max,
// ascending in lambda. At most one row per lambda; a duplicate would mean the
// one-or-no-solution property is broken and throws std::logic_error.
std::vector<SquareScanRow> scan_square_k(const mpz_class& k_max);

// The unique (t, xi) with T_xi = k * T_t for square k = lambda^2, lambda >= 2,
// or nullopt when lambda appears in no family. Throws std::domain_error when k
// is not a square of some lambda >= 2.
std::optional<SolutionPair> solve_square_k(const mpz_class& k);

}  // namespace trimult
