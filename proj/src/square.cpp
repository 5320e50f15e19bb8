#include "trimult/square.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "trimult/integer_core.hpp"

namespace trimult {

SquareFamily square_family(const mpz_class& t, std::size_t n) {
    if (t < 1) throw std::domain_error("square_family requires t >= 1");
    if (n < 1) throw std::domain_error("square_family requires n >= 1");
    SquareFamily fam;
    fam.t = t;
    fam.lambdas.reserve(n);
    fam.xis.reserve(n);
    const mpz_class u = 4 * t + 2;
    const mpz_class Tt = triangular(t);
    mpz_class lam_prev = 0, lam = 1;  // lambda_0, lambda_1
    mpz_class xi_prev = 0, xi = t;    // xi_0, xi_1
    for (std::size_t i = 0; i < n; ++i) {
        if (lam * lam * Tt != triangular(xi))
            throw std::logic_error("square family invariant broken at t=" + t.get_str());
        fam.lambdas.push_back(lam);
        fam.xis.push_back(xi);
        mpz_class lam_next = u * lam - lam_prev;
        mpz_class xi_next = u * xi - xi_prev + 2 * t;
        lam_prev = std::move(lam);
        xi_prev = std::move(xi);
        lam = std::move(lam_next);
        xi = std::move(xi_next);
    }
    return fam;
}

mpz_class LambdaPolynomial::eval_u(const mpz_class& u) const {
    mpz_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
    return acc;
}

LambdaPolynomial lambda_polynomial(std::size_t n) {
    if (n < 1) throw std::domain_error("lambda_polynomial requires n >= 1");
    std::vector<mpz_class> prev;      // p_0 = 0
    std::vector<mpz_class> cur = {1};  // p_1 = 1
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<mpz_class> next(cur.size() + 1, mpz_class(0));
        for (std::size_t d = 0; d < cur.size(); ++d) next[d + 1] = cur[d];
        for (std::size_t d = 0; d < prev.size(); ++d) next[d] -= prev[d];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {n, std::move(cur)};
}

std::vector<SquareScanRow> scan_square_k(const mpz_class& k_max) {
    std::vector<SquareScanRow> rows;
    // Family t contributes lambda_2 = 4t+2 as its smallest member past 1,
    // so t only needs to run while (4t+2)^2 fits.
    for (mpz_class t = 1; (4 * t + 2) * (4 * t + 2) <= k_max; ++t) {
        const mpz_class u = 4 * t + 2;
        mpz_class lam_prev = 1, lam = u;              // lambda_1, lambda_2
        mpz_class xi_prev = t, xi = u * t + 2 * t;    // xi_1, xi_2
        while (lam * lam <= k_max) {
            rows.push_back({lam, lam * lam, t, xi});
            mpz_class lam_next = u * lam - lam_prev;
            mpz_class xi_next = u * xi - xi_prev + 2 * t;
            lam_prev = std::move(lam);
            xi_prev = std::move(xi);
            lam = std::move(lam_next);
            xi = std::move(xi_next);
        }
    }
    std::sort(rows.begin(), rows.end(),
              [](const SquareScanRow& a, const SquareScanRow& b) { return a.lambda < b.lambda; });
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].lambda == rows[i - 1].lambda)
            throw std::logic_error("two square families share lambda=" + rows[i].lambda.get_str());
    return rows;
}

std::optional<SolutionPair> solve_square_k(const mpz_class& k) {
    if (k < 2) throw std::domain_error("k must be >= 2, got " + k.get_str());
    if (!is_perfect_square(k))
        throw std::domain_error("k=" + k.get_str() + " is not a perfect square");
    const mpz_class lam = isqrt(k);
    for (mpz_class t = 1; 4 * t + 2 <= lam; ++t) {
        const mpz_class u = 4 * t + 2;
        mpz_class lam_prev = 1, cur = u;
        mpz_class xi_prev = t, xi = u * t + 2 * t;
        while (cur < lam) {
            mpz_class lam_next = u * cur - lam_prev;
            mpz_class xi_next = u * xi - xi_prev + 2 * t;
            lam_prev = std::move(cur);
            xi_prev = std::move(xi);
            cur = std::move(lam_next);
            xi = std::move(xi_next);
        }
        if (cur == lam) return SolutionPair{t, xi};
    }
    return std::nullopt;
}

}  // namespace trimult
