#pragma once

#include <optional>
#include <stdexcept>

#include <gmpxx.h>

namespace trimult {

// Floor square root, exact at any magnitude. All-integer (GMP mpz_sqrt).
inline mpz_class isqrt(const mpz_class& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const mpz_class& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// T_t = t(t+1)/2
inline mpz_class triangular(const mpz_class& t) {
    return t * (t + 1) / 2;
}

// Index t with t(t+1)/2 = T, if T is triangular (iff 8T+1 is a perfect square).
inline std::optional<mpz_class> triangular_index(const mpz_class& T) {
    const mpz_class m = 8 * T + 1;
    if (!is_perfect_square(m)) return std::nullopt;
    return (isqrt(m) - 1) / 2;
}

}  // namespace trimult
