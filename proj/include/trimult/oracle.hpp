#pragma once

#include <gmpxx.h>

#include "trimult/nonsquare.hpp"

namespace trimult {

// Exhaustive enumeration result: every (t, xi) with T_xi = k * T_t and
// 0 <= t <= t_max, ascending in t. Deliberately independent of the Pell path.
struct OracleResult {
    mpz_class k;
    mpz_class t_max;
    std::vector<SolutionPair> pairs;
};

// OpenMP-chunked scan; each chunk rebuilds its starting T_t and then walks
// incrementally. Falls back to one chunk without OpenMP.
OracleResult brute_force(const mpz_class& k, const mpz_class& t_max);

// Single-loop reference implementation, kept for testing the parallel kernel.
OracleResult brute_force_serial(const mpz_class& k, const mpz_class& t_max);

}  // namespace trimult
