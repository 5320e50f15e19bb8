#include "trimult/oracle.hpp"

#include <utility>
#include <vector>

#include "trimult/integer_core.hpp"
#include "trimult/threads.hpp"

namespace trimult {

namespace {

// T_xi = k T_t demands 8 k T_t + 1 to be an odd square (2 xi + 1)^2.
void scan_chunk(const mpz_class& k, const mpz_class& lo, const mpz_class& hi,
                std::vector<SolutionPair>& out) {
    mpz_class T = triangular(lo);
    for (mpz_class t = lo; t < hi; ++t) {
        const mpz_class m = 8 * k * T + 1;
        if (is_perfect_square(m)) out.push_back({t, (isqrt(m) - 1) / 2});
        T += t + 1;
    }
}

}  // namespace

OracleResult brute_force_serial(const mpz_class& k, const mpz_class& t_max) {
    OracleResult res{k, t_max, {}};
    if (t_max < 0) return res;
    scan_chunk(k, 0, t_max + 1, res.pairs);
    return res;
}

OracleResult brute_force(const mpz_class& k, const mpz_class& t_max) {
    OracleResult res{k, t_max, {}};
    if (t_max < 0) return res;
    const mpz_class total = t_max + 1;
    long chunks = static_cast<long>(worker_threads()) * 4;
    if (total < chunks) chunks = 1;

    std::vector<std::vector<SolutionPair>> parts(static_cast<std::size_t>(chunks));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_threads())
#endif
    for (long i = 0; i < chunks; ++i) {
        const mpz_class lo = total * i / chunks;
        const mpz_class hi = total * (i + 1) / chunks;
        scan_chunk(k, lo, hi, parts[static_cast<std::size_t>(i)]);
    }
    for (auto& part : parts)
        for (auto& pair : part) res.pairs.push_back(std::move(pair));
    return res;
}

}  // namespace trimult
