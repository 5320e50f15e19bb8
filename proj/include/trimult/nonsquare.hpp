#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "trimult/pell.hpp"

namespace trimult {

// One solution of T_xi = k * T_t for a fixed k.
struct SolutionPair {
    mpz_class t;
    mpz_class xi;

    bool operator==(const SolutionPair&) const = default;
};

// Rank r, the constants kappa and gamma derived from the first solutions,
// and the 2r seed pairs that drive the recurrences.
struct RankProfile {
    mpz_class k;
    std::size_t rank = 0;
    mpz_class kappa;
    mpz_class gamma;
    std::vector<mpz_class> seeds_t;   // t_0 .. t_{2r-1}
    std::vector<mpz_class> seeds_xi;  // xi_0 .. xi_{2r-1}
};

enum class SequenceKind { t, xi, Tt, Txi };

// Coefficients of X_n = c1 * X_{n-r} + c2 * X_{n-2r} + c3 (c2 is always -1).
struct RecurrenceSpec {
    SequenceKind kind;
    std::size_t order;  // 2r
    mpz_class c1;
    mpz_class c2;
    mpz_class c3;
};

struct RankUndetermined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (t, xi) = ((y-1)/2, (x-1)/2) when both coordinates are odd and positive.
std::optional<SolutionPair> map_to_pair(const PellSolution& s);

// The n smallest solutions, ascending in t, starting with (0, 0).
std::vector<SolutionPair> solution_sequence(const mpz_class& k, std::size_t n);

// Smallest r >= 1 such that kappa = t_r + t_{r-1} = xi_r - xi_{r-1} - 1 and the
// t-recurrence holds at every available index. Throws RankUndetermined when no
// r <= (len-1)/4 fits, which signals a too-short prefix.
RankProfile detect_rank(const mpz_class& k, const std::vector<SolutionPair>& pairs);

// detect_rank with the prefix grown geometrically until the rank settles.
RankProfile rank_profile(const mpz_class& k);

std::array<RecurrenceSpec, 4> recurrence_specs(const RankProfile& p);

// First n terms of the requested sequence, seeds taken from the profile
// (triangular of the index seeds for the T kinds).
std::vector<mpz_class> extend(const RankProfile& p, SequenceKind kind, std::size_t n);

struct IdentityResult {
    char id = '?';            // 'a'..'h'
    std::string name;
    std::size_t n_begin = 0;  // half-open range of checked indices
    std::size_t n_end = 0;
    bool passed = false;
    std::string witness;      // empty when passed
};

struct VerificationReport {
    mpz_class k;
    std::size_t rank = 0;
    mpz_class kappa;
    mpz_class gamma;
    std::vector<IdentityResult> entries;
    // Observed relation kappa + 1 = x(unit^m); informational only.
    std::optional<unsigned> kappa_unit_power;

    bool all_passed() const;
};

// Exact integer check of every identity over the supplied pairs.
// Failures become report entries, never exceptions.
VerificationReport verify_identities(const mpz_class& k, const RankProfile& p,
                                     const std::vector<SolutionPair>& pairs);

struct RankRow {
    mpz_class k;
    std::optional<RankProfile> profile;  // nullopt: rank undetermined
};

// Rank profiles for every non-square k in [k_min, k_max], in k order.
// The parallel version shards the range across OpenMP workers.
std::vector<RankRow> rank_table(const mpz_class& k_min, const mpz_class& k_max);
std::vector<RankRow> rank_table_serial(const mpz_class& k_min, const mpz_class& k_max);

// Identity reports for every non-square k <= k_max over `terms`-term prefixes.
std::vector<VerificationReport> verify_range(const mpz_class& k_max, std::size_t terms);

}  // namespace trimult
