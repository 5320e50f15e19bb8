#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace trimult {

// Periodic continued fraction of sqrt(k) for non-square k.
// The period is palindromic except for its last element, which equals 2*a0.
struct ContinuedFraction {
    mpz_class a0;
    std::vector<mpz_class> period;
};

// Minimal (x, y) with x^2 - k y^2 = 1 and y >= 1.
struct PellUnit {
    mpz_class x;
    mpz_class y;
};

// One solution of x^2 - k y^2 = 1 - k, signed coordinates.
struct PellSolution {
    mpz_class x;
    mpz_class y;
};

// Everything needed to stream solutions of x^2 - k y^2 = 1 - k for one k.
// Immutable after construction.
struct PellContext {
    mpz_class k;
    ContinuedFraction cf;
    PellUnit unit;
    std::vector<PellSolution> class_reps;  // x >= 0, y >= 0, ascending in y
};

// Throws std::domain_error for k < 2 or square k.
ContinuedFraction cf_sqrt(const mpz_class& k);

// Fundamental solution of x^2 - k y^2 = 1 from the CF convergents
// (one period, or its square when the period length is odd).
PellUnit fundamental_unit(const mpz_class& k);

// All solutions of x^2 - k y^2 = 1 - k with 0 <= y <= B, where B is the
// classical bound y1 * sqrt((k-1)/(2(x1-1))) widened by a small margin.
// Always contains (1, 1).
std::vector<PellSolution> class_representatives(const mpz_class& k);

PellContext pell_context(const mpz_class& k);

// The `count` smallest solutions with x >= 1, y >= 1, ascending in y,
// generated by composing each signed representative with powers of the unit.
std::vector<PellSolution> solution_stream(const PellContext& ctx, std::size_t count);

// Smallest m in [1, max_power] with x(unit^m) == target_x, if any.
std::optional<unsigned> unit_power_with_x(const PellContext& ctx, const mpz_class& target_x,
                                          unsigned max_power = 8);

}  // namespace trimult
