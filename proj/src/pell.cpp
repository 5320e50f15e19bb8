#include "trimult/pell.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "trimult/integer_core.hpp"

namespace trimult {

namespace {

void require_nonsquare(const mpz_class& k) {
    if (k < 2) throw std::domain_error("k must be >= 2, got " + k.get_str());
    if (is_perfect_square(k))
        throw std::domain_error("k must be non-square, got " + k.get_str());
}

}  // namespace

ContinuedFraction cf_sqrt(const mpz_class& k) {
    require_nonsquare(k);
    ContinuedFraction cf;
    cf.a0 = isqrt(k);
    // (P, Q) partial-quotient state; for sqrt(k) the expansion is purely
    // periodic from index 1, so the period closes when the first state recurs.
    mpz_class P = cf.a0;
    mpz_class Q = k - cf.a0 * cf.a0;
    const mpz_class P1 = P, Q1 = Q;
    while (true) {
        const mpz_class a = (P + cf.a0) / Q;
        cf.period.push_back(a);
        P = a * Q - P;
        Q = (k - P * P) / Q;
        if (P == P1 && Q == Q1) break;
    }
    return cf;
}

PellUnit fundamental_unit(const mpz_class& k) {
    const ContinuedFraction cf = cf_sqrt(k);
    // Convergent of [a0; period[0..L-2]].
    mpz_class p_prev = 1, p = cf.a0;
    mpz_class q_prev = 0, q = 1;
    for (std::size_t i = 0; i + 1 < cf.period.size(); ++i) {
        const mpz_class& a = cf.period[i];
        mpz_class pn = a * p + p_prev;
        mpz_class qn = a * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(pn);
        q = std::move(qn);
    }
    const mpz_class residual = p * p - k * q * q;
    if (residual == 1) return {p, q};
    if (residual == -1) return {p * p + k * q * q, 2 * p * q};
    throw std::logic_error("CF convergent residual is not +-1 for k=" + k.get_str());
}

std::vector<PellSolution> class_representatives(const mpz_class& k) {
    require_nonsquare(k);
    const PellUnit u = fundamental_unit(k);
    // Classical search bound for the right-hand side 1-k, widened a little;
    // completeness is pinned down by oracle equivalence, not by tightness.
    const mpz_class num = u.y * u.y * (k - 1);
    const mpz_class den = 2 * (u.x - 1);
    const mpz_class bound = isqrt(num / den) + 2;

    std::vector<PellSolution> reps;
    const mpz_class rhs = 1 - k;
    for (mpz_class y = 0; y <= bound; ++y) {
        const mpz_class x2 = k * y * y + rhs;
        if (x2 >= 0 && is_perfect_square(x2)) reps.push_back({isqrt(x2), y});
    }
    return reps;  // ascending in y by construction
}

PellContext pell_context(const mpz_class& k) {
    PellContext ctx;
    ctx.k = k;
    ctx.cf = cf_sqrt(k);
    ctx.unit = fundamental_unit(k);
    ctx.class_reps = class_representatives(k);
    return ctx;
}

std::vector<PellSolution> solution_stream(const PellContext& ctx, std::size_t count) {
    const mpz_class& k = ctx.k;
    const mpz_class& x1 = ctx.unit.x;
    const mpz_class& y1 = ctx.unit.y;
    const mpz_class rhs = 1 - k;

    // Each signed representative spawns one branch; composing with the unit
    // grows y geometrically, so count+2 steps per branch cover the merge.
    std::set<std::pair<mpz_class, mpz_class>> seen;  // (y, |x|)
    for (const PellSolution& rep : ctx.class_reps) {
        for (int sign = 0; sign < 2; ++sign) {
            if (sign == 1 && rep.x == 0) break;
            mpz_class x = sign ? mpz_class(-rep.x) : rep.x;
            mpz_class y = rep.y;
            for (std::size_t step = 0; step < count + 2; ++step) {
                if (y >= 1 && (x >= 1 || x <= -1)) seen.emplace(y, abs(x));
                mpz_class xn = x * x1 + k * y * y1;
                mpz_class yn = x * y1 + y * x1;
                x = std::move(xn);
                y = std::move(yn);
            }
        }
    }

    std::vector<PellSolution> out;
    out.reserve(count);
    for (const auto& [y, x] : seen) {
        if (out.size() == count) break;
        if (x * x - k * y * y != rhs)
            throw std::logic_error("stream produced a non-solution for k=" + k.get_str());
        out.push_back({x, y});
    }
    return out;
}

std::optional<unsigned> unit_power_with_x(const PellContext& ctx, const mpz_class& target_x,
                                          unsigned max_power) {
    mpz_class x = ctx.unit.x, y = ctx.unit.y;
    for (unsigned m = 1; m <= max_power; ++m) {
        if (x == target_x) return m;
        mpz_class xn = x * ctx.unit.x + ctx.k * y * ctx.unit.y;
        mpz_class yn = x * ctx.unit.y + y * ctx.unit.x;
        x = std::move(xn);
        y = std::move(yn);
    }
    return std::nullopt;
}

}  // namespace trimult
