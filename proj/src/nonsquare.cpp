#include "trimult/nonsquare.hpp"

#include <algorithm>
#include <exception>
#include <utility>

#include "trimult/integer_core.hpp"
#include "trimult/threads.hpp"

namespace trimult {

namespace {

std::string zs(const mpz_class& v) { return v.get_str(); }

}  // namespace

std::optional<SolutionPair> map_to_pair(const PellSolution& s) {
    if (s.x < 1 || s.y < 1) return std::nullopt;
    if (mpz_even_p(s.x.get_mpz_t()) || mpz_even_p(s.y.get_mpz_t())) return std::nullopt;
    return SolutionPair{(s.y - 1) / 2, (s.x - 1) / 2};
}

std::vector<SolutionPair> solution_sequence(const mpz_class& k, std::size_t n) {
    if (n == 0) return {};
    const PellContext ctx = pell_context(k);
    // Not every stream entry has odd coordinates (k=5 starts 1,1 then 4,2),
    // so over-request and grow until n of them survive the parity filter.
    for (std::size_t request = 2 * n + 4;; request *= 2) {
        std::vector<SolutionPair> out;
        out.reserve(n);
        for (const PellSolution& s : solution_stream(ctx, request)) {
            if (auto p = map_to_pair(s)) {
                out.push_back(std::move(*p));
                if (out.size() == n) return out;
            }
        }
    }
}

RankProfile detect_rank(const mpz_class& k, const std::vector<SolutionPair>& pairs) {
    const std::size_t len = pairs.size();
    // Demand at least 2r+1 corroborating indices past the seed window before
    // accepting r, so a short prefix cannot alias a larger true rank.
    const std::size_t max_r = len >= 5 ? (len - 1) / 4 : 0;
    for (std::size_t r = 1; r <= max_r; ++r) {
        const mpz_class kappa = pairs[r].t + pairs[r - 1].t;
        if (pairs[r].xi - pairs[r - 1].xi - 1 != kappa) continue;
        const mpz_class c1 = 2 * (kappa + 1);
        bool ok = true;
        for (std::size_t m = 2 * r; m < len && ok; ++m) {
            ok = pairs[m].t == c1 * pairs[m - r].t - pairs[m - 2 * r].t + kappa &&
                 pairs[m].xi == c1 * pairs[m - r].xi - pairs[m - 2 * r].xi + kappa;
        }
        if (!ok) continue;
        RankProfile p;
        p.k = k;
        p.rank = r;
        p.kappa = kappa;
        p.gamma = pairs[r - 1].t * pairs[r].t;
        p.seeds_t.reserve(2 * r);
        p.seeds_xi.reserve(2 * r);
        for (std::size_t i = 0; i < 2 * r; ++i) {
            p.seeds_t.push_back(pairs[i].t);
            p.seeds_xi.push_back(pairs[i].xi);
        }
        return p;
    }
    throw RankUndetermined("rank undetermined for k=" + k.get_str() + " from " +
                           std::to_string(len) + " solutions");
}

RankProfile rank_profile(const mpz_class& k) {
    for (std::size_t r_guess = 4;; r_guess *= 2) {
        const std::size_t prefix = std::max<std::size_t>(4 * r_guess + 1, 17);
        try {
            return detect_rank(k, solution_sequence(k, prefix));
        } catch (const RankUndetermined&) {
            if (r_guess >= 64) throw;
        }
    }
}

std::array<RecurrenceSpec, 4> recurrence_specs(const RankProfile& p) {
    const std::size_t order = 2 * p.rank;
    const mpz_class c1_index = 2 * (p.kappa + 1);
    const mpz_class c1_tri = 4 * (p.kappa + 1) * (p.kappa + 1) - 2;
    const mpz_class c3_tri = triangular(p.kappa) - p.gamma;
    return {{
        {SequenceKind::t, order, c1_index, -1, p.kappa},
        {SequenceKind::xi, order, c1_index, -1, p.kappa},
        {SequenceKind::Tt, order, c1_tri, -1, c3_tri},
        {SequenceKind::Txi, order, c1_tri, -1, p.k * c3_tri},
    }};
}

std::vector<mpz_class> extend(const RankProfile& p, SequenceKind kind, std::size_t n) {
    const RecurrenceSpec spec = recurrence_specs(p)[static_cast<std::size_t>(kind)];
    const bool tri = kind == SequenceKind::Tt || kind == SequenceKind::Txi;
    const std::vector<mpz_class>& seeds =
        (kind == SequenceKind::t || kind == SequenceKind::Tt) ? p.seeds_t : p.seeds_xi;

    std::vector<mpz_class> out;
    out.reserve(n);
    for (std::size_t i = 0; i < seeds.size() && out.size() < n; ++i)
        out.push_back(tri ? triangular(seeds[i]) : seeds[i]);
    const std::size_t r = p.rank;
    while (out.size() < n) {
        const std::size_t m = out.size();
        out.push_back(spec.c1 * out[m - r] + spec.c2 * out[m - 2 * r] + spec.c3);
    }
    return out;
}

bool VerificationReport::all_passed() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const IdentityResult& e) { return e.passed; });
}

VerificationReport verify_identities(const mpz_class& k, const RankProfile& p,
                                     const std::vector<SolutionPair>& pairs) {
    VerificationReport rep;
    rep.k = k;
    rep.rank = p.rank;
    rep.kappa = p.kappa;
    rep.gamma = p.gamma;

    const std::size_t len = pairs.size();
    const std::size_t r = p.rank;
    if (r < 1 || len < 2 * r + 1)
        throw std::invalid_argument("verify_identities needs at least 2r+1 solutions");
    std::vector<mpz_class> t(len), xi(len), Tt(len), Txi(len);
    for (std::size_t i = 0; i < len; ++i) {
        t[i] = pairs[i].t;
        xi[i] = pairs[i].xi;
        Tt[i] = triangular(t[i]);
        Txi[i] = triangular(xi[i]);
    }

    auto add = [&rep](char id, const char* name, std::size_t b, std::size_t e, bool passed,
                      std::string witness) {
        rep.entries.push_back({id, name, b, e, passed, std::move(witness)});
    };

    {  // quadratic window invariant on t, value gamma at every n
        bool ok = true;
        std::string w;
        for (std::size_t n = r; n < len && ok; ++n) {
            const mpz_class d = t[n] - t[n - r];
            const mpz_class lhs = p.kappa * (t[n] + 2 * t[n] * t[n - r] + t[n - r]) - d * d;
            if (lhs != p.gamma) {
                ok = false;
                w = "n=" + std::to_string(n) + ": " + zs(lhs) + " != " + zs(p.gamma);
            }
        }
        add('a', "t_window_invariant", r, len, ok, std::move(w));
    }

    {  // mirrored window invariant on xi, value xi_r (xi_{r-1} + 1)
        bool ok = true;
        std::string w;
        const mpz_class rhs = xi[r] * (xi[r - 1] + 1);
        for (std::size_t n = r; n < len && ok; ++n) {
            const mpz_class d = xi[n] - xi[n - r];
            const mpz_class lhs = d * d - p.kappa * (xi[n] + 2 * xi[n] * xi[n - r] + xi[n - r]);
            if (lhs != rhs) {
                ok = false;
                w = "n=" + std::to_string(n) + ": " + zs(lhs) + " != " + zs(rhs);
            }
        }
        add('b', "xi_window_invariant", r, len, ok, std::move(w));
    }

    {  // product of the r-step neighbors, all four sequences
        bool ok = true;
        std::string w;
        const std::size_t end = len > 2 * r ? len - r : r;
        for (std::size_t n = r; n < end && ok; ++n) {
            const char* strand = nullptr;
            if (t[n - r] * t[n + r] != (t[n] - t[r - 1]) * (t[n] - t[r]))
                strand = "t";
            else if (xi[n - r] * xi[n + r] != (xi[n] + 1 + xi[r - 1]) * (xi[n] - xi[r]))
                strand = "xi";
            else if (Tt[n - r] * Tt[n + r] != (Tt[n] - Tt[r - 1]) * (Tt[n] - Tt[r]))
                strand = "Tt";
            else if (Txi[n - r] * Txi[n + r] != (Txi[n] - Txi[r - 1]) * (Txi[n] - Txi[r]))
                strand = "Txi";
            if (strand) {
                ok = false;
                w = std::string(strand) + " product fails at n=" + std::to_string(n);
            }
        }
        add('c', "product_relations", r, end, ok, std::move(w));
    }

    {  // linear relation tying the seeds to t_{2r-1}
        const mpz_class lhs = (2 * t[r - 1] + 1) * (t[r] + t[r - 1]);
        const mpz_class rhs = t[2 * r - 1] - 2 * t[r - 1];
        const bool ok = lhs == rhs;
        add('d', "seed_linear_relation", 2 * r - 1, 2 * r, ok,
            ok ? "" : zs(lhs) + " != " + zs(rhs));
    }

    {  // cross-multiplied seed ratio, division free
        const mpz_class lhs = t[r] * (t[2 * r - 1] - t[r]);
        const mpz_class rhs = t[r - 1] * (t[2 * r] - t[r - 1]);
        const bool ok = lhs == rhs;
        add('e', "seed_ratio_relation", 2 * r - 1, 2 * r + 1, ok,
            ok ? "" : zs(lhs) + " != " + zs(rhs));
    }

    {  // kappa reappears at every multiple of the rank
        bool ok = true;
        std::string w;
        const std::size_t mu_max = (len - 1) / r;
        for (std::size_t mu = 1; mu <= mu_max && ok; ++mu) {
            const std::size_t n = mu * r;
            if (t[n] + t[n - 1] != xi[n] - xi[n - 1] - 1) {
                ok = false;
                w = "mu=" + std::to_string(mu);
            }
        }
        add('f', "kappa_at_rank_multiples", 1, mu_max + 1, ok, std::move(w));
    }

    {  // t_r / t_{r-1} pinned between (s+2)/s and (s+1)/(s-1), s = isqrt(k)
        const mpz_class s = isqrt(k);
        if (s < 2) {
            add('g', "seed_ratio_bounds", 0, 0, true, "");
        } else {
            const bool lower = (s + 2) * t[r - 1] < s * t[r];
            const bool upper = (s - 1) * t[r] <= (s + 1) * t[r - 1];
            const bool ok = lower && upper;
            add('g', "seed_ratio_bounds", r - 1, r + 1, ok,
                ok ? "" : "s=" + zs(s) + ", t_{r-1}=" + zs(t[r - 1]) + ", t_r=" + zs(t[r]));
        }
    }

    {  // defining Pell residual and strict growth of t
        bool ok = true;
        std::string w;
        const mpz_class rhs = 1 - k;
        for (std::size_t n = 0; n < len && ok; ++n) {
            const mpz_class a = 2 * xi[n] + 1;
            const mpz_class b = 2 * t[n] + 1;
            if (a * a - k * b * b != rhs) {
                ok = false;
                w = "residual breaks at n=" + std::to_string(n);
            } else if (n > 0 && t[n] <= t[n - 1]) {
                ok = false;
                w = "t not increasing at n=" + std::to_string(n);
            }
        }
        add('h', "pell_residual_and_monotonicity", 0, len, ok, std::move(w));
    }

    try {
        rep.kappa_unit_power = unit_power_with_x(pell_context(k), p.kappa + 1);
    } catch (const std::exception&) {
        rep.kappa_unit_power = std::nullopt;
    }
    return rep;
}

namespace {

std::vector<mpz_class> nonsquare_range(const mpz_class& k_min, const mpz_class& k_max) {
    std::vector<mpz_class> ks;
    mpz_class start = k_min < 2 ? mpz_class(2) : k_min;
    for (mpz_class k = start; k <= k_max; ++k)
        if (!is_perfect_square(k)) ks.push_back(k);
    return ks;
}

RankRow rank_row(const mpz_class& k) {
    RankRow row;
    row.k = k;
    try {
        row.profile = rank_profile(k);
    } catch (const RankUndetermined&) {
        row.profile = std::nullopt;
    }
    return row;
}

}  // namespace

std::vector<RankRow> rank_table_serial(const mpz_class& k_min, const mpz_class& k_max) {
    std::vector<RankRow> rows;
    for (const mpz_class& k : nonsquare_range(k_min, k_max)) rows.push_back(rank_row(k));
    return rows;
}

std::vector<RankRow> rank_table(const mpz_class& k_min, const mpz_class& k_max) {
    const std::vector<mpz_class> ks = nonsquare_range(k_min, k_max);
    std::vector<RankRow> rows(ks.size());
    std::exception_ptr eptr = nullptr;
    const long count = static_cast<long>(ks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
#endif
    for (long i = 0; i < count; ++i) {
        try {
            rows[static_cast<std::size_t>(i)] = rank_row(ks[static_cast<std::size_t>(i)]);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(trimult_rank_table_err)
#endif
            if (!eptr) eptr = std::current_exception();
        }
    }
    if (eptr) std::rethrow_exception(eptr);
    return rows;
}

std::vector<VerificationReport> verify_range(const mpz_class& k_max, std::size_t terms) {
    const std::vector<mpz_class> ks = nonsquare_range(2, k_max);
    std::vector<VerificationReport> reports(ks.size());
    std::exception_ptr eptr = nullptr;
    const long count = static_cast<long>(ks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
#endif
    for (long i = 0; i < count; ++i) {
        try {
            const std::size_t idx = static_cast<std::size_t>(i);
            const RankProfile p = rank_profile(ks[idx]);
            const std::size_t n = std::max(terms, 2 * p.rank + 1);
            reports[idx] = verify_identities(ks[idx], p, solution_sequence(ks[idx], n));
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(trimult_verify_range_err)
#endif
            if (!eptr) eptr = std::current_exception();
        }
    }
    if (eptr) std::rethrow_exception(eptr);
    return reports;
}

}  // namespace trimult
