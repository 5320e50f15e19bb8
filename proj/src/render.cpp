#include "trimult/render.hpp"

#include <cstddef>
#include <utility>

#include "trimult/integer_core.hpp"

namespace trimult {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

ordered_json jz(const mpz_class& v) { return v.get_str(); }
ordered_json jz(std::size_t v) { return std::to_string(v); }

ordered_json jz_list(const std::vector<mpz_class>& vs) {
    ordered_json arr = ordered_json::array();
    for (const mpz_class& v : vs) arr.push_back(v.get_str());
    return arr;
}

std::string csv_list(const std::vector<mpz_class>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ',';
        out += vs[i].get_str();
    }
    return out;
}

// One recurrence line: formula in TeX-ish inline math, then the seed terms.
std::string recurrence_line(const RecurrenceSpec& spec, const std::vector<mpz_class>& seeds,
                            bool tri_seeds) {
    const bool tri = spec.kind == SequenceKind::Tt || spec.kind == SequenceKind::Txi;
    const char* base = (spec.kind == SequenceKind::t || spec.kind == SequenceKind::Tt)
                           ? "t"
                           : "\\xi";
    auto term = [&](std::size_t back) {
        std::string inner = base;
        inner += back == 0 ? std::string("_n") : "_{n-" + std::to_string(back) + "}";
        return tri ? "T_{" + inner + "}" : inner;
    };
    const std::size_t r = spec.order / 2;
    std::string line = "$" + term(0) + "=" + spec.c1.get_str() + term(r) + "-" + term(2 * r);
    if (spec.c3 != 0) line += "+" + spec.c3.get_str();
    line += "$, " + term(0) + "=";
    std::vector<mpz_class> shown;
    shown.reserve(seeds.size());
    for (const mpz_class& s : seeds) shown.push_back(tri_seeds ? triangular(s) : s);
    line += csv_list(shown);
    return line;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view s) {
    if (s == "md" || s == "markdown") return OutputFormat::markdown;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    if (s == "bfile") return OutputFormat::bfile;
    return std::nullopt;
}

std::optional<SequenceKind> parse_kind(std::string_view s) {
    if (s == "t") return SequenceKind::t;
    if (s == "xi") return SequenceKind::xi;
    if (s == "Tt") return SequenceKind::Tt;
    if (s == "Txi") return SequenceKind::Txi;
    return std::nullopt;
}

const char* kind_name(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::t: return "t";
        case SequenceKind::xi: return "xi";
        case SequenceKind::Tt: return "Tt";
        case SequenceKind::Txi: return "Txi";
    }
    return "?";
}

std::string to_markdown(const TextTable& t) {
    std::string out = "| " + join(t.header, " | ") + " |\n|";
    for (std::size_t i = 0; i < t.header.size(); ++i) out += " --- |";
    out += "\n";
    for (const auto& row : t.rows) out += "| " + join(row, " | ") + " |\n";
    return out;
}

std::string to_csv(const TextTable& t) {
    std::string out = join(t.header, ",") + "\n";
    for (const auto& row : t.rows) out += join(row, ",") + "\n";
    return out;
}

std::string bfile_text(const std::vector<mpz_class>& values,
                       const std::optional<std::string>& label) {
    std::string out;
    if (label) out += "# " + *label + "\n";
    for (std::size_t i = 0; i < values.size(); ++i)
        out += std::to_string(i) + " " + values[i].get_str() + "\n";
    return out;
}

std::optional<std::string> oeis_label(const mpz_class& k, SequenceKind kind) {
    static const struct {
        int k;
        const char* ids[4];  // t, xi, Tt, Txi
    } table[] = {
        {2, {"A053141", "A001652", "A075528", "A029549"}},
        {3, {"A061278", "A001571", "A076139", "A076140"}},
        {5, {"A077259", "A077262", "A077260", "A077261"}},
        {6, {"A077288", "A077291", "A077289", "A077290"}},
        {7, {"A077398", "A077401", "A077399", "A077400"}},
        {8, {"A336623", "A336625", "A336624", "A336626"}},
    };
    for (const auto& row : table)
        if (k == row.k) return std::string(row.ids[static_cast<std::size_t>(kind)]);
    return std::nullopt;
}

TextTable solve_table(const std::vector<SolutionPair>& pairs) {
    TextTable t;
    t.header = {"n", "t", "xi", "T_t", "T_xi"};
    for (std::size_t i = 0; i < pairs.size(); ++i)
        t.rows.push_back({std::to_string(i), pairs[i].t.get_str(), pairs[i].xi.get_str(),
                          triangular(pairs[i].t).get_str(), triangular(pairs[i].xi).get_str()});
    return t;
}

TextTable rank_table_text(const std::vector<RankRow>& rows) {
    TextTable t;
    t.header = {"k", "r", "t_{r-1}", "t_r", "kappa", "gamma"};
    for (const RankRow& row : rows) {
        if (row.profile) {
            const RankProfile& p = *row.profile;
            t.rows.push_back({p.k.get_str(), std::to_string(p.rank),
                              p.seeds_t[p.rank - 1].get_str(), p.seeds_t[p.rank].get_str(),
                              p.kappa.get_str(), p.gamma.get_str()});
        } else {
            t.rows.push_back({row.k.get_str(), "?", "?", "?", "?", "?"});
        }
    }
    return t;
}

TextTable square_scan_table(const std::vector<SquareScanRow>& rows) {
    TextTable t;
    t.header = {"lambda", "k", "t", "xi"};
    for (const SquareScanRow& row : rows)
        t.rows.push_back({row.lambda.get_str(), row.k.get_str(), row.t.get_str(),
                          row.xi.get_str()});
    return t;
}

TextTable square_family_table(const SquareFamily& fam) {
    TextTable t;
    t.header = {"n", "lambda_n", "k_n", "xi_n"};
    for (std::size_t i = 0; i < fam.lambdas.size(); ++i) {
        const mpz_class kn = fam.lambdas[i] * fam.lambdas[i];
        t.rows.push_back({std::to_string(i + 1), fam.lambdas[i].get_str(), kn.get_str(),
                          fam.xis[i].get_str()});
    }
    return t;
}

std::string recurrences_block(const RankProfile& p) {
    std::string out = "k=" + p.k.get_str() + ", r=" + std::to_string(p.rank) + "\n";
    for (const RecurrenceSpec& spec : recurrence_specs(p)) {
        const bool xi_side = spec.kind == SequenceKind::xi || spec.kind == SequenceKind::Txi;
        const bool tri = spec.kind == SequenceKind::Tt || spec.kind == SequenceKind::Txi;
        out += recurrence_line(spec, xi_side ? p.seeds_xi : p.seeds_t, tri) + "\n";
    }
    return out;
}

ordered_json solve_json(const mpz_class& k, const RankProfile& p,
                        const std::vector<SolutionPair>& pairs) {
    std::vector<mpz_class> t, xi, Tt, Txi;
    for (const SolutionPair& pr : pairs) {
        t.push_back(pr.t);
        xi.push_back(pr.xi);
        Tt.push_back(triangular(pr.t));
        Txi.push_back(triangular(pr.xi));
    }
    ordered_json j;
    j["k"] = jz(k);
    j["rank"] = jz(p.rank);
    j["kappa"] = jz(p.kappa);
    j["gamma"] = jz(p.gamma);
    j["sequences"] = {{"t", jz_list(t)},
                      {"xi", jz_list(xi)},
                      {"T_t", jz_list(Tt)},
                      {"T_xi", jz_list(Txi)}};
    return j;
}

ordered_json solve_json_square(const mpz_class& k, const SolutionPair& pair) {
    ordered_json j;
    j["k"] = jz(k);
    j["square"] = true;
    j["t"] = jz(pair.t);
    j["xi"] = jz(pair.xi);
    return j;
}

ordered_json rank_json(const std::vector<RankRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const RankRow& row : rows) {
        ordered_json j;
        j["k"] = jz(row.k);
        if (row.profile) {
            const RankProfile& p = *row.profile;
            j["rank"] = jz(p.rank);
            j["kappa"] = jz(p.kappa);
            j["gamma"] = jz(p.gamma);
            j["t_seeds"] = jz_list(p.seeds_t);
            j["xi_seeds"] = jz_list(p.seeds_xi);
        } else {
            j["rank"] = nullptr;
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

ordered_json verify_json(const mpz_class& k_max, std::size_t terms,
                         const std::vector<VerificationReport>& reports) {
    ordered_json j;
    j["k_max"] = jz(k_max);
    j["terms"] = jz(terms);
    bool all = true;
    ordered_json arr = ordered_json::array();
    for (const VerificationReport& rep : reports) {
        all = all && rep.all_passed();
        ordered_json r;
        r["k"] = jz(rep.k);
        r["rank"] = jz(rep.rank);
        r["kappa"] = jz(rep.kappa);
        r["gamma"] = jz(rep.gamma);
        if (rep.kappa_unit_power)
            r["kappa_plus_one_unit_power"] = jz(static_cast<std::size_t>(*rep.kappa_unit_power));
        else
            r["kappa_plus_one_unit_power"] = nullptr;
        ordered_json ids = ordered_json::array();
        for (const IdentityResult& e : rep.entries) {
            ordered_json ej;
            ej["id"] = std::string(1, e.id);
            ej["name"] = e.name;
            ej["n_begin"] = jz(e.n_begin);
            ej["n_end"] = jz(e.n_end);
            ej["passed"] = e.passed;
            if (!e.passed) ej["witness"] = e.witness;
            ids.push_back(std::move(ej));
        }
        r["identities"] = std::move(ids);
        arr.push_back(std::move(r));
    }
    j["all_passed"] = all;
    j["reports"] = std::move(arr);
    return j;
}

}  // namespace trimult
