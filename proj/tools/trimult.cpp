#include <algorithm>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "trimult/integer_core.hpp"
#include "trimult/nonsquare.hpp"
#include "trimult/oracle.hpp"
#include "trimult/pell.hpp"
#include "trimult/render.hpp"
#include "trimult/square.hpp"

namespace {

mpz_class parse_mpz(const std::string& s) {
    try {
        return mpz_class(s);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("not an integer: " + s);
    }
}

trimult::OutputFormat parse_format_or_throw(const std::string& s, bool allow_bfile) {
    const auto fmt = trimult::parse_format(s);
    if (!fmt) throw std::domain_error("unknown format: " + s);
    if (*fmt == trimult::OutputFormat::bfile && !allow_bfile)
        throw std::domain_error("bfile output is only available from the oeis subcommand");
    return *fmt;
}

void emit_table(const trimult::TextTable& table, trimult::OutputFormat fmt) {
    std::cout << (fmt == trimult::OutputFormat::csv ? trimult::to_csv(table)
                                                    : trimult::to_markdown(table));
}

int run_solve(const std::string& k_str, std::size_t count, const std::string& format) {
    const auto fmt = parse_format_or_throw(format, false);
    const mpz_class k = parse_mpz(k_str);
    if (k < 2) throw std::domain_error("k must be >= 2, got " + k.get_str());

    std::vector<trimult::SolutionPair> pairs;
    if (trimult::is_perfect_square(k)) {
        const auto extra = trimult::solve_square_k(k);
        if (!extra)
            throw std::domain_error("square k=" + k.get_str() +
                                    " admits only the trivial pair t=0, xi=0");
        pairs.push_back({0, 0});
        if (count >= 2) pairs.push_back(*extra);
        if (fmt == trimult::OutputFormat::json) {
            std::cout << trimult::solve_json_square(k, *extra).dump(2) << "\n";
            return 0;
        }
    } else {
        pairs = trimult::solution_sequence(k, count);
        if (fmt == trimult::OutputFormat::json) {
            const trimult::RankProfile p = trimult::rank_profile(k);
            std::cout << trimult::solve_json(k, p, pairs).dump(2) << "\n";
            return 0;
        }
    }
    for (const trimult::SolutionPair& pr : pairs)
        if (trimult::triangular(pr.xi) != k * trimult::triangular(pr.t))
            throw std::logic_error("emitted pair fails T_xi = k T_t at t=" + pr.t.get_str());
    emit_table(trimult::solve_table(pairs), fmt);
    return 0;
}

int run_rank(const std::string& from_str, const std::string& to_str, const std::string& format) {
    const auto fmt = parse_format_or_throw(format, false);
    const mpz_class from = parse_mpz(from_str);
    const mpz_class to = parse_mpz(to_str);
    const auto rows = trimult::rank_table(from, to);
    if (fmt == trimult::OutputFormat::json)
        std::cout << trimult::rank_json(rows).dump(2) << "\n";
    else
        emit_table(trimult::rank_table_text(rows), fmt);
    return 0;
}

int run_recurrences(const std::string& k_str) {
    const mpz_class k = parse_mpz(k_str);
    if (k < 2) throw std::domain_error("k must be >= 2, got " + k.get_str());
    if (trimult::is_perfect_square(k))
        throw std::domain_error("square k=" + k.get_str() +
                                " has no recurrent solution family");
    std::cout << trimult::recurrences_block(trimult::rank_profile(k));
    return 0;
}

int run_verify(const std::string& kmax_str, std::size_t terms, bool corrupt) {
    const mpz_class kmax = parse_mpz(kmax_str);
    std::vector<trimult::VerificationReport> reports;
    if (corrupt) {
        for (mpz_class k = 2; k <= kmax; ++k) {
            if (trimult::is_perfect_square(k)) continue;
            const trimult::RankProfile p = trimult::rank_profile(k);
            auto pairs = trimult::solution_sequence(k, std::max(terms, 2 * p.rank + 1));
            if (pairs.size() > 1) pairs[1].xi += 1;
            reports.push_back(trimult::verify_identities(k, p, pairs));
        }
    } else {
        reports = trimult::verify_range(kmax, terms);
    }
    std::cout << trimult::verify_json(kmax, terms, reports).dump(2) << "\n";
    bool all = true;
    for (const trimult::VerificationReport& rep : reports) {
        for (const trimult::IdentityResult& e : rep.entries) {
            if (e.passed) continue;
            all = false;
            std::cerr << "identity " << e.id << " (" << e.name << ") failed for k="
                      << rep.k.get_str() << ": " << e.witness << "\n";
        }
    }
    return all ? 0 : 1;
}

int run_square_scan(const std::string& kmax_str) {
    const mpz_class kmax = parse_mpz(kmax_str);
    emit_table(trimult::square_scan_table(trimult::scan_square_k(kmax)),
               trimult::OutputFormat::markdown);
    return 0;
}

int run_square_family(const std::string& t_str, std::size_t count) {
    const mpz_class t = parse_mpz(t_str);
    emit_table(trimult::square_family_table(trimult::square_family(t, count)),
               trimult::OutputFormat::markdown);
    return 0;
}

int run_oeis(const std::string& k_str, const std::string& kind_str, std::size_t count) {
    const mpz_class k = parse_mpz(k_str);
    if (k < 2) throw std::domain_error("k must be >= 2, got " + k.get_str());
    if (trimult::is_perfect_square(k))
        throw std::domain_error("square k=" + k.get_str() + " has no sequence to export");
    const auto kind = trimult::parse_kind(kind_str);
    if (!kind) throw std::domain_error("unknown kind: " + kind_str + " (want t|xi|Tt|Txi)");
    const trimult::RankProfile p = trimult::rank_profile(k);
    const auto values = trimult::extend(p, *kind, count);
    std::cout << trimult::bfile_text(values, trimult::oeis_label(k, *kind));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solutions of T_xi = k T_t over triangular numbers"};
    app.require_subcommand(1);

    std::string k_str, from_str, to_str, kmax_str, t_str, kind_str;
    std::string format = "md";
    std::size_t count = 0, terms = 0;
    bool corrupt = false;

    CLI::App* solve = app.add_subcommand("solve", "list the first solutions for one k");
    solve->add_option("--k", k_str, "multiplier k >= 2")->required();
    solve->add_option("--count", count, "number of solutions")->required()
        ->check(CLI::PositiveNumber);
    solve->add_option("--format", format, "md, csv or json");

    CLI::App* rank = app.add_subcommand("rank", "rank table over a k range");
    rank->add_option("--from", from_str, "first k")->required();
    rank->add_option("--to", to_str, "last k")->required();
    rank->add_option("--format", format, "md, csv or json");

    CLI::App* rec = app.add_subcommand("recurrences", "recurrences with seeds for one k");
    rec->add_option("--k", k_str, "non-square multiplier k >= 2")->required();

    CLI::App* verify = app.add_subcommand("verify", "check every identity for all k <= kmax");
    verify->add_option("--kmax", kmax_str, "largest k")->required();
    verify->add_option("--terms", terms, "solutions per k")->required()
        ->check(CLI::PositiveNumber);
    verify->add_flag("--corrupt-seed", corrupt)->group("");  // fault injection hook

    CLI::App* square = app.add_subcommand("square", "square k = lambda^2 families");
    square->require_subcommand(1);
    CLI::App* scan = square->add_subcommand("scan", "all square k <= kmax with a solution");
    scan->add_option("--kmax", kmax_str, "largest k")->required();
    CLI::App* family = square->add_subcommand("family", "(k_n, xi_n) family for a base t");
    family->add_option("--t", t_str, "base index t >= 1")->required();
    family->add_option("--count", count, "number of members")->required()
        ->check(CLI::PositiveNumber);

    CLI::App* oeis = app.add_subcommand("oeis", "b-file export of one sequence");
    oeis->add_option("--k", k_str, "non-square multiplier k >= 2")->required();
    oeis->add_option("--kind", kind_str, "t, xi, Tt or Txi")->required();
    oeis->add_option("--count", count, "number of terms")->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return run_solve(k_str, count, format);
        if (rank->parsed()) return run_rank(from_str, to_str, format);
        if (rec->parsed()) return run_recurrences(k_str);
        if (verify->parsed()) return run_verify(kmax_str, terms, corrupt);
        if (square->parsed()) {
            if (scan->parsed()) return run_square_scan(kmax_str);
            if (family->parsed()) return run_square_family(t_str, count);
        }
        if (oeis->parsed()) return run_oeis(k_str, kind_str, count);
    } catch (const trimult::RankUndetermined& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
