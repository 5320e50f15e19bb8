#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "trimult/nonsquare.hpp"
#include "trimult/square.hpp"

namespace trimult {

enum class OutputFormat { markdown, csv, json, bfile };

std::optional<OutputFormat> parse_format(std::string_view s);
std::optional<SequenceKind> parse_kind(std::string_view s);
const char* kind_name(SequenceKind kind);  // "t", "xi", "Tt", "Txi"

// Generic text table rendered to markdown or csv.
struct TextTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string to_markdown(const TextTable& t);
std::string to_csv(const TextTable& t);

// OEIS b-file: "index value" lines, index from 0, optional "# Axxxxxx" header.
std::string bfile_text(const std::vector<mpz_class>& values,
                       const std::optional<std::string>& label);

// OEIS id for the six catalogued multipliers, nullopt otherwise.
std::optional<std::string> oeis_label(const mpz_class& k, SequenceKind kind);

// Table assembly. Column order mirrors the reference tables.
TextTable solve_table(const std::vector<SolutionPair>& pairs);
TextTable rank_table_text(const std::vector<RankRow>& rows);
TextTable square_scan_table(const std::vector<SquareScanRow>& rows);
TextTable square_family_table(const SquareFamily& fam);

// Four recurrence lines with seeds, e.g.
// $t_n=10t_{n-2}-t_{n-4}+4$, t_n=0,1,3,14
std::string recurrences_block(const RankProfile& p);

// JSON with every integer as a decimal string (values exceed 64-bit range).
nlohmann::ordered_json solve_json(const mpz_class& k, const RankProfile& p,
                                  const std::vector<SolutionPair>& pairs);
nlohmann::ordered_json solve_json_square(const mpz_class& k, const SolutionPair& pair);
nlohmann::ordered_json rank_json(const std::vector<RankRow>& rows);
nlohmann::ordered_json verify_json(const mpz_class& k_max, std::size_t terms,
                                   const std::vector<VerificationReport>& reports);

}  // namespace trimult
