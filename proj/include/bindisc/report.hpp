#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace bindisc {

/// (prime, exponent) pairs with strictly increasing primes; empty for 1.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

/// Trial-division factorization. Requires 1 <= n < 2^63.
Factorization factorize(std::uint64_t n);

/// ASCII rendering: "1", "1039", "2^3", "2*3*5", "2^3*3*5".
std::string format_factorization(const Factorization& f);

/// One maximal run [n_lo, n_hi] of equal values in a non-decreasing
/// sequence indexed from 1, with the shared value factorized.
struct TableRow {
    std::uint32_t n_lo = 0;
    std::uint32_t n_hi = 0;
    std::uint64_t value = 0;
    Factorization factorization;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Maximal runs of equal values. Requires a non-empty, non-decreasing
/// sequence of positive integers; a decreasing input is rejected since it
/// cannot be a discriminator sequence.
std::vector<TableRow> group_runs(std::span<const std::uint32_t> values);

enum class TableFormat { kMarkdown, kCsv };

/// Deterministic rendering, one row per run, trailing newline included.
std::string emit_table(const std::vector<TableRow>& rows, TableFormat format);

/// Raised on malformed table or b-file input; carries the 1-based line.
struct ParseError : std::runtime_error {
    ParseError(std::string message, std::size_t line_number);
    std::size_t line;
};

/// Inverse of emit_table(kCsv).
std::vector<TableRow> parse_table_csv(const std::string& text);

/// OEIS-style interchange list: one "index value" pair per line with
/// consecutive indices starting at `offset`.
struct BFile {
    long long offset = 0;
    std::vector<std::pair<long long, mpz_class>> entries;
};

std::string emit_bfile(std::span<const mpz_class> seq, long long offset);

/// Parses b-file text. Blank lines and '#' comment lines are ignored;
/// anything else must be exactly "index value" with consecutive indices.
BFile parse_bfile(const std::string& text);

struct BFileDiff {
    bool equal = false;
    std::optional<long long> first_mismatch_index;
    std::string description;
};

/// Reports the first index where the two b-files disagree, or equality.
BFileDiff compare_bfile(const std::string& text_a, const std::string& text_b);

}  // namespace bindisc
