#include "bindisc/report.hpp"

#include <charconv>
#include <sstream>

namespace bindisc {

Factorization factorize(std::uint64_t n) {
    if (n < 1 || n >= (std::uint64_t{1} << 63))
        throw std::invalid_argument("factorize: requires 1 <= n < 2^63");
    Factorization out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::string format_factorization(const Factorization& f) {
    if (f.empty()) return "1";
    std::string out;
    for (const auto& [prime, exponent] : f) {
        if (!out.empty()) out += '*';
        out += std::to_string(prime);
        if (exponent > 1) {
            out += '^';
            out += std::to_string(exponent);
        }
    }
    return out;
}

std::vector<TableRow> group_runs(std::span<const std::uint32_t> values) {
    if (values.empty()) throw std::invalid_argument("group_runs: empty input");
    std::vector<TableRow> rows;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 1) throw std::invalid_argument("group_runs: values must be positive");
        if (i > 0 && values[i] < values[i - 1])
            throw std::invalid_argument("group_runs: input must be non-decreasing");
        if (!rows.empty() && rows.back().value == values[i]) {
            rows.back().n_hi = static_cast<std::uint32_t>(i + 1);
        } else {
            rows.push_back(TableRow{static_cast<std::uint32_t>(i + 1),
                                    static_cast<std::uint32_t>(i + 1), values[i],
                                    factorize(values[i])});
        }
    }
    return rows;
}

std::string emit_table(const std::vector<TableRow>& rows, TableFormat format) {
    std::string out;
    if (format == TableFormat::kCsv) {
        out = "n_lo,n_hi,value\n";
        for (const auto& row : rows) {
            out += std::to_string(row.n_lo);
            out += ',';
            out += std::to_string(row.n_hi);
            out += ',';
            out += format_factorization(row.factorization);
            out += '\n';
        }
    } else {
        out = "| n | D(n) |\n| --- | --- |\n";
        for (const auto& row : rows) {
            out += "| ";
            out += std::to_string(row.n_lo);
            if (row.n_hi != row.n_lo) {
                out += '-';
                out += std::to_string(row.n_hi);
            }
            out += " | ";
            out += format_factorization(row.factorization);
            out += " |\n";
        }
    }
    return out;
}

ParseError::ParseError(std::string message, std::size_t line_number)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + std::move(message)),
      line(line_number) {}

namespace {

bool parse_u64(std::string_view token, std::uint64_t& out) {
    const char* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

// "2^3*3*5" -> factorization; validates shape, not primality.
Factorization parse_factorization(std::string_view text, std::size_t line_number) {
    Factorization out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t star = text.find('*', pos);
        std::string_view part = text.substr(pos, star == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : star - pos);
        std::uint64_t prime = 0, exponent = 1;
        if (const std::size_t caret = part.find('^'); caret != std::string_view::npos) {
            if (!parse_u64(part.substr(0, caret), prime) ||
                !parse_u64(part.substr(caret + 1), exponent) || exponent < 2)
                throw ParseError("malformed factor '" + std::string(part) + "'", line_number);
        } else if (!parse_u64(part, prime)) {
            throw ParseError("malformed factor '" + std::string(part) + "'", line_number);
        }
        if (prime < 2) {
            if (prime == 1 && text == "1") return {};
            throw ParseError("malformed factor '" + std::string(part) + "'", line_number);
        }
        out.emplace_back(prime, static_cast<unsigned>(exponent));
        if (star == std::string_view::npos) break;
        pos = star + 1;
    }
    if (out.empty()) throw ParseError("empty value field", line_number);
    return out;
}

std::uint64_t factorization_value(const Factorization& f) {
    std::uint64_t value = 1;
    for (const auto& [prime, exponent] : f)
        for (unsigned i = 0; i < exponent; ++i) value *= prime;
    return value;
}

}  // namespace

std::vector<TableRow> parse_table_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<TableRow> rows;
    std::size_t line_number = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != "n_lo,n_hi,value") throw ParseError("missing csv header", line_number);
            saw_header = true;
            continue;
        }
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                                       : line.find(',', c1 + 1);
        if (c2 == std::string::npos) throw ParseError("expected 3 fields", line_number);
        std::uint64_t lo = 0, hi = 0;
        if (!parse_u64(std::string_view(line).substr(0, c1), lo) ||
            !parse_u64(std::string_view(line).substr(c1 + 1, c2 - c1 - 1), hi))
            throw ParseError("malformed run bounds", line_number);
        TableRow row;
        row.n_lo = static_cast<std::uint32_t>(lo);
        row.n_hi = static_cast<std::uint32_t>(hi);
        row.factorization = parse_factorization(std::string_view(line).substr(c2 + 1),
                                                line_number);
        row.value = factorization_value(row.factorization);
        rows.push_back(std::move(row));
    }
    if (!saw_header) throw ParseError("missing csv header", line_number + 1);
    return rows;
}

std::string emit_bfile(std::span<const mpz_class> seq, long long offset) {
    std::string out;
    long long index = offset;
    for (const auto& value : seq) {
        out += std::to_string(index++);
        out += ' ';
        out += value.get_str();
        out += '\n';
    }
    return out;
}

BFile parse_bfile(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    BFile out;
    std::size_t line_number = 0;
    bool first_entry = true;
    while (std::getline(in, line)) {
        ++line_number;
        const std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        std::string index_token, value_token, extra;
        if (!(fields >> index_token >> value_token) || (fields >> extra))
            throw ParseError("expected 'index value'", line_number);
        long long index = 0;
        {
            const char* end = index_token.data() + index_token.size();
            const auto [ptr, ec] = std::from_chars(index_token.data(), end, index);
            if (ec != std::errc{} || ptr != end)
                throw ParseError("malformed index '" + index_token + "'", line_number);
        }
        mpz_class value;
        if (value.set_str(value_token, 10) != 0)
            throw ParseError("malformed value '" + value_token + "'", line_number);
        if (first_entry) {
            out.offset = index;
            first_entry = false;
        } else if (index != out.entries.back().first + 1) {
            throw ParseError("non-consecutive index " + std::to_string(index), line_number);
        }
        out.entries.emplace_back(index, std::move(value));
    }
    return out;
}

BFileDiff compare_bfile(const std::string& text_a, const std::string& text_b) {
    const BFile a = parse_bfile(text_a);
    const BFile b = parse_bfile(text_b);
    BFileDiff diff;
    if (!a.entries.empty() && !b.entries.empty() && a.offset != b.offset) {
        diff.first_mismatch_index = std::min(a.offset, b.offset);
        diff.description = "offsets differ: " + std::to_string(a.offset) + " vs " +
                           std::to_string(b.offset);
        return diff;
    }
    const std::size_t common = std::min(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (a.entries[i].second != b.entries[i].second) {
            diff.first_mismatch_index = a.entries[i].first;
            diff.description = "values differ at index " + std::to_string(a.entries[i].first) +
                               ": " + a.entries[i].second.get_str() + " vs " +
                               b.entries[i].second.get_str();
            return diff;
        }
    }
    if (a.entries.size() != b.entries.size()) {
        const BFile& longer = a.entries.size() > b.entries.size() ? a : b;
        diff.first_mismatch_index = longer.entries[common].first;
        diff.description = "entry counts differ: " + std::to_string(a.entries.size()) + " vs " +
                           std::to_string(b.entries.size());
        return diff;
    }
    diff.equal = true;
    diff.description = "equal";
    return diff;
}

}  // namespace bindisc
