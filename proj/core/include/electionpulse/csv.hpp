#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace electionpulse::csv {

using Row = std::vector<std::string>;

/// Quotes a field when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

/// Writes one RFC-4180 record terminated by CRLF.
void write_row(std::ostream& out, std::span<const std::string> fields);
void write_row(std::ostream& out, std::initializer_list<std::string_view> fields);

/// Reads all records. Accepts CRLF or LF terminators and quoted fields with
/// embedded separators, quotes and newlines. Throws IoError on an unterminated
/// quoted field.
std::vector<Row> read_all(std::istream& in);

/// Fixed-point rendering with a stable, locale-independent format.
std::string format_fixed(double value, int decimals);

}  // namespace electionpulse::csv
