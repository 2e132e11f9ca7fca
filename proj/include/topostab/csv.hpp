#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace topostab::csv {

struct Record {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

// RFC 4180 reader: quoted fields may contain commas, doubled quotes and newlines.
// CRLF and LF line endings are accepted; blank lines are skipped.
std::vector<Record> read(std::istream& in);

// Quotes the field only when it contains a comma, quote, CR or LF.
std::string quote(std::string_view field);

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

// Whole-field decimal parse with surrounding spaces allowed; nullopt on anything else.
std::optional<double> parse_double(std::string_view text);

}  // namespace topostab::csv
