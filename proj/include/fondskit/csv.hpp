#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fondskit::csv {

using Row = std::vector<std::string>;

/// A parsed CSV file: one header row plus zero or more data rows,
/// all with the same field count.
struct Table {
    Row header;
    std::vector<Row> rows;

    bool operator==(const Table &) const = default;
};

/// RFC 4180 parser. Accepts LF and CRLF row endings and a UTF-8 BOM;
/// quoted fields may contain separators, quotes ("") and newlines.
/// Throws CsvSyntax on stray or unterminated quotes and on rows whose
/// field count differs from the header's.
Table parse(std::string_view text);

/// Renders with LF line endings, no BOM, and minimal quoting (a field is
/// quoted only when it contains a comma, a quote or a newline).
std::string render(const Table &table);

std::string escape_field(std::string_view field);

/// Splits a multi-valued cell on ';'. Empty cell yields an empty list.
std::vector<std::string> split_list(std::string_view cell);
std::string join_list(const std::vector<std::string> &items);

} // namespace fondskit::csv
