#include "fondskit/csv.hpp"

#include "fondskit/errors.hpp"

namespace fondskit::csv {

namespace {

bool needs_quoting(std::string_view field) {
    return field.find_first_of(",\"\r\n") != std::string_view::npos;
}

} // namespace

Table parse(std::string_view text) {
    if (text.substr(0, 3) == "\xEF\xBB\xBF")
        text.remove_prefix(3);

    Table table;
    Row current;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    std::size_t row_no = 1;

    auto end_field = [&] {
        current.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
    };
    auto end_row = [&] {
        end_field();
        if (table.header.empty() && table.rows.empty())
            table.header = std::move(current);
        else if (current.size() != table.header.size())
            throw CsvSyntax(row_no, current.size(),
                            "expected " + std::to_string(table.header.size()) + " fields, got "
                                + std::to_string(current.size()));
        else
            table.rows.push_back(std::move(current));
        current.clear();
    };

    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < n && text[i + 1] == '"') {
                    field += '"';
                    i += 2;
                } else {
                    in_quotes = false;
                    ++i;
                }
            } else {
                field += c;
                ++i;
            }
        } else if (c == '"') {
            if (!field.empty() || field_was_quoted)
                throw CsvSyntax(row_no, current.size() + 1, "unexpected quote inside unquoted field");
            in_quotes = true;
            field_was_quoted = true;
            ++i;
        } else if (c == ',') {
            end_field();
            ++i;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < n && text[i + 1] == '\n')
                ++i;
            ++i;
            end_row();
            ++row_no;
        } else {
            if (field_was_quoted)
                throw CsvSyntax(row_no, current.size() + 1, "data after closing quote");
            field += c;
            ++i;
        }
    }
    if (in_quotes)
        throw CsvSyntax(row_no, current.size() + 1, "unterminated quoted field");
    // final row without a trailing newline
    if (!field.empty() || field_was_quoted || !current.empty())
        end_row();

    if (table.header.empty())
        throw CsvSyntax(1, 1, "missing header row");
    return table;
}

std::string escape_field(std::string_view field) {
    if (!needs_quoting(field))
        return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out += '"';
    for (const char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

void render_row(std::string &out, const Row &row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0)
            out += ',';
        out += escape_field(row[i]);
    }
    out += '\n';
}

} // namespace

std::string render(const Table &table) {
    std::string out;
    render_row(out, table.header);
    for (const Row &row : table.rows)
        render_row(out, row);
    return out;
}

std::vector<std::string> split_list(std::string_view cell) {
    std::vector<std::string> items;
    if (cell.empty())
        return items;
    std::size_t start = 0;
    while (true) {
        const std::size_t sep = cell.find(';', start);
        if (sep == std::string_view::npos) {
            items.emplace_back(cell.substr(start));
            return items;
        }
        items.emplace_back(cell.substr(start, sep - start));
        start = sep + 1;
    }
}

std::string join_list(const std::vector<std::string> &items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0)
            out += ';';
        out += items[i];
    }
    return out;
}

} // namespace fondskit::csv
