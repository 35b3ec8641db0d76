#include "fondskit/schema.hpp"

#include <algorithm>

#include "fondskit/csv.hpp"
#include "fondskit/errors.hpp"

namespace fondskit {

const char *to_string(ColumnKind kind) {
    switch (kind) {
    case ColumnKind::text: return "text";
    case ColumnKind::date: return "date";
    case ColumnKind::signature: return "signature";
    case ColumnKind::signature_list: return "signature_list";
    case ColumnKind::person_ref: return "person_ref";
    case ColumnKind::place: return "place";
    case ColumnKind::language: return "language";
    }
    return "text";
}

ColumnKind parse_column_kind(std::string_view text) {
    if (text == "text") return ColumnKind::text;
    if (text == "date") return ColumnKind::date;
    if (text == "signature") return ColumnKind::signature;
    if (text == "signature_list") return ColumnKind::signature_list;
    if (text == "person_ref") return ColumnKind::person_ref;
    if (text == "place") return ColumnKind::place;
    if (text == "language") return ColumnKind::language;
    throw SchemaMismatch("unknown column kind \"" + std::string(text) + "\"");
}

const std::vector<Column> &ColumnSchema::core_columns() {
    static const std::vector<Column> core = {
        { "signature", ColumnKind::signature, true },
        { "title", ColumnKind::text, false },
        { "form", ColumnKind::text, false },
        { "doc_type", ColumnKind::text, false },
        { "nature", ColumnKind::text, false },
        { "date", ColumnKind::date, false },
        { "place", ColumnKind::place, false },
        { "place_country", ColumnKind::text, false },
        { "language", ColumnKind::language, false },
        { "creator", ColumnKind::person_ref, false },
        { "sender", ColumnKind::person_ref, false },
        { "recipient", ColumnKind::person_ref, false },
        { "sending_place", ColumnKind::place, false },
        { "sending_place_country", ColumnKind::text, false },
        { "genetic_dossier", ColumnKind::text, false },
        { "genetic_state", ColumnKind::text, false },
        { "genetic_relations", ColumnKind::signature_list, false },
        { "localizacion", ColumnKind::text, false },
        { "description", ColumnKind::text, false },
        { "rights", ColumnKind::text, false },
    };
    return core;
}

ColumnSchema::ColumnSchema() : columns_(core_columns()) {}

ColumnSchema ColumnSchema::from_csv(std::string_view csv_text) {
    ColumnSchema schema;
    if (csv_text.empty())
        return schema;
    const csv::Table table = csv::parse(csv_text);
    if (table.header != csv::Row{ "name", "kind", "required" })
        throw SchemaMismatch("schema file must have header name,kind,required");
    for (const csv::Row &row : table.rows) {
        bool required = false;
        if (row[2] == "true" || row[2] == "1")
            required = true;
        else if (!(row[2] == "false" || row[2] == "0" || row[2].empty()))
            throw SchemaMismatch("bad required flag \"" + row[2] + "\" for column " + row[0]);
        schema.add_extension({ row[0], parse_column_kind(row[1]), required });
    }
    return schema;
}

std::string ColumnSchema::extensions_csv() const {
    csv::Table table;
    table.header = { "name", "kind", "required" };
    for (const Column &column : columns_) {
        if (is_extension(column.name))
            table.rows.push_back({ column.name, to_string(column.kind), column.required ? "true" : "false" });
    }
    return csv::render(table);
}

void ColumnSchema::add_extension(const Column &column) {
    if (column.name.empty())
        throw SchemaMismatch("extension column with empty name");
    if (find(column.name) != nullptr)
        throw SchemaMismatch("column \"" + column.name + "\" declared twice");
    columns_.push_back(column);
}

const Column *ColumnSchema::find(std::string_view name) const {
    const auto it = std::find_if(columns_.begin(), columns_.end(), [&](const Column &c) { return c.name == name; });
    return it == columns_.end() ? nullptr : &*it;
}

std::optional<std::size_t> ColumnSchema::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i].name == name)
            return i;
    }
    return std::nullopt;
}

bool ColumnSchema::is_extension(std::string_view name) const {
    const auto &core = core_columns();
    return std::none_of(core.begin(), core.end(), [&](const Column &c) { return c.name == name; });
}

std::vector<std::string> ColumnSchema::header() const {
    std::vector<std::string> names;
    names.reserve(columns_.size());
    for (const Column &column : columns_)
        names.push_back(column.name);
    return names;
}

} // namespace fondskit
