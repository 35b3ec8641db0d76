#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fondskit {

enum class ColumnKind { text, date, signature, signature_list, person_ref, place, language };

const char *to_string(ColumnKind kind);
ColumnKind parse_column_kind(std::string_view text); // throws SchemaMismatch

struct Column {
    std::string name;
    ColumnKind kind = ColumnKind::text;
    bool required = false;

    bool operator==(const Column &) const = default;
};

/// Column layout of the records file: the fixed core columns first, then
/// any per-project extension columns declared in the sidecar schema CSV
/// (header `name,kind,required`). The schema is how the core stays small
/// while the full field list stays open-ended.
class ColumnSchema {
public:
    ColumnSchema(); // core columns only

    static const std::vector<Column> &core_columns();

    /// Parses the sidecar CSV declaring extension columns. Redeclaring a
    /// core column or declaring one twice is a SchemaMismatch.
    static ColumnSchema from_csv(std::string_view csv_text);

    /// Canonical sidecar rendering (extensions only; core is implicit).
    std::string extensions_csv() const;

    void add_extension(const Column &column); // throws SchemaMismatch on duplicates

    const std::vector<Column> &columns() const { return columns_; }
    const Column *find(std::string_view name) const;
    std::optional<std::size_t> index_of(std::string_view name) const;
    bool is_extension(std::string_view name) const;

    std::vector<std::string> header() const;

    bool operator==(const ColumnSchema &) const = default;

private:
    std::vector<Column> columns_;
};

} // namespace fondskit
