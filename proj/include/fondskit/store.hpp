#pragma once

#include <string>
#include <vector>

#include "fondskit/csv.hpp"
#include "fondskit/model.hpp"

namespace fondskit {

/// The four text files that make up one fonds on disk. These are file
/// contents, not paths; path handling belongs to the callers.
struct FondsFiles {
    std::string records;
    std::string persons;
    std::string plan;
    std::string schema;

    bool operator==(const FondsFiles &) const = default;
};

/// Canonical cell renderings of one record, in schema column order.
csv::Row record_to_cells(const Record &record, const ColumnSchema &schema);

/// Parses one data row. Dates are accepted in any normalizable form;
/// signatures, genetic states and relation lists are strict. Typed
/// extension cells are validated but kept verbatim.
/// Throws CellParse with the 1-based data row number.
Record record_from_cells(const csv::Row &row, const ColumnSchema &schema, std::size_t row_no);

csv::Row person_to_cells(const Person &person);
Person person_from_cells(const csv::Row &row, std::size_t row_no);

extern const std::vector<std::string> kPersonsHeader;

/// Column names whose cell is nonempty, in schema order.
std::vector<std::string> populated_fields(const Record &record, const ColumnSchema &schema);

/// Reads the canonical CSV single source. Headers must match the schema
/// exactly (SchemaMismatch); cells parse per column kind (CellParse).
Fonds read_fonds(const FondsFiles &files, const FondsCode &code);

/// Deterministic rendering: records in sort_key order, persons by id, plan
/// depth-first, RFC 4180 quoting, LF, UTF-8 without BOM.
/// read_fonds(write_fonds(f)) == f for every valid fonds.
FondsFiles write_fonds(const Fonds &fonds);

struct FieldChange {
    std::string signature;
    std::string field;
    std::string before;
    std::string after;

    bool operator==(const FieldChange &) const = default;
};

/// Curation support: what changed between two loads of the same fonds.
struct DiffReport {
    std::vector<std::string> added;   // formatted signatures only in b
    std::vector<std::string> removed; // formatted signatures only in a
    std::vector<FieldChange> changed;

    bool empty() const { return added.empty() && removed.empty() && changed.empty(); }
    bool operator==(const DiffReport &) const = default;
};

/// Throws FondsMismatch when the codes differ.
DiffReport diff_fonds(const Fonds &a, const Fonds &b);

} // namespace fondskit
