#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fondskit/finding.hpp"
#include "fondskit/model.hpp"
#include "fondskit/schema.hpp"

namespace fondskit {

/// Project gazetteer: alias -> (canonical place name, country). Lookups are
/// case- and whitespace-insensitive; canonical names resolve to themselves.
class Gazetteer {
public:
    Gazetteer() = default;
    /// CSV with header `alias,canonical,country`.
    static Gazetteer from_csv(std::string_view csv_text);

    void add(std::string_view alias, const PlaceRef &place);
    const PlaceRef *lookup(std::string_view raw) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::string, PlaceRef> entries_; // folded alias -> place
};

/// Person aliases plus the registry ids they resolve to.
class AliasTable {
public:
    AliasTable() = default;
    /// CSV with header `alias,person_id`.
    static AliasTable from_csv(std::string_view csv_text);
    /// Registers every canonical name and alias from the registry itself.
    void add_persons(const std::vector<Person> &persons);

    void add(std::string_view alias, std::string_view person_id);
    const std::string *person_id_for(std::string_view raw) const;
    bool is_person_id(std::string_view text) const { return person_ids_.contains(std::string(text)); }

private:
    std::map<std::string, std::string> aliases_; // folded alias -> person_id
    std::set<std::string> person_ids_;
};

struct LookupTables {
    Gazetteer gazetteer;
    AliasTable aliases;
};

enum class RuleId { date_iso, person_name, place, trim_case, country_code };

const char *to_string(RuleId rule);

struct NormalizationRule {
    RuleId rule;
    std::vector<std::string> columns;
};

/// The standard rule assignment: dates to date columns, person names to
/// person refs, places and their country columns paired, plain text
/// trimmed. Extension columns are covered through their declared kind.
std::vector<NormalizationRule> default_rules(const ColumnSchema &schema);

/// Accepts YYYY, YYYY-MM, YYYY-MM-DD, DD-MM-YYYY, DD/MM/YYYY and Spanish
/// long dates ("17 de agosto de 1923"); unknown parts become 0.
/// Throws UnparseableDate.
ArchiveDate normalize_date(std::string_view raw);

struct NameResult {
    std::string name;
    bool heuristic = false; // surname guessed from token order, low confidence
};

/// Canonical "Surname(s), Given" with collapsed whitespace. Outside an
/// alias table the Spanish convention applies: the final two tokens are the
/// surname. Throws EmptyName on blank input.
NameResult normalize_person_name(std::string_view raw);

struct PlaceResult {
    PlaceRef place;
    bool known = false; // false: passed through untouched, worth a warning
};

PlaceResult normalize_place(std::string_view raw, const Gazetteer &gazetteer);

/// Normalizes one raw CSV row in place of the archive's cleaning pass.
/// Returns the canonical row plus one finding per changed cell
/// (before/after filled); unfixable cells keep their value and yield an
/// error finding. Reapplication returns the same row and no findings.
std::pair<csv::Row, std::vector<Finding>> normalize_row(const csv::Row &row, const ColumnSchema &schema,
                                                        const std::vector<NormalizationRule> &rules,
                                                        const LookupTables &tables);

/// Typed wrapper over normalize_row; the signature is never touched.
std::pair<Record, std::vector<Finding>> normalize_record(const Record &record, const ColumnSchema &schema,
                                                         const std::vector<NormalizationRule> &rules,
                                                         const LookupTables &tables);

/// Whole-fonds pass in signature order.
std::pair<Fonds, std::vector<Finding>> normalize_fonds(const Fonds &fonds,
                                                       const std::vector<NormalizationRule> &rules,
                                                       const LookupTables &tables);

/// Lowercases and collapses whitespace; the key form used for alias and
/// gazetteer lookups. Handles the Latin-1 accented letters of the corpus.
std::string fold_key(std::string_view text);

std::string trim_collapse(std::string_view text);

} // namespace fondskit
