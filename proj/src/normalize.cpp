#include "fondskit/normalize.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "fondskit/errors.hpp"
#include "fondskit/store.hpp"

namespace fondskit {

// ---------------------------------------------------------------- text utils

namespace {

bool ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

// Latin-1 supplement covers the Spanish corpus (á é í ó ú ü ñ and friends);
// anything beyond passes through untouched.
void append_lower(std::string &out, std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = text[i];
        if (c == 0xC3 && i + 1 < text.size()) {
            unsigned char c2 = text[i + 1];
            if (c2 >= 0x80 && c2 <= 0x9E && c2 != 0x97)
                c2 += 0x20;
            out += static_cast<char>(c);
            out += static_cast<char>(c2);
            ++i;
        } else {
            out += static_cast<char>(std::tolower(c));
        }
    }
}

void append_upper_first(std::string &out, std::string_view token) {
    if (token.empty())
        return;
    const unsigned char c = token[0];
    std::size_t rest = 1;
    if (c == 0xC3 && token.size() >= 2) {
        unsigned char c2 = token[1];
        if (c2 >= 0xA0 && c2 <= 0xBE && c2 != 0xB7)
            c2 -= 0x20;
        out += static_cast<char>(c);
        out += static_cast<char>(c2);
        rest = 2;
    } else {
        out += static_cast<char>(std::toupper(c));
    }
    append_lower(out, token.substr(rest));
}

enum class TokenCase { lower, upper, mixed, caseless };

TokenCase classify_case(std::string_view token) {
    bool has_lower = false, has_upper = false;
    for (std::size_t i = 0; i < token.size(); ++i) {
        const unsigned char c = token[i];
        if (c == 0xC3 && i + 1 < token.size()) {
            const unsigned char c2 = token[i + 1];
            if (c2 >= 0x80 && c2 <= 0x9E && c2 != 0x97)
                has_upper = true;
            else if (c2 >= 0xA0 && c2 != 0xB7)
                has_lower = true;
            ++i;
        } else if (std::isupper(c)) {
            has_upper = true;
        } else if (std::islower(c)) {
            has_lower = true;
        }
    }
    if (has_lower && has_upper)
        return TokenCase::mixed;
    if (has_upper)
        return TokenCase::upper;
    if (has_lower)
        return TokenCase::lower;
    return TokenCase::caseless;
}

std::vector<std::string> space_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (const char c : text) {
        if (ascii_space(c)) {
            if (!current.empty())
                tokens.push_back(std::move(current)), current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty())
        tokens.push_back(std::move(current));
    return tokens;
}

std::string join(const std::vector<std::string> &tokens, std::size_t first, std::size_t last) {
    std::string out;
    for (std::size_t i = first; i < last; ++i) {
        if (i > first)
            out += ' ';
        out += tokens[i];
    }
    return out;
}

} // namespace

std::string trim_collapse(std::string_view text) {
    const auto tokens = space_tokens(text);
    return join(tokens, 0, tokens.size());
}

std::string fold_key(std::string_view text) {
    std::string out;
    append_lower(out, trim_collapse(text));
    return out;
}

// ------------------------------------------------------------------- tables

Gazetteer Gazetteer::from_csv(std::string_view csv_text) {
    Gazetteer gazetteer;
    if (csv_text.empty())
        return gazetteer;
    const csv::Table table = csv::parse(csv_text);
    if (table.header != csv::Row{ "alias", "canonical", "country" })
        throw SchemaMismatch("gazetteer must have header alias,canonical,country");
    for (const csv::Row &row : table.rows) {
        PlaceRef place{ row[1], row[2].empty() ? std::nullopt : std::make_optional(row[2]) };
        if (place.country
            && !(place.country->size() == 2 && std::isupper((unsigned char)(*place.country)[0])
                 && std::isupper((unsigned char)(*place.country)[1])))
            throw SchemaMismatch("gazetteer country \"" + row[2] + "\" is not ISO 3166-1 alpha-2");
        gazetteer.add(row[0], place);
    }
    return gazetteer;
}

void Gazetteer::add(std::string_view alias, const PlaceRef &place) {
    entries_.emplace(fold_key(alias), place);
    entries_.emplace(fold_key(place.name), place); // canonical resolves to itself
}

const PlaceRef *Gazetteer::lookup(std::string_view raw) const {
    const auto it = entries_.find(fold_key(raw));
    return it == entries_.end() ? nullptr : &it->second;
}

AliasTable AliasTable::from_csv(std::string_view csv_text) {
    AliasTable aliases;
    if (csv_text.empty())
        return aliases;
    const csv::Table table = csv::parse(csv_text);
    if (table.header != csv::Row{ "alias", "person_id" })
        throw SchemaMismatch("alias file must have header alias,person_id");
    for (const csv::Row &row : table.rows)
        aliases.add(row[0], row[1]);
    return aliases;
}

void AliasTable::add_persons(const std::vector<Person> &persons) {
    for (const Person &person : persons) {
        person_ids_.insert(person.person_id);
        add(person.canonical_name, person.person_id);
        for (const std::string &alias : person.aliases)
            add(alias, person.person_id);
    }
}

void AliasTable::add(std::string_view alias, std::string_view person_id) {
    aliases_.emplace(fold_key(alias), std::string(person_id));
    person_ids_.insert(std::string(person_id));
}

const std::string *AliasTable::person_id_for(std::string_view raw) const {
    const auto it = aliases_.find(fold_key(raw));
    return it == aliases_.end() ? nullptr : &it->second;
}

// -------------------------------------------------------------------- dates

namespace {

const std::array<const char *, 12> kMonths = { "enero", "febrero", "marzo", "abril", "mayo", "junio",
                                               "julio", "agosto", "septiembre", "octubre", "noviembre",
                                               "diciembre" };

int month_number(std::string_view folded) {
    if (folded == "setiembre") // rioplatense spelling
        return 9;
    for (std::size_t i = 0; i < kMonths.size(); ++i) {
        if (folded == kMonths[i])
            return static_cast<int>(i) + 1;
    }
    return 0;
}

bool digits_only(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

int number(std::string_view s) {
    int value = 0;
    for (const char c : s)
        value = value * 10 + (c - '0');
    return value;
}

std::vector<std::string> split_on(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(text.substr(start));
            return parts;
        }
        parts.emplace_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

ArchiveDate checked(int year, int month, int day, std::string_view raw) {
    const ArchiveDate date{ year, month, day };
    if (const auto problem = date.check())
        throw UnparseableDate("\"" + std::string(raw) + "\": " + *problem);
    return date;
}

} // namespace

ArchiveDate normalize_date(std::string_view raw) {
    const std::string s = trim_collapse(raw);
    if (s.empty())
        throw UnparseableDate("empty date");

    if (digits_only(s)) {
        if (s.size() == 4)
            return checked(number(s), 0, 0, raw);
        throw UnparseableDate("\"" + std::string(raw) + "\": a year has four digits");
    }

    const char sep = s.find('-') != std::string::npos ? '-' : s.find('/') != std::string::npos ? '/' : ' ';
    if (sep != ' ') {
        const auto parts = split_on(s, sep);
        if (!std::all_of(parts.begin(), parts.end(), [](const std::string &p) { return digits_only(p); }))
            throw UnparseableDate("\"" + std::string(raw) + "\" is not a date");
        if (parts.size() == 2 && sep == '-' && parts[0].size() == 4)
            return checked(number(parts[0]), number(parts[1]), 0, raw);
        if (parts.size() == 3) {
            const bool first_year = parts[0].size() == 4;
            const bool last_year = parts[2].size() == 4;
            if (first_year == last_year)
                throw UnparseableDate("\"" + std::string(raw) + "\": cannot tell year from day");
            if (first_year && sep == '-')
                return checked(number(parts[0]), number(parts[1]), number(parts[2]), raw);
            if (last_year)
                return checked(number(parts[2]), number(parts[1]), number(parts[0]), raw);
        }
        throw UnparseableDate("\"" + std::string(raw) + "\" is not a date");
    }

    // Spanish long form: "17 de agosto de 1923" / "agosto de 1923"
    const auto tokens = space_tokens(s);
    if (tokens.size() == 5 && fold_key(tokens[1]) == "de" && fold_key(tokens[3]) == "de"
        && digits_only(tokens[0]) && tokens[0].size() <= 2 && digits_only(tokens[4]) && tokens[4].size() == 4) {
        const int month = month_number(fold_key(tokens[2]));
        if (month > 0)
            return checked(number(tokens[4]), month, number(tokens[0]), raw);
    }
    if (tokens.size() == 3 && fold_key(tokens[1]) == "de" && digits_only(tokens[2]) && tokens[2].size() == 4) {
        const int month = month_number(fold_key(tokens[0]));
        if (month > 0)
            return checked(number(tokens[2]), month, 0, raw);
    }
    throw UnparseableDate("\"" + std::string(raw) + "\" is not a date");
}

// -------------------------------------------------------------------- names

namespace {

// lowercase connectives stay lowercase in recased names
const std::set<std::string> kParticles = { "de", "del", "la", "las", "los", "y", "e", "da", "di", "van", "von" };

std::string recase_token(const std::string &token) {
    const std::string folded = fold_key(token);
    if (kParticles.contains(folded))
        return folded;
    if (const TokenCase c = classify_case(token); c == TokenCase::mixed || c == TokenCase::caseless)
        return token; // already deliberately cased
    std::string out;
    append_upper_first(out, folded);
    return out;
}

std::string recase_all(const std::string &text) {
    const auto tokens = space_tokens(text);
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += recase_token(tokens[i]);
    }
    return out;
}

} // namespace

NameResult normalize_person_name(std::string_view raw) {
    const std::string s = trim_collapse(raw);
    if (s.empty())
        throw EmptyName("blank person name");

    if (const std::size_t comma = s.find(','); comma != std::string::npos) {
        const std::string surname = recase_all(trim_collapse(s.substr(0, comma)));
        const std::string given = recase_all(trim_collapse(s.substr(comma + 1)));
        if (surname.empty())
            throw EmptyName("name \"" + s + "\" has no surname");
        return { given.empty() ? surname : surname + ", " + given, false };
    }

    auto tokens = space_tokens(s);
    for (std::string &token : tokens)
        token = recase_token(token);
    if (tokens.size() == 1)
        return { tokens[0], true };
    // Spanish convention: the final two tokens are the (double) surname
    const std::size_t split = tokens.size() >= 3 ? tokens.size() - 2 : tokens.size() - 1;
    return { join(tokens, split, tokens.size()) + ", " + join(tokens, 0, split), true };
}

PlaceResult normalize_place(std::string_view raw, const Gazetteer &gazetteer) {
    const std::string s = trim_collapse(raw);
    if (const PlaceRef *hit = gazetteer.lookup(s))
        return { *hit, true };
    return { PlaceRef{ s, std::nullopt }, false };
}

// --------------------------------------------------------------------- rows

const char *to_string(RuleId rule) {
    switch (rule) {
    case RuleId::date_iso: return "date_iso";
    case RuleId::person_name: return "person_name";
    case RuleId::place: return "place";
    case RuleId::trim_case: return "trim_case";
    case RuleId::country_code: return "country_code";
    }
    return "trim_case";
}

std::vector<NormalizationRule> default_rules(const ColumnSchema &schema) {
    NormalizationRule dates{ RuleId::date_iso, { "date" } };
    NormalizationRule names{ RuleId::person_name, { "creator", "sender", "recipient" } };
    NormalizationRule places{ RuleId::place, { "place", "sending_place" } };
    NormalizationRule countries{ RuleId::country_code, { "place_country", "sending_place_country" } };
    NormalizationRule text{ RuleId::trim_case,
                            { "title", "form", "doc_type", "nature", "language", "genetic_dossier",
                              "genetic_state", "localizacion", "description", "rights" } };
    for (const Column &column : schema.columns()) {
        if (!schema.is_extension(column.name))
            continue;
        switch (column.kind) {
        case ColumnKind::date: dates.columns.push_back(column.name); break;
        case ColumnKind::person_ref: names.columns.push_back(column.name); break;
        case ColumnKind::place: places.columns.push_back(column.name); break;
        case ColumnKind::text:
        case ColumnKind::language: text.columns.push_back(column.name); break;
        default: break; // signature kinds stay verbatim
        }
    }
    return { dates, names, places, countries, text };
}

namespace {

bool two_ascii_letters(const std::string &s) {
    return s.size() == 2 && std::isalpha((unsigned char)s[0]) && std::isalpha((unsigned char)s[1]);
}

std::string apply_trim_case(const std::string &column, const std::string &value) {
    std::string out = trim_collapse(value);
    if (column == "nature" || column == "language") {
        const std::string folded = fold_key(out);
        if (column == "language" && two_ascii_letters(folded))
            out = folded;
        if (column == "nature"
            && std::find(kNatureVocabulary.begin(), kNatureVocabulary.end(), folded) != kNatureVocabulary.end())
            out = folded;
    } else if (column == "genetic_state" && out.size() >= 2 && (out[0] == 'c' || out[0] == 'C')
               && digits_only(out.substr(1))) {
        out[0] = 'C';
    }
    return out;
}

} // namespace

std::pair<csv::Row, std::vector<Finding>> normalize_row(const csv::Row &row, const ColumnSchema &schema,
                                                        const std::vector<NormalizationRule> &rules,
                                                        const LookupTables &tables) {
    csv::Row out = row;
    out.resize(schema.columns().size());
    std::vector<Finding> findings;

    auto rules_for = [&](const std::string &column) {
        std::vector<RuleId> ids;
        for (const NormalizationRule &rule : rules) {
            if (std::find(rule.columns.begin(), rule.columns.end(), column) != rule.columns.end())
                ids.push_back(rule.rule);
        }
        std::sort(ids.begin(), ids.end(), [](RuleId a, RuleId b) {
            return (a == RuleId::trim_case ? 0 : 1) < (b == RuleId::trim_case ? 0 : 1);
        });
        return ids;
    };

    for (std::size_t i = 0; i < schema.columns().size(); ++i) {
        const Column &column = schema.columns()[i];
        if (column.name == "signature" || out[i].empty())
            continue; // a record's identity is never normalized

        const std::string before = out[i];
        std::string warning;
        for (const RuleId rule : rules_for(column.name)) {
            std::string &value = out[i];
            switch (rule) {
            case RuleId::trim_case:
                value = apply_trim_case(column.name, value);
                break;
            case RuleId::date_iso:
                try {
                    value = normalize_date(value).to_cell();
                } catch (const UnparseableDate &e) {
                    findings.push_back({ Severity::error, "", column.name, e.what(), before, value });
                }
                break;
            case RuleId::person_name: {
                if (tables.aliases.is_person_id(trim_collapse(value))) {
                    value = trim_collapse(value);
                    break;
                }
                if (const std::string *id = tables.aliases.person_id_for(value)) {
                    value = *id;
                    break;
                }
                try {
                    const NameResult result = normalize_person_name(value);
                    value = result.name;
                    if (result.heuristic)
                        warning = "surname guessed from token order";
                } catch (const EmptyName &) {
                    value.clear();
                }
                break;
            }
            case RuleId::place: {
                const PlaceResult result = normalize_place(value, tables.gazetteer);
                value = result.place.name;
                if (!result.known) {
                    warning = "place not in gazetteer";
                    break;
                }
                const std::string country_column = column.name + "_country";
                const auto country_index = schema.index_of(country_column);
                if (result.place.country && country_index && out[*country_index] != *result.place.country) {
                    const std::string country_before = out[*country_index];
                    out[*country_index] = *result.place.country;
                    findings.push_back({ Severity::warning, "", country_column,
                                         country_before.empty() ? "country filled from gazetteer"
                                                                : "country corrected per gazetteer",
                                         country_before, out[*country_index] });
                }
                break;
            }
            case RuleId::country_code: {
                std::string trimmed = trim_collapse(value);
                if (two_ascii_letters(trimmed)) {
                    trimmed[0] = static_cast<char>(std::toupper((unsigned char)trimmed[0]));
                    trimmed[1] = static_cast<char>(std::toupper((unsigned char)trimmed[1]));
                }
                value = trimmed;
                break;
            }
            }
        }
        if (out[i] != before)
            findings.push_back({ Severity::warning, "", column.name,
                                 warning.empty() ? "normalized" : warning, before, out[i] });
    }
    return { std::move(out), std::move(findings) };
}

std::pair<Record, std::vector<Finding>> normalize_record(const Record &record, const ColumnSchema &schema,
                                                         const std::vector<NormalizationRule> &rules,
                                                         const LookupTables &tables) {
    auto [row, findings] = normalize_row(record_to_cells(record, schema), schema, rules, tables);
    Record result = record_from_cells(row, schema, 0);
    for (Finding &finding : findings)
        finding.signature = format_signature(record.signature);
    return { std::move(result), std::move(findings) };
}

std::pair<Fonds, std::vector<Finding>> normalize_fonds(const Fonds &fonds,
                                                       const std::vector<NormalizationRule> &rules,
                                                       const LookupTables &tables) {
    Fonds result = fonds;
    std::vector<Finding> findings;
    for (Record &record : result.records) {
        auto [normalized, record_findings] = normalize_record(record, fonds.schema, rules, tables);
        record = std::move(normalized);
        findings.insert(findings.end(), record_findings.begin(), record_findings.end());
    }
    sort_findings(findings);
    return { std::move(result), std::move(findings) };
}

} // namespace fondskit
