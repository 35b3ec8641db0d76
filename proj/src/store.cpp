#include "fondskit/store.hpp"

#include <algorithm>

#include "fondskit/errors.hpp"
#include "fondskit/normalize.hpp"

namespace fondskit {

const std::vector<std::string> kPersonsHeader = {
    "person_id", "canonical_name", "aliases", "birth_date", "birth_place", "birth_country",
    "death_date", "death_place", "death_country", "professions", "role", "associated_star",
};

namespace {

std::string opt_text(const std::optional<std::string> &value) {
    return value.value_or("");
}

std::string date_cell(const std::optional<ArchiveDate> &date) {
    return date ? date->to_cell() : "";
}

std::string ref_cell(const std::optional<PersonRef> &ref) {
    return ref ? ref->person_id : "";
}

std::optional<std::string> cell_opt(const std::string &cell) {
    return cell.empty() ? std::nullopt : std::make_optional(cell);
}

std::optional<ArchiveDate> parse_date_cell(const std::string &cell, std::size_t row_no, const std::string &column) {
    if (cell.empty())
        return std::nullopt;
    try {
        return normalize_date(cell);
    } catch (const UnparseableDate &e) {
        throw CellParse(row_no, column, "date", e.what());
    }
}

std::optional<PlaceRef> parse_place_cells(const std::string &name, const std::string &country, std::size_t row_no,
                                          const std::string &column) {
    if (name.empty()) {
        if (!country.empty())
            throw CellParse(row_no, column, "place", "country \"" + country + "\" given without a place name");
        return std::nullopt;
    }
    return PlaceRef{ name, cell_opt(country) };
}

Signature parse_signature_cell(const std::string &cell, std::size_t row_no, const std::string &column) {
    try {
        return parse_signature(cell);
    } catch (const Error &e) {
        throw CellParse(row_no, column, "signature", e.what());
    }
}

} // namespace

csv::Row record_to_cells(const Record &record, const ColumnSchema &schema) {
    csv::Row row;
    row.reserve(schema.columns().size());
    for (const Column &column : schema.columns()) {
        const std::string &name = column.name;
        if (name == "signature") row.push_back(format_signature(record.signature));
        else if (name == "title") row.push_back(record.title);
        else if (name == "form") row.push_back(record.form);
        else if (name == "doc_type") row.push_back(record.doc_type);
        else if (name == "nature") row.push_back(record.nature);
        else if (name == "date") row.push_back(date_cell(record.date));
        else if (name == "place") row.push_back(record.place ? record.place->name : "");
        else if (name == "place_country") row.push_back(record.place ? opt_text(record.place->country) : "");
        else if (name == "language") row.push_back(opt_text(record.language));
        else if (name == "creator") row.push_back(ref_cell(record.creator));
        else if (name == "sender") row.push_back(ref_cell(record.sender));
        else if (name == "recipient") row.push_back(ref_cell(record.recipient));
        else if (name == "sending_place") row.push_back(record.sending_place ? record.sending_place->name : "");
        else if (name == "sending_place_country")
            row.push_back(record.sending_place ? opt_text(record.sending_place->country) : "");
        else if (name == "genetic_dossier") row.push_back(opt_text(record.genetic_dossier));
        else if (name == "genetic_state") row.push_back(record.genetic_state ? record.genetic_state->render() : "");
        else if (name == "genetic_relations") {
            std::vector<std::string> texts;
            for (const Signature &sig : record.genetic_relations)
                texts.push_back(format_signature(sig));
            row.push_back(csv::join_list(texts));
        } else if (name == "localizacion") row.push_back(record.localizacion);
        else if (name == "description") row.push_back(opt_text(record.description));
        else if (name == "rights") row.push_back(opt_text(record.rights));
        else {
            const auto it = record.extensions.find(name);
            row.push_back(it == record.extensions.end() ? "" : it->second);
        }
    }
    return row;
}

Record record_from_cells(const csv::Row &row, const ColumnSchema &schema, std::size_t row_no) {
    Record record;
    auto cell = [&](std::string_view name) -> const std::string & {
        static const std::string empty;
        const auto index = schema.index_of(name);
        return index && *index < row.size() ? row[*index] : empty;
    };

    record.signature = parse_signature_cell(cell("signature"), row_no, "signature");
    record.title = cell("title");
    record.form = cell("form");
    record.doc_type = cell("doc_type");
    record.nature = cell("nature");
    record.date = parse_date_cell(cell("date"), row_no, "date");
    record.place = parse_place_cells(cell("place"), cell("place_country"), row_no, "place");
    record.language = cell_opt(cell("language"));
    if (const auto &c = cell("creator"); !c.empty()) record.creator = PersonRef{ c };
    if (const auto &c = cell("sender"); !c.empty()) record.sender = PersonRef{ c };
    if (const auto &c = cell("recipient"); !c.empty()) record.recipient = PersonRef{ c };
    record.sending_place = parse_place_cells(cell("sending_place"), cell("sending_place_country"), row_no,
                                             "sending_place");
    record.genetic_dossier = cell_opt(cell("genetic_dossier"));
    if (const auto &state = cell("genetic_state"); !state.empty()) {
        try {
            record.genetic_state = GeneticState::parse(state);
        } catch (const Error &e) {
            throw CellParse(row_no, "genetic_state", "text", e.what());
        }
    }
    for (const std::string &text : csv::split_list(cell("genetic_relations")))
        record.genetic_relations.push_back(parse_signature_cell(text, row_no, "genetic_relations"));
    record.localizacion = cell("localizacion");
    record.description = cell_opt(cell("description"));
    record.rights = cell_opt(cell("rights"));

    for (std::size_t i = 0; i < schema.columns().size() && i < row.size(); ++i) {
        const Column &column = schema.columns()[i];
        if (!schema.is_extension(column.name))
            continue;
        const std::string &value = row[i];
        if (value.empty()) {
            if (column.required)
                throw CellParse(row_no, column.name, to_string(column.kind), "required cell is empty");
            continue;
        }
        // typed extension cells are validated but stored verbatim
        switch (column.kind) {
        case ColumnKind::date: parse_date_cell(value, row_no, column.name); break;
        case ColumnKind::signature: parse_signature_cell(value, row_no, column.name); break;
        case ColumnKind::signature_list:
            for (const std::string &text : csv::split_list(value))
                parse_signature_cell(text, row_no, column.name);
            break;
        default: break;
        }
        record.extensions.emplace(column.name, value);
    }
    return record;
}

csv::Row person_to_cells(const Person &person) {
    return {
        person.person_id,
        person.canonical_name,
        csv::join_list(person.aliases),
        date_cell(person.birth_date),
        person.birth_place ? person.birth_place->name : "",
        person.birth_place ? opt_text(person.birth_place->country) : "",
        date_cell(person.death_date),
        person.death_place ? person.death_place->name : "",
        person.death_place ? opt_text(person.death_place->country) : "",
        csv::join_list(person.professions),
        to_string(person.role),
        opt_text(person.associated_star),
    };
}

Person person_from_cells(const csv::Row &row, std::size_t row_no) {
    Person person;
    person.person_id = row[0];
    if (person.person_id.empty())
        throw CellParse(row_no, "person_id", "text", "empty person id");
    person.canonical_name = row[1];
    person.aliases = csv::split_list(row[2]);
    person.birth_date = parse_date_cell(row[3], row_no, "birth_date");
    person.birth_place = parse_place_cells(row[4], row[5], row_no, "birth_place");
    person.death_date = parse_date_cell(row[6], row_no, "death_date");
    person.death_place = parse_place_cells(row[7], row[8], row_no, "death_place");
    person.professions = csv::split_list(row[9]);
    try {
        person.role = parse_person_role(row[10]);
    } catch (const Error &e) {
        throw CellParse(row_no, "role", "text", e.what());
    }
    person.associated_star = cell_opt(row[11]);
    return person;
}

std::vector<std::string> populated_fields(const Record &record, const ColumnSchema &schema) {
    const csv::Row cells = record_to_cells(record, schema);
    std::vector<std::string> fields;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!cells[i].empty())
            fields.push_back(schema.columns()[i].name);
    }
    return fields;
}

Fonds read_fonds(const FondsFiles &files, const FondsCode &code) {
    Fonds fonds;
    fonds.code = code;
    fonds.schema = ColumnSchema::from_csv(files.schema);
    fonds.plan = load_plan(files.plan, code);

    const csv::Table records = csv::parse(files.records);
    if (records.header != fonds.schema.header())
        throw SchemaMismatch("records header does not match the schema (expected "
                             + csv::join_list(fonds.schema.header()) + ")");
    for (std::size_t i = 0; i < records.rows.size(); ++i)
        fonds.records.push_back(record_from_cells(records.rows[i], fonds.schema, i + 1));

    if (!files.persons.empty()) {
        const csv::Table persons = csv::parse(files.persons);
        if (persons.header != kPersonsHeader)
            throw SchemaMismatch("persons header does not match the fixed persons schema");
        for (std::size_t i = 0; i < persons.rows.size(); ++i)
            fonds.persons.push_back(person_from_cells(persons.rows[i], i + 1));
    }
    return fonds;
}

FondsFiles write_fonds(const Fonds &fonds) {
    FondsFiles files;

    csv::Table records;
    records.header = fonds.schema.header();
    std::vector<const Record *> sorted;
    for (const Record &record : fonds.records)
        sorted.push_back(&record);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Record *a, const Record *b) { return signature_less(a->signature, b->signature); });
    for (const Record *record : sorted)
        records.rows.push_back(record_to_cells(*record, fonds.schema));
    files.records = csv::render(records);

    csv::Table persons;
    persons.header = kPersonsHeader;
    std::vector<const Person *> sorted_persons;
    for (const Person &person : fonds.persons)
        sorted_persons.push_back(&person);
    std::stable_sort(sorted_persons.begin(), sorted_persons.end(),
                     [](const Person *a, const Person *b) { return a->person_id < b->person_id; });
    for (const Person *person : sorted_persons)
        persons.rows.push_back(person_to_cells(*person));
    files.persons = csv::render(persons);

    files.plan = format_plan(fonds.plan);
    files.schema = fonds.schema.extensions_csv();
    return files;
}

DiffReport diff_fonds(const Fonds &a, const Fonds &b) {
    if (a.code != b.code)
        throw FondsMismatch("cannot diff fonds " + a.code.code + " against " + b.code.code);

    std::map<std::string, const Record *> in_a, in_b;
    for (const Record &record : a.records)
        in_a.emplace(format_signature(record.signature), &record);
    for (const Record &record : b.records)
        in_b.emplace(format_signature(record.signature), &record);

    DiffReport report;
    for (const auto &[sig, record] : in_b) {
        if (!in_a.contains(sig))
            report.added.push_back(sig);
    }
    for (const auto &[sig, record] : in_a) {
        const auto it = in_b.find(sig);
        if (it == in_b.end()) {
            report.removed.push_back(sig);
            continue;
        }
        // field-level comparison on the wider of the two schemas
        const ColumnSchema &schema = a.schema.columns().size() >= b.schema.columns().size() ? a.schema : b.schema;
        const csv::Row cells_a = record_to_cells(*record, schema);
        const csv::Row cells_b = record_to_cells(*it->second, schema);
        for (std::size_t i = 0; i < cells_a.size(); ++i) {
            if (cells_a[i] != cells_b[i])
                report.changed.push_back({ sig, schema.columns()[i].name, cells_a[i], cells_b[i] });
        }
    }
    return report;
}

} // namespace fondskit
