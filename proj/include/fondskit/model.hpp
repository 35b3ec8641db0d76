#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fondskit/finding.hpp"
#include "fondskit/plan.hpp"
#include "fondskit/schema.hpp"
#include "fondskit/signature.hpp"

namespace fondskit {

/// Key into the person registry.
struct PersonRef {
    std::string person_id;

    bool operator==(const PersonRef &) const = default;
};

struct PlaceRef {
    std::string name;
    std::optional<std::string> country; // ISO 3166-1 alpha-2

    bool operator==(const PlaceRef &) const = default;
};

inline const std::vector<std::string> kNatureVocabulary = {
    "grabación", "iconografía", "prensa", "correspondencia", "manuscrito",
    "tapuscrito", "dibujo", "objeto", "otro",
};

/// One archive item: the canonical row every output format is generated
/// from. Extension columns beyond the core schema live in `extensions`,
/// keyed by column name, cell text kept verbatim.
struct Record {
    Signature signature;
    std::string title;
    std::string form;     // physical form: cuaderno, folio, ...
    std::string doc_type;
    std::string nature;   // one of kNatureVocabulary
    std::optional<ArchiveDate> date;
    std::optional<PlaceRef> place;
    std::optional<std::string> language; // ISO 639-1
    std::optional<PersonRef> creator;
    std::optional<PersonRef> sender;
    std::optional<PersonRef> recipient;
    std::optional<PlaceRef> sending_place;
    std::optional<std::string> genetic_dossier; // creative-project label
    std::optional<GeneticState> genetic_state;
    std::vector<Signature> genetic_relations;
    std::string localizacion; // hosting institution; deliberately not in the signature
    std::optional<std::string> description;
    std::optional<std::string> rights;
    std::map<std::string, std::string> extensions;

    bool operator==(const Record &) const = default;
};

enum class PersonRole { estrella, satelite, otro };

const char *to_string(PersonRole role);
PersonRole parse_person_role(std::string_view text); // throws Error on unknown text

/// Prosopographical entry: the distant-reading fields (places, birth and
/// death dates, professions, star/satellite links).
struct Person {
    std::string person_id;
    std::string canonical_name; // "Surname, Given"
    std::vector<std::string> aliases;
    std::optional<ArchiveDate> birth_date;
    std::optional<PlaceRef> birth_place;
    std::optional<ArchiveDate> death_date;
    std::optional<PlaceRef> death_place;
    std::vector<std::string> professions;
    PersonRole role = PersonRole::otro;
    std::optional<std::string> associated_star; // person_id of the orbited star

    bool operator==(const Person &) const = default;
};

struct Fonds {
    FondsCode code;
    ClassificationPlan plan;
    ColumnSchema schema;
    std::vector<Record> records;
    std::vector<Person> persons;

    const Record *find_record(const Signature &sig) const;
    const Person *find_person(const std::string &person_id) const;

    bool operator==(const Fonds &) const = default;
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool valid() const { return !has_errors(findings); }
};

/// Checks signature uniqueness, plan resolution, person and place
/// resolution, genetic-relation integrity and symmetry, date validity and
/// the enumerated vocabularies. Findings come back sorted by signature.
ValidationReport validate_fonds(const Fonds &fonds);

/// Adds every missing genetic back-link (X listed by Y but not vice versa).
/// One finding per added link; a second pass returns none.
std::vector<Finding> repair_genetic_symmetry(Fonds &fonds);

/// All witnesses of one creative project: the records sharing
/// fonds + category + item number, ordered by copy number. The signature
/// must belong to a record carrying a genetic state (NotInDossier otherwise).
std::vector<const Record *> resolve_dossier(const Fonds &fonds, const Signature &sig);

/// Records whose cell value equals the filter value for every given column,
/// in sort_key order. Filter keys must be schema columns (UnknownField).
std::vector<const Record *> query(const Fonds &fonds, const std::map<std::string, std::string> &filter);

} // namespace fondskit
