#include "fondskit/model.hpp"

#include <algorithm>
#include <set>

#include "fondskit/errors.hpp"
#include "fondskit/store.hpp"

namespace fondskit {

bool has_errors(const std::vector<Finding> &findings) {
    return std::any_of(findings.begin(), findings.end(),
                       [](const Finding &f) { return f.severity == Severity::error; });
}

void sort_findings(std::vector<Finding> &findings) {
    std::stable_sort(findings.begin(), findings.end(), [](const Finding &a, const Finding &b) {
        return std::tie(a.signature, a.field, a.message) < std::tie(b.signature, b.field, b.message);
    });
}

const char *to_string(PersonRole role) {
    switch (role) {
    case PersonRole::estrella: return "estrella";
    case PersonRole::satelite: return "satélite";
    case PersonRole::otro: return "otro";
    }
    return "otro";
}

PersonRole parse_person_role(std::string_view text) {
    if (text == "estrella")
        return PersonRole::estrella;
    if (text == "satélite" || text == "satelite")
        return PersonRole::satelite;
    if (text == "otro" || text.empty())
        return PersonRole::otro;
    throw Error("unknown person role \"" + std::string(text) + "\"");
}

const Record *Fonds::find_record(const Signature &sig) const {
    const auto it = std::find_if(records.begin(), records.end(),
                                 [&](const Record &r) { return r.signature == sig; });
    return it == records.end() ? nullptr : &*it;
}

const Person *Fonds::find_person(const std::string &person_id) const {
    const auto it = std::find_if(persons.begin(), persons.end(),
                                 [&](const Person &p) { return p.person_id == person_id; });
    return it == persons.end() ? nullptr : &*it;
}

namespace {

bool valid_country(const std::string &code) {
    return code.size() == 2 && code[0] >= 'A' && code[0] <= 'Z' && code[1] >= 'A' && code[1] <= 'Z';
}

bool valid_language(const std::string &code) {
    return code.size() == 2 && code[0] >= 'a' && code[0] <= 'z' && code[1] >= 'a' && code[1] <= 'z';
}

void check_place(std::vector<Finding> &findings, const std::string &sig, const char *field,
                 const std::optional<PlaceRef> &place) {
    if (!place)
        return;
    if (place->name.empty())
        findings.push_back({ Severity::error, sig, field, "place with empty name", "", "" });
    if (place->country && !valid_country(*place->country))
        findings.push_back({ Severity::error, sig, std::string(field) + "_country",
                             "\"" + *place->country + "\" is not an ISO 3166-1 alpha-2 code", "", "" });
}

void check_person_ref(const Fonds &fonds, std::vector<Finding> &findings, const std::string &sig,
                      const char *field, const std::optional<PersonRef> &ref) {
    if (ref && fonds.find_person(ref->person_id) == nullptr)
        findings.push_back({ Severity::error, sig, field,
                             "person \"" + ref->person_id + "\" not in the registry", "", "" });
}

void check_date(std::vector<Finding> &findings, const std::string &sig, const std::string &field,
                const std::optional<ArchiveDate> &date) {
    if (!date)
        return;
    if (const auto problem = date->check())
        findings.push_back({ Severity::error, sig, field, *problem, "", "" });
}

} // namespace

ValidationReport validate_fonds(const Fonds &fonds) {
    ValidationReport report;
    auto &findings = report.findings;

    std::set<std::string> seen_signatures;
    std::map<std::string, const Record *> by_signature;
    for (const Record &record : fonds.records)
        by_signature.emplace(format_signature(record.signature), &record);

    for (const Record &record : fonds.records) {
        const std::string sig = format_signature(record.signature);

        if (!seen_signatures.insert(sig).second)
            findings.push_back({ Severity::error, sig, "signature", "duplicate signature", "", "" });
        if (record.signature.fonds != fonds.code)
            findings.push_back({ Severity::error, sig, "signature",
                                 "record belongs to fonds " + record.signature.fonds.code + ", not "
                                     + fonds.code.code, "", "" });
        if (!plan_contains(fonds.plan, record.signature.category))
            findings.push_back({ Severity::error, sig, "signature",
                                 "unresolved category " + record.signature.category.code, "", "" });
        // chronological shelfmarks are the correspondence convention
        if (record.signature.is_chronological() && record.signature.category.root() != 'B')
            findings.push_back({ Severity::warning, sig, "signature",
                                 "chronological signature outside category B", "", "" });

        if (!record.nature.empty()
            && std::find(kNatureVocabulary.begin(), kNatureVocabulary.end(), record.nature)
                   == kNatureVocabulary.end())
            findings.push_back({ Severity::error, sig, "nature",
                                 "\"" + record.nature + "\" is not in the nature vocabulary", "", "" });
        if (record.nature == "correspondencia" && !record.sender)
            findings.push_back({ Severity::error, sig, "sender", "correspondence record without sender", "", "" });

        check_date(findings, sig, "date", record.date);
        check_place(findings, sig, "place", record.place);
        check_place(findings, sig, "sending_place", record.sending_place);
        if (record.language && !valid_language(*record.language))
            findings.push_back({ Severity::error, sig, "language",
                                 "\"" + *record.language + "\" is not an ISO 639-1 code", "", "" });
        check_person_ref(fonds, findings, sig, "creator", record.creator);
        check_person_ref(fonds, findings, sig, "sender", record.sender);
        check_person_ref(fonds, findings, sig, "recipient", record.recipient);

        if (record.genetic_state.has_value() != record.genetic_dossier.has_value())
            findings.push_back({ Severity::error, sig, "genetic_state",
                                 "genetic state and genetic dossier must appear together", "", "" });
        const auto *seq = record.signature.sequential();
        const std::optional<GeneticState> sig_state = seq ? seq->genetic : std::nullopt;
        if (record.genetic_state != sig_state)
            findings.push_back({ Severity::error, sig, "genetic_state",
                                 "genetic_state column does not match the signature", "", "" });

        for (const Signature &related : record.genetic_relations) {
            const std::string related_text = format_signature(related);
            if (related == record.signature) {
                findings.push_back({ Severity::error, sig, "genetic_relations",
                                     "record lists itself as a genetic relation", "", "" });
                continue;
            }
            const auto it = by_signature.find(related_text);
            if (it == by_signature.end()) {
                findings.push_back({ Severity::error, sig, "genetic_relations",
                                     "unknown genetic relation " + related_text, "", "" });
                continue;
            }
            if (related.category != record.signature.category)
                findings.push_back({ Severity::warning, sig, "genetic_relations",
                                     "genetic relation " + related_text + " crosses category boundaries", "", "" });
            const Record &other = *it->second;
            if (std::find(other.genetic_relations.begin(), other.genetic_relations.end(), record.signature)
                == other.genetic_relations.end())
                findings.push_back({ Severity::warning, related_text, "genetic_relations",
                                     "asymmetric genetic relation: " + related_text + " does not list " + sig,
                                     "", "" });
        }
    }

    std::set<std::string> seen_persons;
    for (const Person &person : fonds.persons) {
        if (person.person_id.empty()) {
            findings.push_back({ Severity::error, "", "person_id", "person with empty id", "", "" });
            continue;
        }
        if (!seen_persons.insert(person.person_id).second)
            findings.push_back({ Severity::error, person.person_id, "person_id", "duplicate person id", "", "" });
        check_date(findings, person.person_id, "birth_date", person.birth_date);
        check_date(findings, person.person_id, "death_date", person.death_date);
        check_place(findings, person.person_id, "birth_place", person.birth_place);
        check_place(findings, person.person_id, "death_place", person.death_place);
        if (person.associated_star) {
            if (person.role != PersonRole::satelite)
                findings.push_back({ Severity::error, person.person_id, "associated_star",
                                     "associated star given but role is not satélite", "", "" });
            const Person *star = fonds.find_person(*person.associated_star);
            if (star == nullptr)
                findings.push_back({ Severity::error, person.person_id, "associated_star",
                                     "star \"" + *person.associated_star + "\" not in the registry", "", "" });
            else if (star->role != PersonRole::estrella)
                findings.push_back({ Severity::error, person.person_id, "associated_star",
                                     "\"" + *person.associated_star + "\" is not an estrella", "", "" });
        }
    }

    sort_findings(findings);
    return report;
}

std::vector<Finding> repair_genetic_symmetry(Fonds &fonds) {
    std::vector<Finding> added;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < fonds.records.size(); ++i)
        index.emplace(format_signature(fonds.records[i].signature), i);

    for (std::size_t i = 0; i < fonds.records.size(); ++i) {
        // snapshot: links added during the pass must not cascade
        const std::vector<Signature> relations = fonds.records[i].genetic_relations;
        for (const Signature &related : relations) {
            const auto it = index.find(format_signature(related));
            if (it == index.end())
                continue;
            Record &other = fonds.records[it->second];
            const Signature &self = fonds.records[i].signature;
            if (other.signature == self)
                continue;
            if (std::find(other.genetic_relations.begin(), other.genetic_relations.end(), self)
                == other.genetic_relations.end()) {
                other.genetic_relations.push_back(self);
                added.push_back({ Severity::warning, format_signature(other.signature), "genetic_relations",
                                  "added missing back-link", "", format_signature(self) });
            }
        }
    }
    sort_findings(added);
    return added;
}

std::vector<const Record *> resolve_dossier(const Fonds &fonds, const Signature &sig) {
    const Record *entry = fonds.find_record(sig);
    if (entry == nullptr)
        throw NotInDossier("no record with signature " + format_signature(sig));
    const auto *seq = sig.sequential();
    if (!entry->genetic_state || seq == nullptr)
        throw NotInDossier(format_signature(sig) + " carries no genetic state");
    std::vector<const Record *> members;
    for (const Record &record : fonds.records) {
        const auto *other = record.signature.sequential();
        if (other == nullptr || !record.genetic_state)
            continue;
        if (record.signature.fonds == sig.fonds && record.signature.category == sig.category
            && other->item_no == seq->item_no)
            members.push_back(&record);
    }
    std::sort(members.begin(), members.end(), [](const Record *a, const Record *b) {
        return a->genetic_state->copy_number < b->genetic_state->copy_number;
    });
    return members;
}

std::vector<const Record *> query(const Fonds &fonds, const std::map<std::string, std::string> &filter) {
    for (const auto &[field, value] : filter) {
        if (!fonds.schema.find(field))
            throw UnknownField("unknown schema column \"" + field + "\"");
    }

    std::vector<const Record *> matches;
    for (const Record &record : fonds.records) {
        const csv::Row cells = record_to_cells(record, fonds.schema);
        bool ok = true;
        for (const auto &[field, value] : filter) {
            if (cells[*fonds.schema.index_of(field)] != value) {
                ok = false;
                break;
            }
        }
        if (ok)
            matches.push_back(&record);
    }
    std::sort(matches.begin(), matches.end(),
              [](const Record *a, const Record *b) { return signature_less(a->signature, b->signature); });
    return matches;
}

} // namespace fondskit
