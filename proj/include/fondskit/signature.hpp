#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

namespace fondskit {

/// Fonds identifier: 2-4 uppercase Latin letters, e.g. JMG or CDM.
struct FondsCode {
    std::string code;

    static FondsCode parse(std::string_view text); // throws MalformedSignature
    auto operator<=>(const FondsCode &) const = default;
};

/// Classification code: root letter A-E, optionally extended to a series
/// (second uppercase letter, e.g. AA) and a numbered sub-series (AA1).
struct CategoryCode {
    std::string code;

    static CategoryCode parse(std::string_view text); // throws MalformedSignature
    static bool valid(std::string_view text);

    char root() const { return code[0]; }
    int depth() const; // 0 = root, 1 = series, 2 = sub-series
    /// Enclosing code one level up; empty optional for roots.
    std::optional<CategoryCode> parent() const;

    auto operator<=>(const CategoryCode &) const = default;
};

/// A possibly partial date. month or day 0 means unknown; a known day
/// requires a known month and the full triple must be a real calendar date.
struct ArchiveDate {
    int year = 0;
    int month = 0;
    int day = 0;

    bool has_month() const { return month > 0; }
    bool has_day() const { return day > 0; }

    /// "1923", "1923-08" or "1923-08-17" -- unknown parts elided.
    std::string to_cell() const;
    /// Zero-padded triple as used inside signatures: "1923-00-00".
    std::string to_signature() const;

    /// Checks the invariants; returns a message for the first violation.
    std::optional<std::string> check() const;

    auto operator<=>(const ArchiveDate &) const = default;
};

/// Genetic state of a document: its stage in the creative process,
/// rendered C1, C2, ...
struct GeneticState {
    int copy_number = 1;

    static GeneticState parse(std::string_view text); // throws MalformedSignature
    static bool looks_like(std::string_view text);
    std::string render() const;

    auto operator<=>(const GeneticState &) const = default;
};

struct SequentialTail {
    int item_no = 1; // >= 1, zero-padded to at least 2 digits when rendered
    std::optional<GeneticState> genetic;

    auto operator<=>(const SequentialTail &) const = default;
};

struct ChronologicalTail {
    ArchiveDate date;
    std::optional<char> disambiguator; // 'a'..'z'

    auto operator<=>(const ChronologicalTail &) const = default;
};

/// Archive shelfmark binding one physical document and its digital
/// surrogate: FONDS-CATEGORY-<sequential or chronological tail>.
struct Signature {
    FondsCode fonds;
    CategoryCode category;
    std::variant<SequentialTail, ChronologicalTail> tail;

    bool is_sequential() const { return std::holds_alternative<SequentialTail>(tail); }
    bool is_chronological() const { return std::holds_alternative<ChronologicalTail>(tail); }
    const SequentialTail *sequential() const { return std::get_if<SequentialTail>(&tail); }
    const ChronologicalTail *chronological() const { return std::get_if<ChronologicalTail>(&tail); }

    bool operator==(const Signature &) const = default;
};

/// Parses both the canonical form (FONDS-CAT-YYYY-MM-DD[x], FONDS-CAT-NN[-Cn])
/// and the legacy chronological order FONDS-CAT-DD-MM-YYYY. The date is stored
/// in canonical year-month-day order either way.
/// Throws MalformedSignature, AmbiguousDate or InvalidDate.
Signature parse_signature(std::string_view raw);

/// Canonical rendering; format_signature(parse_signature(s)) == s for every
/// canonical s.
std::string format_signature(const Signature &sig);

/// Total-order key: fonds, category, then tail. Sequential tails sort before
/// chronological ones within a category; unknown date parts and absent
/// disambiguators/genetic states sort first.
using SortKey = std::tuple<std::string, std::string, int, int, int, int, int>;
SortKey sort_key(const Signature &sig);

bool signature_less(const Signature &a, const Signature &b);

/// Outcome of clash resolution for same-day letters: the candidate with its
/// letter assigned, plus a rename request when a letterless existing
/// signature collides (the paper's "a, b, c" convention requires it to
/// become the 'a' witness).
struct DisambiguationResult {
    Signature candidate;
    std::optional<std::pair<Signature, Signature>> existing_rename; // (current, renamed)
};

/// candidate must be chronological and carry no disambiguator yet.
/// Throws DisambiguatorExhausted past 'z'.
DisambiguationResult assign_disambiguator(std::span<const Signature> existing, const Signature &candidate);

} // namespace fondskit
