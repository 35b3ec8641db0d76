#include "fondskit/signature.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "fondskit/errors.hpp"

namespace fondskit {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

int to_int(std::string_view s) {
    int value = 0;
    for (const char c : s)
        value = value * 10 + (c - '0');
    return value;
}

std::string pad(int value, int width) {
    std::string digits = std::to_string(value);
    while (static_cast<int>(digits.size()) < width)
        digits.insert(digits.begin(), '0');
    return digits;
}

int days_in_month(int year, int month) {
    static constexpr std::array<int, 13> days = { 0, 31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31 };
    if (month == 2) {
        const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
        return leap ? 29 : 28;
    }
    return days[month];
}

std::vector<std::string_view> split_dashes(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (true) {
        const std::size_t sep = text.find('-', start);
        if (sep == std::string_view::npos) {
            tokens.push_back(text.substr(start));
            return tokens;
        }
        tokens.push_back(text.substr(start, sep - start));
        start = sep + 1;
    }
}

} // namespace

FondsCode FondsCode::parse(std::string_view text) {
    if (text.size() < 2 || text.size() > 4
        || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return c >= 'A' && c <= 'Z'; }))
        throw MalformedSignature("bad fonds code \"" + std::string(text) + "\": expected 2-4 uppercase letters");
    return FondsCode{ std::string(text) };
}

bool CategoryCode::valid(std::string_view text) {
    if (text.empty() || text[0] < 'A' || text[0] > 'E')
        return false;
    if (text.size() == 1)
        return true;
    if (text[1] < 'A' || text[1] > 'Z')
        return false;
    return text.size() == 2 || all_digits(text.substr(2));
}

CategoryCode CategoryCode::parse(std::string_view text) {
    if (!valid(text))
        throw MalformedSignature("bad category code \"" + std::string(text)
                                 + "\": expected root A-E with optional series letter and sub-series number");
    if (text.size() > 2 && to_int(text.substr(2)) == 0)
        throw MalformedSignature("bad category code \"" + std::string(text) + "\": sub-series number must be positive");
    return CategoryCode{ std::string(text) };
}

int CategoryCode::depth() const {
    if (code.size() == 1)
        return 0;
    return code.size() == 2 ? 1 : 2;
}

std::optional<CategoryCode> CategoryCode::parent() const {
    switch (depth()) {
    case 0: return std::nullopt;
    case 1: return CategoryCode{ code.substr(0, 1) };
    default: return CategoryCode{ code.substr(0, 2) };
    }
}

std::string ArchiveDate::to_cell() const {
    std::string out = pad(year, 4);
    if (month > 0) {
        out += '-';
        out += pad(month, 2);
        if (day > 0) {
            out += '-';
            out += pad(day, 2);
        }
    }
    return out;
}

std::string ArchiveDate::to_signature() const {
    return pad(year, 4) + "-" + pad(month, 2) + "-" + pad(day, 2);
}

std::optional<std::string> ArchiveDate::check() const {
    if (year < 1000 || year > 2999)
        return "year " + std::to_string(year) + " out of range 1000-2999";
    if (month < 0 || month > 12)
        return "month " + std::to_string(month) + " out of range";
    if (day < 0 || day > 31)
        return "day " + std::to_string(day) + " out of range";
    if (day > 0 && month == 0)
        return "day given without a month";
    if (month > 0 && day > days_in_month(year, month))
        return to_signature() + " is not a calendar date";
    return std::nullopt;
}

bool GeneticState::looks_like(std::string_view text) {
    return text.size() >= 2 && text[0] == 'C' && text[1] != '0' && all_digits(text.substr(1));
}

GeneticState GeneticState::parse(std::string_view text) {
    if (!looks_like(text))
        throw MalformedSignature("bad genetic state \"" + std::string(text) + "\": expected C1, C2, ...");
    return GeneticState{ to_int(text.substr(1)) };
}

std::string GeneticState::render() const {
    return "C" + std::to_string(copy_number);
}

namespace {

ArchiveDate make_date(int year, int month, int day) {
    const ArchiveDate date{ year, month, day };
    if (const auto problem = date.check())
        throw InvalidDate("invalid date in signature: " + *problem);
    return date;
}

ChronologicalTail parse_chronological(std::string_view t0, std::string_view t1, std::string_view t2) {
    std::optional<char> disambiguator;
    std::string last(t2);
    if (!last.empty() && last.back() >= 'a' && last.back() <= 'z') {
        disambiguator = last.back();
        last.pop_back();
    }
    if (!all_digits(t0) || !all_digits(t1) || !all_digits(last))
        throw MalformedSignature("bad chronological tail: expected three numeric date parts");

    const bool first_is_year = t0.size() == 4;
    const bool last_is_year = last.size() == 4;
    if (first_is_year && last_is_year)
        throw AmbiguousDate("two 4-digit tokens: cannot tell year from day");
    if (!first_is_year && !last_is_year)
        throw AmbiguousDate("no 4-digit year token");

    ArchiveDate date = first_is_year ? make_date(to_int(t0), to_int(t1), to_int(last))
                                     : make_date(to_int(last), to_int(t1), to_int(t0));
    return ChronologicalTail{ date, disambiguator };
}

} // namespace

Signature parse_signature(std::string_view raw) {
    while (!raw.empty() && (raw.front() == ' ' || raw.front() == '\t'))
        raw.remove_prefix(1);
    while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' || raw.back() == '\r'))
        raw.remove_suffix(1);
    if (raw.empty())
        throw MalformedSignature("empty signature");

    const auto tokens = split_dashes(raw);
    if (tokens.size() < 3)
        throw MalformedSignature("signature \"" + std::string(raw) + "\" needs fonds, category and a tail");

    Signature sig;
    sig.fonds = FondsCode::parse(tokens[0]);
    sig.category = CategoryCode::parse(tokens[1]);

    const std::size_t tail_count = tokens.size() - 2;
    const auto *tail = tokens.data() + 2;
    if (tail_count == 1) {
        if (!all_digits(tail[0]))
            throw MalformedSignature("bad item number \"" + std::string(tail[0]) + "\"");
        const int item = to_int(tail[0]);
        if (item < 1)
            throw MalformedSignature("item number must be positive");
        sig.tail = SequentialTail{ item, std::nullopt };
    } else if (tail_count == 2) {
        if (!all_digits(tail[0]))
            throw MalformedSignature("bad item number \"" + std::string(tail[0]) + "\"");
        const int item = to_int(tail[0]);
        if (item < 1)
            throw MalformedSignature("item number must be positive");
        sig.tail = SequentialTail{ item, GeneticState::parse(tail[1]) };
    } else if (tail_count == 3) {
        sig.tail = parse_chronological(tail[0], tail[1], tail[2]);
    } else if (tail_count == 4 && GeneticState::looks_like(tail[3])) {
        throw MalformedSignature("genetic states attach to sequential signatures only");
    } else {
        throw MalformedSignature("signature \"" + std::string(raw) + "\" has too many components");
    }
    return sig;
}

std::string format_signature(const Signature &sig) {
    std::string out = sig.fonds.code + "-" + sig.category.code + "-";
    if (const auto *seq = sig.sequential()) {
        out += pad(seq->item_no, 2);
        if (seq->genetic) {
            out += '-';
            out += seq->genetic->render();
        }
    } else {
        const auto &chrono = *sig.chronological();
        out += chrono.date.to_signature();
        if (chrono.disambiguator)
            out += *chrono.disambiguator;
    }
    return out;
}

SortKey sort_key(const Signature &sig) {
    if (const auto *seq = sig.sequential())
        return { sig.fonds.code, sig.category.code, 0, seq->item_no,
                 seq->genetic ? seq->genetic->copy_number : 0, 0, 0 };
    const auto &chrono = *sig.chronological();
    return { sig.fonds.code, sig.category.code, 1, chrono.date.year, chrono.date.month, chrono.date.day,
             chrono.disambiguator ? *chrono.disambiguator - 'a' + 1 : 0 };
}

bool signature_less(const Signature &a, const Signature &b) {
    return sort_key(a) < sort_key(b);
}

DisambiguationResult assign_disambiguator(std::span<const Signature> existing, const Signature &candidate) {
    const auto *chrono = candidate.chronological();
    if (chrono == nullptr || chrono->disambiguator)
        throw Error("assign_disambiguator: candidate must be chronological and letterless");

    bool used[26] = {};
    const Signature *bare_collision = nullptr;
    for (const auto &sig : existing) {
        const auto *other = sig.chronological();
        if (other == nullptr || sig.fonds != candidate.fonds || sig.category != candidate.category
            || other->date != chrono->date)
            continue;
        if (other->disambiguator)
            used[*other->disambiguator - 'a'] = true;
        else if (bare_collision == nullptr)
            bare_collision = &sig;
    }

    auto next_free = [&]() -> char {
        for (int i = 0; i < 26; ++i) {
            if (!used[i]) {
                used[i] = true;
                return static_cast<char>('a' + i);
            }
        }
        throw DisambiguatorExhausted("more than 26 items share the date " + chrono->date.to_signature());
    };

    DisambiguationResult result;
    if (bare_collision != nullptr) {
        Signature renamed = *bare_collision;
        std::get<ChronologicalTail>(renamed.tail).disambiguator = next_free();
        result.existing_rename = { *bare_collision, renamed };
    }
    result.candidate = candidate;
    if (bare_collision != nullptr || std::any_of(std::begin(used), std::end(used), [](bool b) { return b; }))
        std::get<ChronologicalTail>(result.candidate.tail).disambiguator = next_free();
    return result;
}

} // namespace fondskit
