#pragma once

#include <string>
#include <vector>

namespace fondskit {

enum class Severity { warning, error };

inline const char *to_string(Severity s) {
    return s == Severity::error ? "error" : "warning";
}

/// One data-quality observation. Findings are data, not failures: dirty
/// archival input is reported, never rejected wholesale. `before`/`after`
/// are filled by normalization passes only.
struct Finding {
    Severity severity = Severity::warning;
    std::string signature; // record key, person id, or empty for fonds-level
    std::string field;
    std::string message;
    std::string before;
    std::string after;

    bool operator==(const Finding &) const = default;
};

bool has_errors(const std::vector<Finding> &findings);

/// Deterministic report order: signature, then field, then message.
void sort_findings(std::vector<Finding> &findings);

} // namespace fondskit
