// Structural validation. Validation is total: every check runs and every
// finding is collected; nothing aborts mid-record.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "taxonomy/asset.hpp"

namespace taxonomy {

enum class Severity { error, warning };

struct ValidationIssue {
    Severity severity = Severity::error;
    std::string path;     // e.g. "assets[3].distribution_mechanism"
    std::string message;  // names the value and the violated rule

    bool operator==(const ValidationIssue&) const = default;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return error_count() == 0; }
    std::size_t error_count() const;
    std::size_t warning_count() const;

    void error(std::string path, std::string message);
    void warning(std::string path, std::string message);
    void merge(const ValidationReport& other);

    // One "path: message" line per issue, warnings marked as such.
    std::string to_text() const;
};

// Parse mode for descriptor files: strict rejects unknown keys, lenient
// downgrades them to warnings. Everything else behaves the same.
enum class ParseMode { strict, lenient };

// Semantic invariants over an already-constructed descriptor (in-memory
// construction path). The JSON path runs these same checks after parsing.
// `path` prefixes every issue so batch callers can point at the asset.
void check_descriptor_invariants(const AssetDescriptor& d, const std::string& path,
                                 ValidationReport& report);

// Closest literal out of `candidates` by edit distance, or empty when nothing
// is plausibly close. Used for unknown-facet hints.
std::string nearest_literal(std::string_view value,
                            const std::vector<std::string>& candidates);

}  // namespace taxonomy
