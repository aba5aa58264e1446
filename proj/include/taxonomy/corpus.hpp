#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taxonomy/asset.hpp"
#include "taxonomy/holders.hpp"
#include "taxonomy/validation.hpp"

namespace taxonomy {

struct CorpusProvenance {
    std::string source;
    std::optional<Date> snapshot_date;

    bool operator==(const CorpusProvenance&) const = default;
};

struct Corpus {
    int version = 1;
    std::vector<AssetDescriptor> assets;  // file order preserved
    std::optional<CorpusProvenance> provenance;

    bool operator==(const Corpus&) const = default;

    const AssetDescriptor* find(const std::string& id) const;
};

struct CorpusLoadResult {
    std::optional<Corpus> corpus;  // absent whenever the report holds errors
    ValidationReport report;
    LoadStatus status = LoadStatus::ok;
};

// Parses a descriptor corpus from JSON text. Every problem is reported with a
// field path (e.g. assets[2].distribution_mechanism); a corpus with any error
// is never partially accepted. Unknown keys are errors in strict mode and
// warnings in lenient mode.
CorpusLoadResult parse_corpus(const std::string& text, ParseMode mode = ParseMode::strict);

// Reads and parses a corpus file from disk.
CorpusLoadResult load_corpus(const std::string& path, ParseMode mode = ParseMode::strict);

// Deterministic serialization: fixed key order, every field present (null for
// absent optionals), two-space indentation. parse(serialize(c)) == c for any
// valid corpus.
std::string serialize_corpus(const Corpus& corpus);

// Writes serialize_corpus() output to a file; returns false and fills *error
// on I/O failure.
bool write_corpus(const Corpus& corpus, const std::string& path, std::string* error);

}  // namespace taxonomy
