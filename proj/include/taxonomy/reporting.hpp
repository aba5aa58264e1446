#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taxonomy/classification.hpp"
#include "taxonomy/corpus.hpp"

namespace taxonomy {

struct ClassifiedAsset {
    AssetDescriptor descriptor;
    DerivedClassification classification;
};

struct ClassifiedCorpus {
    std::vector<ClassifiedAsset> assets;  // corpus order preserved

    bool any_flags() const;
};

ClassifiedCorpus classify_corpus(const Corpus& corpus);

// A reportable axis: a stable name, the ordered bucket values, and a getter
// that may return absent (counted under the "unclassified" bucket).
struct ReportDimension {
    std::string name;
    std::vector<std::string> values;
    std::function<std::optional<std::string>(const ClassifiedAsset&)> value_of;
    bool derived = false;  // computed by the engines rather than read off the file
};

const std::vector<ReportDimension>& report_dimensions();
const ReportDimension* find_report_dimension(std::string_view name);

// Comma-separated list of valid dimension names for error messages.
std::string report_dimension_names();

struct FacetDistribution {
    std::string dimension;
    // Universe order, zero counts included, with a trailing "unclassified"
    // bucket so that counts always sum to total.
    std::vector<std::pair<std::string, std::size_t>> counts;
    std::size_t total = 0;
};

// Throws std::invalid_argument for unknown dimensions.
FacetDistribution facet_distribution(const ClassifiedCorpus& corpus,
                                     std::string_view dimension);

struct BucketTable {
    std::string dimension;
    // Universe order plus trailing "unclassified"; ids in corpus order.
    std::vector<std::pair<std::string, std::vector<std::string>>> buckets;
};

// Throws std::invalid_argument for unknown dimensions.
BucketTable bucket_table(const ClassifiedCorpus& corpus, std::string_view dimension);

struct ParallelSetPath {
    std::vector<std::string> values;  // one per requested dimension, in order
    std::size_t count = 0;
    // log10 of the mean market cap over members with a positive cap; absent
    // when no member carries one.
    std::optional<double> colour_value;
};

struct ParallelSetReport {
    std::vector<std::string> dimensions;
    std::vector<ParallelSetPath> paths;      // sorted by value tuple
    std::vector<std::string> excluded_ids;   // assets missing any dimension
};

// Throws std::invalid_argument for unknown dimensions or fewer than two.
ParallelSetReport parallel_set_paths(const ClassifiedCorpus& corpus,
                                     const std::vector<std::string>& dimensions);

// "decentralised:6 hybrid:1 centralised:2" in reporting order.
std::string centralisation_summary(const ClassifiedCorpus& corpus);

// Per-asset machine-readable record; trace steps included only on request.
std::string classifications_to_json(const ClassifiedCorpus& corpus, bool include_trace);

struct ReportBundleOptions {
    std::vector<std::string> dims;  // parallel-set axes, >= 2
    bool include_trace = false;
};

// Writes distributions.csv, buckets.csv, parallel_sets.csv,
// classifications.json and summary.md into out_dir (created if missing).
// Throws std::invalid_argument for bad dimensions, std::runtime_error on I/O
// failure. Output is byte-deterministic for a given corpus and options.
void write_report_bundle(const ClassifiedCorpus& corpus, const ReportBundleOptions& options,
                         const std::string& out_dir);

// Writes just the classification records (cmd_classify --out).
void write_classifications_json(const ClassifiedCorpus& corpus, bool include_trace,
                                const std::string& path);

// CSV field quoting for values containing comma, quote, or newline.
std::string csv_escape(const std::string& field);

}  // namespace taxonomy
