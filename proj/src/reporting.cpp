#include "taxonomy/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace taxonomy {

using json = nlohmann::ordered_json;

bool ClassifiedCorpus::any_flags() const {
    return std::any_of(assets.begin(), assets.end(), [](const ClassifiedAsset& a) {
        return !a.classification.flags.empty();
    });
}

ClassifiedCorpus classify_corpus(const Corpus& corpus) {
    ClassifiedCorpus out;
    out.assets.reserve(corpus.assets.size());
    for (const auto& descriptor : corpus.assets) {
        out.assets.push_back({descriptor, classify(descriptor)});
    }
    return out;
}

namespace {

std::vector<std::string> reference_category_values() {
    return {"no_reference",
            "e_money_token",
            "asset_referenced_token",
            "referenced_non_stablecoin/wrapped",
            "referenced_non_stablecoin/liquid_staking",
            "referenced_non_stablecoin/other"};
}

std::vector<ReportDimension> build_report_dimensions() {
    std::vector<ReportDimension> dims;

    auto facet = [&dims](const char* name,
                         std::optional<std::string> (*get)(const ClassifiedAsset&)) {
        const FacetDimension* dim = find_facet_dimension(name);
        dims.push_back({name, dim->values, get, false});
    };

    facet("technical_standard", [](const ClassifiedAsset& a) -> std::optional<std::string> {
        switch (a.descriptor.technical_standard.kind) {
            case TechnicalStandard::Kind::native: return "native";
            case TechnicalStandard::Kind::erc20: return "erc20";
            case TechnicalStandard::Kind::other: return "other";
        }
        return std::nullopt;
    });
    facet("function", [](const ClassifiedAsset& a) -> std::optional<std::string> {
        return std::string(to_string(a.descriptor.function));
    });
    facet("issuer_kind", [](const ClassifiedAsset& a) -> std::optional<std::string> {
        return std::string(to_string(a.descriptor.issuer_kind));
    });
    facet("minting_type", [](const ClassifiedAsset& a) -> std::optional<std::string> {
        return std::string(to_string(a.descriptor.minting_type));
    });
    facet("yield_source", [](const ClassifiedAsset& a) -> std::optional<std::string> {
        return std::string(to_string(a.descriptor.yield_source));
    });
    facet("distribution_mechanism",
          [](const ClassifiedAsset& a) -> std::optional<std::string> {
              if (!a.descriptor.distribution_mechanism) return std::nullopt;
              return std::string(to_string(*a.descriptor.distribution_mechanism));
          });
    facet("redemption_mechanism", [](const ClassifiedAsset& a) -> std::optional<std::string> {
        return std::string(to_string(a.descriptor.redemption_mechanism));
    });
    facet("form_of_claim", [](const ClassifiedAsset& a) -> std::optional<std::string> {
        return std::string(to_string(a.descriptor.form_of_claim));
    });

    dims.push_back({"is_stablecoin",
                    {"true", "false"},
                    [](const ClassifiedAsset& a) -> std::optional<std::string> {
                        return std::string(a.descriptor.is_stablecoin ? "true" : "false");
                    },
                    false});

    // Derived axes. Centralisation buckets are reported in the order
    // decentralised, hybrid, centralised.
    dims.push_back({"centralisation",
                    {"decentralised", "hybrid", "centralised"},
                    [](const ClassifiedAsset& a) -> std::optional<std::string> {
                        return std::string(to_string(a.classification.centralisation));
                    },
                    true});
    dims.push_back({"reference_category", reference_category_values(),
                    [](const ClassifiedAsset& a) -> std::optional<std::string> {
                        return to_string(a.classification.reference_category);
                    },
                    true});
    dims.push_back({"legal_classification",
                    find_facet_dimension("legal_classification")->values,
                    [](const ClassifiedAsset& a) -> std::optional<std::string> {
                        auto v = a.classification.legal.reported();
                        if (!v) return std::nullopt;
                        return std::string(to_string(*v));
                    },
                    true});
    {
        std::vector<std::string> analogy_values;
        for (TradFiAnalogy v : kTradFiAnalogyUniverse) analogy_values.emplace_back(to_string(v));
        dims.push_back({"tradfi_analogy", std::move(analogy_values),
                        [](const ClassifiedAsset& a) -> std::optional<std::string> {
                            return std::string(to_string(a.classification.tradfi_analogy));
                        },
                        true});
    }
    return dims;
}

const ReportDimension& dimension_or_throw(std::string_view name) {
    const ReportDimension* dim = find_report_dimension(name);
    if (dim == nullptr) {
        throw std::invalid_argument("unknown dimension \"" + std::string(name) +
                                    "\"; valid dimensions: " + report_dimension_names());
    }
    return *dim;
}

}  // namespace

const std::vector<ReportDimension>& report_dimensions() {
    static const std::vector<ReportDimension> dims = build_report_dimensions();
    return dims;
}

const ReportDimension* find_report_dimension(std::string_view name) {
    for (const auto& dim : report_dimensions()) {
        if (dim.name == name) return &dim;
    }
    return nullptr;
}

std::string report_dimension_names() {
    std::string out;
    for (const auto& dim : report_dimensions()) {
        if (!out.empty()) out += ", ";
        out += dim.name;
    }
    return out;
}

FacetDistribution facet_distribution(const ClassifiedCorpus& corpus,
                                     std::string_view dimension) {
    const ReportDimension& dim = dimension_or_throw(dimension);
    FacetDistribution dist;
    dist.dimension = dim.name;
    dist.total = corpus.assets.size();

    std::map<std::string, std::size_t> counts;
    std::size_t unclassified = 0;
    for (const auto& asset : corpus.assets) {
        auto value = dim.value_of(asset);
        if (value) {
            ++counts[*value];
        } else {
            ++unclassified;
        }
    }
    for (const auto& value : dim.values) {
        auto it = counts.find(value);
        dist.counts.emplace_back(value, it == counts.end() ? 0 : it->second);
    }
    dist.counts.emplace_back("unclassified", unclassified);
    return dist;
}

BucketTable bucket_table(const ClassifiedCorpus& corpus, std::string_view dimension) {
    const ReportDimension& dim = dimension_or_throw(dimension);
    BucketTable table;
    table.dimension = dim.name;

    std::map<std::string, std::vector<std::string>> buckets;
    std::vector<std::string> unclassified;
    for (const auto& asset : corpus.assets) {
        auto value = dim.value_of(asset);
        if (value) {
            buckets[*value].push_back(asset.descriptor.id);
        } else {
            unclassified.push_back(asset.descriptor.id);
        }
    }
    for (const auto& value : dim.values) {
        auto it = buckets.find(value);
        table.buckets.emplace_back(
            value, it == buckets.end() ? std::vector<std::string>{} : it->second);
    }
    table.buckets.emplace_back("unclassified", std::move(unclassified));
    return table;
}

ParallelSetReport parallel_set_paths(const ClassifiedCorpus& corpus,
                                     const std::vector<std::string>& dimensions) {
    if (dimensions.size() < 2) {
        throw std::invalid_argument("parallel sets need at least 2 dimensions (got " +
                                    std::to_string(dimensions.size()) + ")");
    }
    std::vector<const ReportDimension*> dims;
    dims.reserve(dimensions.size());
    for (const auto& name : dimensions) dims.push_back(&dimension_or_throw(name));

    ParallelSetReport report;
    report.dimensions = dimensions;

    struct Accumulator {
        std::size_t count = 0;
        double cap_sum = 0.0;
        std::size_t cap_members = 0;
    };
    std::map<std::vector<std::string>, Accumulator> groups;

    for (const auto& asset : corpus.assets) {
        std::vector<std::string> tuple;
        tuple.reserve(dims.size());
        bool complete = true;
        for (const ReportDimension* dim : dims) {
            auto value = dim->value_of(asset);
            if (!value) {
                complete = false;
                break;
            }
            tuple.push_back(std::move(*value));
        }
        if (!complete) {
            report.excluded_ids.push_back(asset.descriptor.id);
            continue;
        }
        Accumulator& acc = groups[std::move(tuple)];
        ++acc.count;
        if (asset.descriptor.metadata && asset.descriptor.metadata->market_cap_usd > 0.0) {
            acc.cap_sum += asset.descriptor.metadata->market_cap_usd;
            ++acc.cap_members;
        }
    }

    for (const auto& [tuple, acc] : groups) {
        ParallelSetPath path;
        path.values = tuple;
        path.count = acc.count;
        if (acc.cap_members > 0) {
            path.colour_value = std::log10(acc.cap_sum / static_cast<double>(acc.cap_members));
        }
        report.paths.push_back(std::move(path));
    }
    return report;
}

std::string centralisation_summary(const ClassifiedCorpus& corpus) {
    FacetDistribution dist = facet_distribution(corpus, "centralisation");
    std::string out;
    for (const auto& [value, count] : dist.counts) {
        if (value == "unclassified" && count == 0) continue;
        if (!out.empty()) out += ' ';
        out += value + ":" + std::to_string(count);
    }
    return out;
}

namespace {

json classification_record(const ClassifiedAsset& asset, bool include_trace) {
    const DerivedClassification& c = asset.classification;
    json record = json::object();
    record["id"] = c.id;
    record["centralisation"] = to_string(c.centralisation);
    record["reference_category"] = to_string(c.reference_category);
    auto legal = c.legal.reported();
    record["legal_classification"] = legal ? to_string(*legal) : "unclassified";
    record["tradfi_analogy"] = to_string(c.tradfi_analogy);
    record["flags"] = c.flags;
    json trace = json::array();
    if (include_trace) {
        for (const auto& step : c.trace.steps) {
            trace.push_back({{"rule_id", step.rule_id},
                             {"predicate", step.predicate},
                             {"result", step.result}});
        }
    }
    record["trace"] = std::move(trace);
    return record;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + path);
}

std::string format_colour(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", value);
    return buf;
}

}  // namespace

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string classifications_to_json(const ClassifiedCorpus& corpus, bool include_trace) {
    json doc = json::array();
    for (const auto& asset : corpus.assets) {
        doc.push_back(classification_record(asset, include_trace));
    }
    return doc.dump(2) + "\n";
}

void write_classifications_json(const ClassifiedCorpus& corpus, bool include_trace,
                                const std::string& path) {
    write_text_file(path, classifications_to_json(corpus, include_trace));
}

void write_report_bundle(const ClassifiedCorpus& corpus, const ReportBundleOptions& options,
                         const std::string& out_dir) {
    // Validate the axes before any file is touched.
    ParallelSetReport parallel = parallel_set_paths(corpus, options.dims);

    std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create directory " + out_dir + ": " + ec.message());

    {
        std::ostringstream csv;
        csv << "dimension,value,count\n";
        for (const auto& dim : report_dimensions()) {
            FacetDistribution dist = facet_distribution(corpus, dim.name);
            for (const auto& [value, count] : dist.counts) {
                csv << csv_escape(dist.dimension) << "," << csv_escape(value) << ","
                    << count << "\n";
            }
        }
        write_text_file((dir / "distributions.csv").string(), csv.str());
    }

    const std::vector<std::string> bucket_dims = {"centralisation", "tradfi_analogy",
                                                  "legal_classification",
                                                  "reference_category"};
    {
        std::ostringstream csv;
        csv << "dimension,bucket,asset_id\n";
        for (const auto& name : bucket_dims) {
            BucketTable table = bucket_table(corpus, name);
            for (const auto& [bucket, ids] : table.buckets) {
                for (const auto& id : ids) {
                    csv << csv_escape(table.dimension) << "," << csv_escape(bucket) << ","
                        << csv_escape(id) << "\n";
                }
            }
        }
        write_text_file((dir / "buckets.csv").string(), csv.str());
    }

    {
        std::ostringstream csv;
        for (const auto& name : parallel.dimensions) csv << csv_escape(name) << ",";
        csv << "count,colour_value\n";
        for (const auto& path : parallel.paths) {
            for (const auto& value : path.values) csv << csv_escape(value) << ",";
            csv << path.count << ",";
            if (path.colour_value) csv << format_colour(*path.colour_value);
            csv << "\n";
        }
        write_text_file((dir / "parallel_sets.csv").string(), csv.str());
    }

    write_classifications_json(corpus, options.include_trace,
                               (dir / "classifications.json").string());

    {
        std::ostringstream md;
        md << "# Classification report\n\n";
        md << "Assets: " << corpus.assets.size() << "\n\n";

        md << "## Centralisation\n\n";
        md << "| label | count |\n|---|---|\n";
        for (const auto& [value, count] :
             facet_distribution(corpus, "centralisation").counts) {
            md << "| " << value << " | " << count << " |\n";
        }
        md << "\n";

        md << "## TradFi analogies\n\n";
        md << "| analogy | assets |\n|---|---|\n";
        for (const auto& [bucket, ids] : bucket_table(corpus, "tradfi_analogy").buckets) {
            md << "| " << bucket << " | ";
            for (std::size_t i = 0; i < ids.size(); ++i) {
                if (i > 0) md << ", ";
                md << ids[i];
            }
            md << " |\n";
        }
        md << "\n";

        md << "## Parallel sets\n\n";
        md << "Dimensions: ";
        for (std::size_t i = 0; i < parallel.dimensions.size(); ++i) {
            if (i > 0) md << ", ";
            md << parallel.dimensions[i];
        }
        md << "\n\nPaths: " << parallel.paths.size() << "\n";
        md << "\nExcluded (missing a dimension): ";
        if (parallel.excluded_ids.empty()) {
            md << "none";
        } else {
            for (std::size_t i = 0; i < parallel.excluded_ids.size(); ++i) {
                if (i > 0) md << ", ";
                md << parallel.excluded_ids[i];
            }
        }
        md << "\n";

        std::vector<std::pair<std::string, std::vector<std::string>>> flagged;
        for (const auto& asset : corpus.assets) {
            if (!asset.classification.flags.empty()) {
                flagged.emplace_back(asset.descriptor.id, asset.classification.flags);
            }
        }
        md << "\n## Flags\n\n";
        if (flagged.empty()) {
            md << "none\n";
        } else {
            for (const auto& [id, flags] : flagged) {
                md << "- " << id << ": ";
                for (std::size_t i = 0; i < flags.size(); ++i) {
                    if (i > 0) md << ", ";
                    md << flags[i];
                }
                md << "\n";
            }
        }
        write_text_file((dir / "summary.md").string(), md.str());
    }
}

}  // namespace taxonomy
