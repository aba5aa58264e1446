// taxonomy: validate, classify, and report over crypto-asset descriptor
// corpora, plus holder-snapshot concentration checks.
//
// Exit codes: 0 success; 1 data findings (validation errors, classification
// flags, degenerate snapshots); 2 usage or I/O errors.
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "taxonomy/centralisation.hpp"
#include "taxonomy/classification.hpp"
#include "taxonomy/corpus.hpp"
#include "taxonomy/holders.hpp"
#include "taxonomy/reporting.hpp"

namespace {

using namespace taxonomy;

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

struct ModeFlags {
    bool strict = false;
    bool lenient = false;
};

void add_mode_flags(CLI::App* cmd, ModeFlags& flags) {
    auto* strict = cmd->add_flag("--strict", flags.strict,
                               "treat unknown descriptor keys as errors");
    cmd->add_flag("--lenient", flags.lenient,
                  "downgrade unknown descriptor keys to warnings")
        ->excludes(strict);
}

// Explicit flags win; otherwise TAXONOMY_STRICT=1 forces strict; otherwise
// the command's default applies.
ParseMode resolve_mode(const ModeFlags& flags, ParseMode fallback) {
    if (flags.lenient) return ParseMode::lenient;
    if (flags.strict) return ParseMode::strict;
    const char* env = std::getenv("TAXONOMY_STRICT");
    if (env != nullptr && std::string(env) == "1") return ParseMode::strict;
    return fallback;
}

// Loads a corpus, printing the report; returns nullopt with *exit_code set
// when the command should stop.
std::optional<Corpus> load_or_fail(const std::string& path, ParseMode mode,
                                   int* exit_code) {
    CorpusLoadResult loaded = load_corpus(path, mode);
    if (loaded.status == LoadStatus::io_error) {
        std::cerr << loaded.report.to_text();
        *exit_code = kExitUsage;
        return std::nullopt;
    }
    std::cout << loaded.report.to_text();
    if (!loaded.corpus) {
        *exit_code = kExitFindings;
        return std::nullopt;
    }
    return std::move(*loaded.corpus);
}

int run_validate(const std::string& path, ParseMode mode) {
    int exit_code = kExitOk;
    auto corpus = load_or_fail(path, mode, &exit_code);
    if (!corpus) return exit_code;
    std::cout << corpus->assets.size() << " assets valid\n";
    return kExitOk;
}

int run_classify(const std::string& path, ParseMode mode, bool explain,
                 const std::string& out_dir) {
    int exit_code = kExitOk;
    auto corpus = load_or_fail(path, mode, &exit_code);
    if (!corpus) return exit_code;

    ClassifiedCorpus classified = classify_corpus(*corpus);
    for (const auto& asset : classified.assets) {
        const DerivedClassification& c = asset.classification;
        auto legal = c.legal.reported();
        std::cout << c.id << "  " << to_string(c.centralisation) << "  "
                  << to_string(c.reference_category) << "  "
                  << (legal ? to_string(*legal) : "unclassified") << "  "
                  << to_string(c.tradfi_analogy);
        if (!c.flags.empty()) {
            std::cout << "  [";
            for (std::size_t i = 0; i < c.flags.size(); ++i) {
                if (i > 0) std::cout << ",";
                std::cout << c.flags[i];
            }
            std::cout << "]";
        }
        std::cout << "\n";
        if (explain) {
            for (const auto& line : format_trace(c.trace)) {
                std::cout << "  " << line << "\n";
            }
        }
    }

    if (!out_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) {
            std::cerr << "cannot create directory " << out_dir << ": " << ec.message()
                      << "\n";
            return kExitUsage;
        }
        write_classifications_json(classified, explain,
                                   (std::filesystem::path(out_dir) / "classifications.json")
                                       .string());
    }

    return classified.any_flags() ? kExitFindings : kExitOk;
}

int run_report(const std::string& path, ParseMode mode, const std::vector<std::string>& dims,
               const std::string& out_dir) {
    int exit_code = kExitOk;
    auto corpus = load_or_fail(path, mode, &exit_code);
    if (!corpus) return exit_code;

    ClassifiedCorpus classified = classify_corpus(*corpus);
    try {
        write_report_bundle(classified, {dims, /*include_trace=*/false}, out_dir);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    std::cout << centralisation_summary(classified) << "\n";
    return kExitOk;
}

int run_concentration(const std::string& snapshot_path, const std::string& asset_id,
                      const std::string& corpus_path, bool write_back, bool overwrite,
                      ParseMode mode) {
    SnapshotLoadResult loaded = load_holder_csv(snapshot_path);
    if (loaded.status == LoadStatus::io_error) {
        std::cerr << loaded.report.to_text();
        return kExitUsage;
    }
    // Metadata warnings are routine; surface only errors here.
    for (const auto& issue : loaded.report.issues) {
        if (issue.severity == Severity::error) {
            std::cout << issue.path << ": " << issue.message << "\n";
        }
    }
    if (!loaded.snapshot) return kExitFindings;

    OwnershipConcentration concentration;
    try {
        concentration = ownership_concentration(*loaded.snapshot);
    } catch (const std::invalid_argument& e) {
        std::cout << e.what() << "\n";
        return kExitFindings;
    }
    std::cout << "top_share=" << top_share_percent(concentration) << "% parties="
              << (concentration.parties ? std::to_string(*concentration.parties)
                                        : "unbounded")
              << "\n";

    if (!write_back) return kExitOk;

    int exit_code = kExitOk;
    auto corpus = load_or_fail(corpus_path, mode, &exit_code);
    if (!corpus) return exit_code;
    bool found = false;
    for (auto& asset : corpus->assets) {
        if (asset.id != asset_id) continue;
        found = true;
        auto& entries = asset.critical_resource_surface.entries[SubDimension::market_ownership];
        if (concentration.parties) {
            entries["on_chain_holder"] = static_cast<std::uint64_t>(*concentration.parties);
        } else {
            entries["on_chain_holder"] = std::nullopt;
        }
        break;
    }
    if (!found) {
        std::cerr << "asset \"" << asset_id << "\" not found in " << corpus_path << "\n";
        return kExitUsage;
    }

    std::filesystem::path target(corpus_path);
    if (!overwrite) {
        std::filesystem::path sibling = target;
        sibling.replace_extension();  // drop .json
        sibling += ".updated.json";
        target = sibling;
    }
    std::string error;
    if (!write_corpus(*corpus, target.string(), &error)) {
        std::cerr << error << "\n";
        return kExitUsage;
    }
    std::cout << "wrote " << target.string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic crypto-asset taxonomy classifier"};
    app.require_subcommand(1);

    std::string validate_path;
    ModeFlags validate_mode;
    auto* validate_cmd = app.add_subcommand("validate", "validate a descriptor corpus");
    validate_cmd->add_option("corpus", validate_path, "corpus JSON file")->required();
    add_mode_flags(validate_cmd, validate_mode);

    std::string classify_path;
    std::string classify_out;
    bool classify_explain = false;
    ModeFlags classify_mode;
    auto* classify_cmd = app.add_subcommand("classify", "derive per-asset classifications");
    classify_cmd->add_option("corpus", classify_path, "corpus JSON file")->required();
    classify_cmd->add_flag("--explain", classify_explain, "print decision traces");
    classify_cmd->add_option("--out", classify_out, "directory for classifications.json");
    add_mode_flags(classify_cmd, classify_mode);

    std::string report_path;
    std::string report_out;
    std::string report_dims;
    ModeFlags report_mode;
    auto* report_cmd = app.add_subcommand("report", "write the aggregate report bundle");
    report_cmd->add_option("corpus", report_path, "corpus JSON file")->required();
    report_cmd->add_option("--dims", report_dims,
                           "comma-separated parallel-set dimensions (>= 2)")
        ->required();
    report_cmd->add_option("--out", report_out, "output directory")->required();
    add_mode_flags(report_cmd, report_mode);

    std::string conc_path;
    std::string conc_asset;
    std::string conc_corpus;
    bool conc_write_back = false;
    bool conc_overwrite = false;
    ModeFlags conc_mode;
    auto* conc_cmd = app.add_subcommand("concentration",
                                        "holder-snapshot ownership concentration");
    conc_cmd->add_option("snapshot", conc_path, "holder snapshot CSV file")->required();
    auto* asset_opt = conc_cmd->add_option("--asset", conc_asset, "asset id to update");
    auto* corpus_opt = conc_cmd->add_option("--corpus", conc_corpus, "corpus JSON file");
    conc_cmd->add_flag("--write-back", conc_write_back,
                       "write the derived party count into the asset's surface")
        ->needs(asset_opt)
        ->needs(corpus_opt);
    conc_cmd->add_flag("--overwrite", conc_overwrite,
                       "write back to the corpus file itself instead of a sibling");
    add_mode_flags(conc_cmd, conc_mode);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*validate_cmd) {
        return run_validate(validate_path, resolve_mode(validate_mode, ParseMode::strict));
    }
    if (*classify_cmd) {
        return run_classify(classify_path, resolve_mode(classify_mode, ParseMode::lenient),
                            classify_explain, classify_out);
    }
    if (*report_cmd) {
        std::vector<std::string> dims;
        std::string current;
        for (char c : report_dims) {
            if (c == ',') {
                if (!current.empty()) dims.push_back(current);
                current.clear();
            } else {
                current += c;
            }
        }
        if (!current.empty()) dims.push_back(current);
        return run_report(report_path, resolve_mode(report_mode, ParseMode::lenient), dims,
                          report_out);
    }
    if (*conc_cmd) {
        return run_concentration(conc_path, conc_asset, conc_corpus, conc_write_back,
                                 conc_overwrite,
                                 resolve_mode(conc_mode, ParseMode::lenient));
    }
    return kExitUsage;
}
