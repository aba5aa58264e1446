#include "taxonomy/validation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace taxonomy {

std::size_t ValidationReport::error_count() const {
    return static_cast<std::size_t>(
        std::count_if(issues.begin(), issues.end(),
                      [](const ValidationIssue& i) { return i.severity == Severity::error; }));
}

std::size_t ValidationReport::warning_count() const {
    return issues.size() - error_count();
}

void ValidationReport::error(std::string path, std::string message) {
    issues.push_back({Severity::error, std::move(path), std::move(message)});
}

void ValidationReport::warning(std::string path, std::string message) {
    issues.push_back({Severity::warning, std::move(path), std::move(message)});
}

void ValidationReport::merge(const ValidationReport& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
}

std::string ValidationReport::to_text() const {
    std::ostringstream out;
    for (const auto& issue : issues) {
        if (issue.severity == Severity::warning) out << "warning: ";
        out << issue.path << ": " << issue.message << "\n";
    }
    return out.str();
}

namespace {

std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t next_diag = row[j];
            std::size_t cost = (a[i - 1] == b[j - 1]) ? 0 : 1;
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
            diag = next_diag;
        }
    }
    return row[b.size()];
}

bool contains_whitespace(std::string_view s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

std::string nearest_literal(std::string_view value,
                            const std::vector<std::string>& candidates) {
    std::string best;
    std::size_t best_dist = 4;  // anything further is not a plausible typo
    for (const auto& c : candidates) {
        std::size_t d = edit_distance(value, c);
        if (d < best_dist || (d == best_dist && !best.empty() && c < best)) {
            if (d < best_dist) best_dist = d;
            best = c;
        }
    }
    return best;
}

void check_descriptor_invariants(const AssetDescriptor& d, const std::string& path,
                                 ValidationReport& report) {
    auto at = [&path](std::string_view field) {
        return path.empty() ? std::string(field) : path + "." + std::string(field);
    };

    if (d.id.empty()) report.error(at("id"), "id must be non-empty");
    if (d.symbol.empty()) report.error(at("symbol"), "symbol must be non-empty");

    if (d.reference) {
        if (d.reference->symbol.empty()) {
            report.error(at("reference.symbol"), "reference symbol must be non-empty");
        } else if (contains_whitespace(d.reference->symbol)) {
            report.error(at("reference.symbol"),
                         "reference symbol '" + d.reference->symbol +
                             "' must not contain whitespace");
        }
    }

    // yield_source = none <=> distribution_mechanism = none. An unspecified
    // distribution (nullopt) is only admissible alongside a non-none yield.
    const bool yield_none = d.yield_source == YieldSource::none;
    if (yield_none) {
        if (!d.distribution_is(DistributionMechanism::none)) {
            std::string got = d.distribution_mechanism
                                  ? to_string(*d.distribution_mechanism)
                                  : "unspecified";
            report.error(at("distribution_mechanism"),
                         "yield/distribution mismatch: yield_source=none requires "
                         "distribution_mechanism=none (got " +
                             got + ")");
        }
    } else if (d.distribution_is(DistributionMechanism::none)) {
        report.error(at("distribution_mechanism"),
                     "yield/distribution mismatch: yield_source=" +
                         std::string(to_string(d.yield_source)) +
                         " requires a non-none distribution_mechanism");
    }

    if (d.redemption_mechanism != RedemptionMechanism::none && !d.reference) {
        report.error(at("redemption_mechanism"),
                     std::string("redemption_mechanism=") +
                         to_string(d.redemption_mechanism) +
                         " requires a reference asset");
    }

    if (d.is_stablecoin && !d.reference) {
        report.error(at("is_stablecoin"), "stablecoin requires reference");
    }

    if (d.issuer_kind == IssuerKind::none &&
        d.minting_type != MintingType::consensus &&
        d.minting_type != MintingType::pre_mined) {
        report.error(at("minting_type"),
                     std::string("issuer_kind=none admits only consensus or pre_mined "
                                 "minting (got ") +
                         to_string(d.minting_type) + ")");
    }

    for (const auto& [sub, resources] : d.critical_resource_surface.entries) {
        for (const auto& [resource, parties] : resources) {
            std::string rpath =
                at("critical_resource_surface") + "." + to_string(sub) + "." + resource;
            if (parties && *parties < 1) {
                report.error(rpath, "party count must be >= 1 when present");
            }
            const auto& vocab = known_resources(sub);
            if (std::find(vocab.begin(), vocab.end(), resource) == vocab.end()) {
                report.warning(rpath, "resource name '" + resource +
                                          "' is not in the default vocabulary for " +
                                          to_string(sub));
            }
        }
    }

    if (d.metadata && d.metadata->market_cap_usd < 0.0) {
        report.error(at("metadata.market_cap_usd"), "market_cap_usd must be non-negative");
    }
    if (d.metadata && !d.metadata->snapshot_date.valid()) {
        report.error(at("metadata.snapshot_date"), "snapshot_date is not a valid date");
    }
}

}  // namespace taxonomy
