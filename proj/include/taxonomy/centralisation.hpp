#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taxonomy/asset.hpp"
#include "taxonomy/decimal.hpp"
#include "taxonomy/holders.hpp"
#include "taxonomy/surface.hpp"

namespace taxonomy {

enum class GroupStatus { pass, fail, not_applicable };

const char* to_string(GroupStatus s);

struct GroupOutcome {
    FunctionalGroup group;
    GroupStatus status = GroupStatus::not_applicable;
    // Resources with an identified unilateral controller (j = 1).
    // Non-empty iff status == fail.
    std::vector<std::pair<SubDimension, std::string>> failing_resources;

    bool operator==(const GroupOutcome&) const = default;
};

enum class CentralisationLabel { centralised, decentralised, hybrid };

const char* to_string(CentralisationLabel label);
std::optional<CentralisationLabel> parse_centralisation_label(std::string_view text);

// Minimum-decentralisation check for one sub-dimension: fails iff any listed
// resource is controlled by exactly one party; absent/unbounded counts pass.
bool subdimension_passes(const ResourceEntries& entries);

// Evaluates the six functional groups in canonical order. Governance and
// minting are always applicable; yield only for yielding assets; redemption
// when a reference or a redemption mechanism exists; market/community only
// when their sub-dimensions carry entries.
std::vector<GroupOutcome> evaluate_groups(const CriticalResourceSurface& surface,
                                          const AssetDescriptor& descriptor);

// Collapses group outcomes into the three-way label: decentralised when every
// applicable group passes; centralised when the applicable core groups
// (governance/minting/yield/redemption) are non-empty and all fail; hybrid
// otherwise. Throws std::invalid_argument unless given exactly one outcome
// per group.
CentralisationLabel centralisation_label(const std::vector<GroupOutcome>& outcomes);

struct OwnershipConcentration {
    Decimal top_balance;   // largest balance within the top-100 restriction
    Decimal top100_sum;    // sum over the top-100 balances
    std::optional<int> parties;  // 1 when the top holder controls > 60%
};

// Restricts the snapshot to its 100 largest balances and applies the strict
// 60% single-holder rule. Throws std::invalid_argument on an empty or
// all-zero snapshot ("degenerate snapshot").
OwnershipConcentration ownership_concentration(const HolderSnapshot& snapshot);

// Convenience wrapper returning only the bounded party count (1 or absent).
std::optional<int> ownership_parties(const HolderSnapshot& snapshot);

// Top-holder share of the top-100 sum as a fixed two-decimal percentage
// string, e.g. "61.00".
std::string top_share_percent(const OwnershipConcentration& c);

}  // namespace taxonomy
