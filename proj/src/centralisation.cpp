#include "taxonomy/centralisation.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace taxonomy {

const char* to_string(GroupStatus s) {
    switch (s) {
        case GroupStatus::pass: return "pass";
        case GroupStatus::fail: return "fail";
        case GroupStatus::not_applicable: return "not_applicable";
    }
    return "?";
}

const char* to_string(CentralisationLabel label) {
    switch (label) {
        case CentralisationLabel::centralised: return "centralised";
        case CentralisationLabel::decentralised: return "decentralised";
        case CentralisationLabel::hybrid: return "hybrid";
    }
    return "?";
}

std::optional<CentralisationLabel> parse_centralisation_label(std::string_view text) {
    if (text == "centralised") return CentralisationLabel::centralised;
    if (text == "decentralised") return CentralisationLabel::decentralised;
    if (text == "hybrid") return CentralisationLabel::hybrid;
    return std::nullopt;
}

bool subdimension_passes(const ResourceEntries& entries) {
    for (const auto& [resource, parties] : entries) {
        if (parties && *parties == 1) return false;
    }
    return true;
}

namespace {

bool group_applicable(FunctionalGroup group, const CriticalResourceSurface& surface,
                      const AssetDescriptor& descriptor) {
    switch (group) {
        case FunctionalGroup::governance:
        case FunctionalGroup::minting:
            return true;
        case FunctionalGroup::yield:
            return descriptor.yield_source != YieldSource::none;
        case FunctionalGroup::redemption:
            return descriptor.reference.has_value() ||
                   descriptor.redemption_mechanism != RedemptionMechanism::none;
        case FunctionalGroup::market:
        case FunctionalGroup::community:
            return surface.group_has_entries(group);
    }
    return false;
}

}  // namespace

std::vector<GroupOutcome> evaluate_groups(const CriticalResourceSurface& surface,
                                          const AssetDescriptor& descriptor) {
    std::vector<GroupOutcome> outcomes;
    outcomes.reserve(kFunctionalGroupUniverse.size());
    for (FunctionalGroup group : kFunctionalGroupUniverse) {
        GroupOutcome outcome;
        outcome.group = group;
        if (!group_applicable(group, surface, descriptor)) {
            outcome.status = GroupStatus::not_applicable;
            outcomes.push_back(std::move(outcome));
            continue;
        }
        for (SubDimension sub : sub_dimensions_of(group)) {
            const ResourceEntries* entries = surface.find(sub);
            if (!entries) continue;
            for (const auto& [resource, parties] : *entries) {
                if (parties && *parties == 1) {
                    outcome.failing_resources.emplace_back(sub, resource);
                }
            }
        }
        outcome.status = outcome.failing_resources.empty() ? GroupStatus::pass
                                                           : GroupStatus::fail;
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

CentralisationLabel centralisation_label(const std::vector<GroupOutcome>& outcomes) {
    if (outcomes.size() != kFunctionalGroupUniverse.size()) {
        throw std::invalid_argument("expected exactly one outcome per functional group");
    }
    std::array<bool, 6> seen{};
    for (const auto& outcome : outcomes) {
        auto idx = static_cast<std::size_t>(outcome.group);
        if (idx >= seen.size() || seen[idx]) {
            throw std::invalid_argument("expected exactly one outcome per functional group");
        }
        seen[idx] = true;
    }

    bool all_applicable_pass = true;
    bool any_core_applicable = false;
    bool all_core_fail = true;
    for (const auto& outcome : outcomes) {
        if (outcome.status == GroupStatus::not_applicable) continue;
        if (outcome.status != GroupStatus::pass) all_applicable_pass = false;
        if (is_core_group(outcome.group)) {
            any_core_applicable = true;
            if (outcome.status != GroupStatus::fail) all_core_fail = false;
        }
    }
    if (all_applicable_pass) return CentralisationLabel::decentralised;
    if (any_core_applicable && all_core_fail) return CentralisationLabel::centralised;
    return CentralisationLabel::hybrid;
}

OwnershipConcentration ownership_concentration(const HolderSnapshot& snapshot) {
    bool any_positive = std::any_of(
        snapshot.balances.begin(), snapshot.balances.end(),
        [](const HolderBalance& hb) { return !hb.balance.is_zero(); });
    if (snapshot.balances.empty() || !any_positive) {
        throw std::invalid_argument("degenerate snapshot: needs at least one positive balance");
    }

    std::vector<HolderBalance> sorted = snapshot.balances;
    std::sort(sorted.begin(), sorted.end(),
              [](const HolderBalance& a, const HolderBalance& b) {
                  if (a.balance != b.balance) return a.balance > b.balance;
                  return a.address < b.address;
              });
    if (sorted.size() > 100) sorted.resize(100);

    OwnershipConcentration result;
    result.top_balance = sorted.front().balance;
    for (const auto& hb : sorted) result.top100_sum = result.top100_sum.add(hb.balance);

    auto [top, sum] = Decimal::aligned(result.top_balance, result.top100_sum);
    if (top * 5 > sum * 3) result.parties = 1;
    return result;
}

std::optional<int> ownership_parties(const HolderSnapshot& snapshot) {
    return ownership_concentration(snapshot).parties;
}

std::string top_share_percent(const OwnershipConcentration& c) {
    return Decimal::percent(c.top_balance, c.top100_sum);
}

}  // namespace taxonomy
