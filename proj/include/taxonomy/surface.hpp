// Critical-resource surface: per sub-dimension, the minimum number of
// independent parties a resource needs before anyone can exercise effective
// control over it. A null count means no bounded party count is known.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace taxonomy {

enum class SubDimension {
    gov_rule_change,
    gov_voting,
    mint_authority,
    mint_data_param,
    yield_reward_policy,
    yield_operator_distribution,
    red_reserve,
    red_mechanism,
    market_ownership,
    market_exchange,
    community_transparency,
};

constexpr std::array<SubDimension, 11> kSubDimensionUniverse = {
    SubDimension::gov_rule_change,
    SubDimension::gov_voting,
    SubDimension::mint_authority,
    SubDimension::mint_data_param,
    SubDimension::yield_reward_policy,
    SubDimension::yield_operator_distribution,
    SubDimension::red_reserve,
    SubDimension::red_mechanism,
    SubDimension::market_ownership,
    SubDimension::market_exchange,
    SubDimension::community_transparency,
};

enum class FunctionalGroup {
    governance,
    minting,
    yield,
    redemption,
    market,
    community,
};

constexpr std::array<FunctionalGroup, 6> kFunctionalGroupUniverse = {
    FunctionalGroup::governance, FunctionalGroup::minting,
    FunctionalGroup::yield,      FunctionalGroup::redemption,
    FunctionalGroup::market,     FunctionalGroup::community,
};

// governance, minting, yield, redemption: unilateral control of any of these
// is decisive on its own. market and community only ever add evidence.
constexpr bool is_core_group(FunctionalGroup g) {
    return g == FunctionalGroup::governance || g == FunctionalGroup::minting ||
           g == FunctionalGroup::yield || g == FunctionalGroup::redemption;
}

const char* to_string(SubDimension v);
const char* to_string(FunctionalGroup v);
std::optional<SubDimension> parse_sub_dimension(std::string_view s);

FunctionalGroup group_of(SubDimension d);
const std::vector<SubDimension>& sub_dimensions_of(FunctionalGroup g);

// Default resource vocabulary for one sub-dimension. Surfaces may use other
// names; those are accepted with a warning at validation time.
const std::vector<std::string>& known_resources(SubDimension d);

// resource name -> minimum independent controlling parties (>= 1), or null.
using ResourceEntries = std::map<std::string, std::optional<std::uint64_t>>;

struct CriticalResourceSurface {
    std::map<SubDimension, ResourceEntries> entries;

    bool operator==(const CriticalResourceSurface&) const = default;

    const ResourceEntries* find(SubDimension d) const {
        auto it = entries.find(d);
        return it == entries.end() ? nullptr : &it->second;
    }

    bool group_has_entries(FunctionalGroup g) const {
        for (SubDimension d : sub_dimensions_of(g)) {
            const ResourceEntries* e = find(d);
            if (e != nullptr && !e->empty()) return true;
        }
        return false;
    }
};

}  // namespace taxonomy
