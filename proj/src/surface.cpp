#include "taxonomy/surface.hpp"

namespace taxonomy {

const char* to_string(SubDimension v) {
    switch (v) {
        case SubDimension::gov_rule_change: return "gov_rule_change";
        case SubDimension::gov_voting: return "gov_voting";
        case SubDimension::mint_authority: return "mint_authority";
        case SubDimension::mint_data_param: return "mint_data_param";
        case SubDimension::yield_reward_policy: return "yield_reward_policy";
        case SubDimension::yield_operator_distribution: return "yield_operator_distribution";
        case SubDimension::red_reserve: return "red_reserve";
        case SubDimension::red_mechanism: return "red_mechanism";
        case SubDimension::market_ownership: return "market_ownership";
        case SubDimension::market_exchange: return "market_exchange";
        case SubDimension::community_transparency: return "community_transparency";
    }
    return "?";
}

const char* to_string(FunctionalGroup v) {
    switch (v) {
        case FunctionalGroup::governance: return "governance";
        case FunctionalGroup::minting: return "minting";
        case FunctionalGroup::yield: return "yield";
        case FunctionalGroup::redemption: return "redemption";
        case FunctionalGroup::market: return "market";
        case FunctionalGroup::community: return "community";
    }
    return "?";
}

std::optional<SubDimension> parse_sub_dimension(std::string_view s) {
    for (SubDimension d : kSubDimensionUniverse) {
        if (s == to_string(d)) return d;
    }
    return std::nullopt;
}

FunctionalGroup group_of(SubDimension d) {
    switch (d) {
        case SubDimension::gov_rule_change:
        case SubDimension::gov_voting:
            return FunctionalGroup::governance;
        case SubDimension::mint_authority:
        case SubDimension::mint_data_param:
            return FunctionalGroup::minting;
        case SubDimension::yield_reward_policy:
        case SubDimension::yield_operator_distribution:
            return FunctionalGroup::yield;
        case SubDimension::red_reserve:
        case SubDimension::red_mechanism:
            return FunctionalGroup::redemption;
        case SubDimension::market_ownership:
        case SubDimension::market_exchange:
            return FunctionalGroup::market;
        case SubDimension::community_transparency:
            return FunctionalGroup::community;
    }
    return FunctionalGroup::community;
}

const std::vector<SubDimension>& sub_dimensions_of(FunctionalGroup g) {
    static const std::vector<SubDimension> governance = {
        SubDimension::gov_rule_change, SubDimension::gov_voting};
    static const std::vector<SubDimension> minting = {
        SubDimension::mint_authority, SubDimension::mint_data_param};
    static const std::vector<SubDimension> yield = {
        SubDimension::yield_reward_policy, SubDimension::yield_operator_distribution};
    static const std::vector<SubDimension> redemption = {
        SubDimension::red_reserve, SubDimension::red_mechanism};
    static const std::vector<SubDimension> market = {
        SubDimension::market_ownership, SubDimension::market_exchange};
    static const std::vector<SubDimension> community = {
        SubDimension::community_transparency};
    switch (g) {
        case FunctionalGroup::governance: return governance;
        case FunctionalGroup::minting: return minting;
        case FunctionalGroup::yield: return yield;
        case FunctionalGroup::redemption: return redemption;
        case FunctionalGroup::market: return market;
        case FunctionalGroup::community: return community;
    }
    return community;
}

const std::vector<std::string>& known_resources(SubDimension d) {
    static const std::vector<std::string> gov_rule_change = {
        "admin_keys", "upgrade_authorities", "emergency_pause_shutdown"};
    static const std::vector<std::string> gov_voting = {
        "quorum_threshold", "eligible_voters", "delegation_rules", "validator_curation"};
    static const std::vector<std::string> mint_authority = {
        "mint_keys", "whitelisted_minters", "custodial_issuers"};
    static const std::vector<std::string> mint_data_param = {
        "oracle_operators", "oracle_aggregators", "collateral_parameters",
        "liquidation_rules"};
    static const std::vector<std::string> yield_reward_policy = {
        "reward_rates", "emission_schedules", "fee_levels"};
    static const std::vector<std::string> yield_operator_distribution = {
        "validator_operator_selection", "stake_allocation", "distribution_mechanisms"};
    static const std::vector<std::string> red_reserve = {
        "reserve_custodians", "reserve_composition", "attestations_audits"};
    static const std::vector<std::string> red_mechanism = {
        "gatekeepers_whitelisting", "redemption_queues", "settlement_custodians",
        "freeze_blocklist_powers"};
    static const std::vector<std::string> market_ownership = {
        "on_chain_holder", "off_chain_register", "distribution_disclose"};
    static const std::vector<std::string> market_exchange = {
        "exchange_listing", "freeze_halt_controls", "designated_market_makers"};
    static const std::vector<std::string> community_transparency = {
        "project_info", "governance_info", "operational_info"};
    switch (d) {
        case SubDimension::gov_rule_change: return gov_rule_change;
        case SubDimension::gov_voting: return gov_voting;
        case SubDimension::mint_authority: return mint_authority;
        case SubDimension::mint_data_param: return mint_data_param;
        case SubDimension::yield_reward_policy: return yield_reward_policy;
        case SubDimension::yield_operator_distribution: return yield_operator_distribution;
        case SubDimension::red_reserve: return red_reserve;
        case SubDimension::red_mechanism: return red_mechanism;
        case SubDimension::market_ownership: return market_ownership;
        case SubDimension::market_exchange: return market_exchange;
        case SubDimension::community_transparency: return community_transparency;
    }
    return community_transparency;
}

}  // namespace taxonomy
