#include "taxonomy/facets.hpp"

namespace taxonomy {

const char* to_string(AssetFunction v) {
    switch (v) {
        case AssetFunction::governance: return "governance";
        case AssetFunction::utility: return "utility";
        case AssetFunction::security: return "security";
        case AssetFunction::other: return "other";
    }
    return "?";
}

const char* to_string(IssuerKind v) {
    switch (v) {
        case IssuerKind::centralised: return "centralised";
        case IssuerKind::protocol: return "protocol";
        case IssuerKind::none: return "none";
    }
    return "?";
}

const char* to_string(MintingType v) {
    switch (v) {
        case MintingType::consensus: return "consensus";
        case MintingType::lock_and_mint: return "lock_and_mint";
        case MintingType::staking: return "staking";
        case MintingType::wrapped: return "wrapped";
        case MintingType::algorithmic_burn_mint: return "algorithmic_burn_mint";
        case MintingType::emission_governance: return "emission_governance";
        case MintingType::pre_mined: return "pre_mined";
        case MintingType::nft: return "nft";
    }
    return "?";
}

const char* to_string(YieldSource v) {
    switch (v) {
        case YieldSource::lending_borrowing: return "lending_borrowing";
        case YieldSource::liquidity_fees: return "liquidity_fees";
        case YieldSource::staking_rewards: return "staking_rewards";
        case YieldSource::revenue_sharing: return "revenue_sharing";
        case YieldSource::incentive_emissions: return "incentive_emissions";
        case YieldSource::burn_mint_equilibria: return "burn_mint_equilibria";
        case YieldSource::none: return "none";
    }
    return "?";
}

const char* to_string(DistributionMechanism v) {
    switch (v) {
        case DistributionMechanism::quantity_accrual: return "quantity_accrual";
        case DistributionMechanism::value_accrual: return "value_accrual";
        case DistributionMechanism::price_accrual: return "price_accrual";
        case DistributionMechanism::external_redistribution: return "external_redistribution";
        case DistributionMechanism::none: return "none";
    }
    return "?";
}

const char* to_string(RedemptionMechanism v) {
    switch (v) {
        case RedemptionMechanism::off_chain_issuer: return "off_chain_issuer";
        case RedemptionMechanism::burn_to_unlock: return "burn_to_unlock";
        case RedemptionMechanism::bridge_burn_release: return "bridge_burn_release";
        case RedemptionMechanism::secondary_market: return "secondary_market";
        case RedemptionMechanism::queued_withdrawal: return "queued_withdrawal";
        case RedemptionMechanism::protocol_par: return "protocol_par";
        case RedemptionMechanism::claim_from_pool: return "claim_from_pool";
        case RedemptionMechanism::none: return "none";
    }
    return "?";
}

const char* to_string(FormOfClaim v) {
    switch (v) {
        case FormOfClaim::personam_issuer_to_issuer: return "personam_issuer_to_issuer";
        case FormOfClaim::personam_issuer_to_holders: return "personam_issuer_to_holders";
        case FormOfClaim::personam_reserve_to_issuer: return "personam_reserve_to_issuer";
        case FormOfClaim::personam_reserve_to_holders: return "personam_reserve_to_holders";
        case FormOfClaim::rem_reserve: return "rem_reserve";
        case FormOfClaim::no_claim: return "no_claim";
    }
    return "?";
}

const char* to_string(LegalClassification v) {
    switch (v) {
        case LegalClassification::security_or_financial_instrument:
            return "security_or_financial_instrument";
        case LegalClassification::stable_value_token: return "stable_value_token";
        case LegalClassification::fund_aif: return "fund_aif";
        case LegalClassification::other_crypto_asset: return "other_crypto_asset";
    }
    return "?";
}

std::string to_string(const TechnicalStandard& v) {
    switch (v.kind) {
        case TechnicalStandard::Kind::native: return "native";
        case TechnicalStandard::Kind::erc20: return "erc20";
        case TechnicalStandard::Kind::other:
            return v.label.empty() ? "other" : "other:" + v.label;
    }
    return "?";
}

namespace {

template <typename E, std::size_t N>
std::optional<E> parse_from(const std::array<E, N>& universe, std::string_view s) {
    for (E v : universe) {
        if (s == to_string(v)) return v;
    }
    return std::nullopt;
}

}  // namespace

std::optional<AssetFunction> parse_asset_function(std::string_view s) {
    return parse_from(kFunctionUniverse, s);
}

std::optional<IssuerKind> parse_issuer_kind(std::string_view s) {
    return parse_from(kIssuerKindUniverse, s);
}

std::optional<MintingType> parse_minting_type(std::string_view s) {
    return parse_from(kMintingTypeUniverse, s);
}

std::optional<YieldSource> parse_yield_source(std::string_view s) {
    return parse_from(kYieldSourceUniverse, s);
}

std::optional<DistributionMechanism> parse_distribution_mechanism(std::string_view s) {
    return parse_from(kDistributionMechanismUniverse, s);
}

std::optional<RedemptionMechanism> parse_redemption_mechanism(std::string_view s) {
    return parse_from(kRedemptionMechanismUniverse, s);
}

std::optional<FormOfClaim> parse_form_of_claim(std::string_view s) {
    return parse_from(kFormOfClaimUniverse, s);
}

std::optional<LegalClassification> parse_legal_classification(std::string_view s) {
    return parse_from(kLegalClassificationUniverse, s);
}

std::optional<TechnicalStandard> parse_technical_standard(std::string_view s) {
    if (s == "native") return TechnicalStandard::native();
    if (s == "erc20") return TechnicalStandard::erc20();
    if (s == "other") return TechnicalStandard::other();
    constexpr std::string_view prefix = "other:";
    if (s.substr(0, prefix.size()) == prefix && s.size() > prefix.size()) {
        return TechnicalStandard::other(std::string(s.substr(prefix.size())));
    }
    return std::nullopt;
}

namespace {

template <typename E, std::size_t N>
std::vector<std::string> names_of(const std::array<E, N>& universe) {
    std::vector<std::string> out;
    out.reserve(N);
    for (E v : universe) out.emplace_back(to_string(v));
    return out;
}

std::vector<FacetDimension> build_universe() {
    return {
        {"technical_standard", {"native", "erc20", "other"}},
        {"function", names_of(kFunctionUniverse)},
        {"issuer_kind", names_of(kIssuerKindUniverse)},
        {"minting_type", names_of(kMintingTypeUniverse)},
        {"yield_source", names_of(kYieldSourceUniverse)},
        {"distribution_mechanism", names_of(kDistributionMechanismUniverse)},
        {"redemption_mechanism", names_of(kRedemptionMechanismUniverse)},
        {"form_of_claim", names_of(kFormOfClaimUniverse)},
        {"legal_classification", names_of(kLegalClassificationUniverse)},
    };
}

}  // namespace

const std::vector<FacetDimension>& facet_universe() {
    static const std::vector<FacetDimension> universe = build_universe();
    return universe;
}

const FacetDimension* find_facet_dimension(std::string_view name) {
    for (const auto& dim : facet_universe()) {
        if (dim.name == name) return &dim;
    }
    return nullptr;
}

}  // namespace taxonomy
