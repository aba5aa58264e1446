// Facet vocabularies: the closed value sets every descriptor field draws from.
// Each enum has a stable declaration order that doubles as the reporting order.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace taxonomy {

enum class AssetFunction {
    governance,
    utility,
    security,
    other,
};

enum class IssuerKind {
    centralised,
    protocol,
    none,
};

enum class MintingType {
    consensus,
    lock_and_mint,
    staking,
    wrapped,
    algorithmic_burn_mint,
    emission_governance,
    pre_mined,
    nft,
};

enum class YieldSource {
    lending_borrowing,
    liquidity_fees,
    staking_rewards,
    revenue_sharing,
    incentive_emissions,
    burn_mint_equilibria,
    none,
};

enum class DistributionMechanism {
    quantity_accrual,
    value_accrual,
    price_accrual,
    external_redistribution,
    none,
};

enum class RedemptionMechanism {
    off_chain_issuer,
    burn_to_unlock,
    bridge_burn_release,
    secondary_market,
    queued_withdrawal,
    protocol_par,
    claim_from_pool,
    none,
};

enum class FormOfClaim {
    personam_issuer_to_issuer,
    personam_issuer_to_holders,
    personam_reserve_to_issuer,
    personam_reserve_to_holders,
    rem_reserve,
    no_claim,
};

enum class LegalClassification {
    security_or_financial_instrument,
    stable_value_token,
    fund_aif,
    other_crypto_asset,
};

// Technical standard is the one facet with an open tail: anything that is
// neither native nor erc20 collapses into other(label).
struct TechnicalStandard {
    enum class Kind { native, erc20, other };

    Kind kind = Kind::native;
    std::string label;  // meaningful only for Kind::other; may be empty

    bool operator==(const TechnicalStandard&) const = default;

    static TechnicalStandard native() { return {Kind::native, {}}; }
    static TechnicalStandard erc20() { return {Kind::erc20, {}}; }
    static TechnicalStandard other(std::string label = {}) {
        return {Kind::other, std::move(label)};
    }
};

const char* to_string(AssetFunction v);
const char* to_string(IssuerKind v);
const char* to_string(MintingType v);
const char* to_string(YieldSource v);
const char* to_string(DistributionMechanism v);
const char* to_string(RedemptionMechanism v);
const char* to_string(FormOfClaim v);
const char* to_string(LegalClassification v);

// "native", "erc20", "other" or "other:<label>".
std::string to_string(const TechnicalStandard& v);

std::optional<AssetFunction> parse_asset_function(std::string_view s);
std::optional<IssuerKind> parse_issuer_kind(std::string_view s);
std::optional<MintingType> parse_minting_type(std::string_view s);
std::optional<YieldSource> parse_yield_source(std::string_view s);
std::optional<DistributionMechanism> parse_distribution_mechanism(std::string_view s);
std::optional<RedemptionMechanism> parse_redemption_mechanism(std::string_view s);
std::optional<FormOfClaim> parse_form_of_claim(std::string_view s);
std::optional<LegalClassification> parse_legal_classification(std::string_view s);
std::optional<TechnicalStandard> parse_technical_standard(std::string_view s);

constexpr std::array<AssetFunction, 4> kFunctionUniverse = {
    AssetFunction::governance,
    AssetFunction::utility,
    AssetFunction::security,
    AssetFunction::other,
};

constexpr std::array<IssuerKind, 3> kIssuerKindUniverse = {
    IssuerKind::centralised,
    IssuerKind::protocol,
    IssuerKind::none,
};

constexpr std::array<MintingType, 8> kMintingTypeUniverse = {
    MintingType::consensus,
    MintingType::lock_and_mint,
    MintingType::staking,
    MintingType::wrapped,
    MintingType::algorithmic_burn_mint,
    MintingType::emission_governance,
    MintingType::pre_mined,
    MintingType::nft,
};

constexpr std::array<YieldSource, 7> kYieldSourceUniverse = {
    YieldSource::lending_borrowing,
    YieldSource::liquidity_fees,
    YieldSource::staking_rewards,
    YieldSource::revenue_sharing,
    YieldSource::incentive_emissions,
    YieldSource::burn_mint_equilibria,
    YieldSource::none,
};

constexpr std::array<DistributionMechanism, 5> kDistributionMechanismUniverse = {
    DistributionMechanism::quantity_accrual,
    DistributionMechanism::value_accrual,
    DistributionMechanism::price_accrual,
    DistributionMechanism::external_redistribution,
    DistributionMechanism::none,
};

constexpr std::array<RedemptionMechanism, 8> kRedemptionMechanismUniverse = {
    RedemptionMechanism::off_chain_issuer,
    RedemptionMechanism::burn_to_unlock,
    RedemptionMechanism::bridge_burn_release,
    RedemptionMechanism::secondary_market,
    RedemptionMechanism::queued_withdrawal,
    RedemptionMechanism::protocol_par,
    RedemptionMechanism::claim_from_pool,
    RedemptionMechanism::none,
};

constexpr std::array<FormOfClaim, 6> kFormOfClaimUniverse = {
    FormOfClaim::personam_issuer_to_issuer,
    FormOfClaim::personam_issuer_to_holders,
    FormOfClaim::personam_reserve_to_issuer,
    FormOfClaim::personam_reserve_to_holders,
    FormOfClaim::rem_reserve,
    FormOfClaim::no_claim,
};

constexpr std::array<LegalClassification, 4> kLegalClassificationUniverse = {
    LegalClassification::security_or_financial_instrument,
    LegalClassification::stable_value_token,
    LegalClassification::fund_aif,
    LegalClassification::other_crypto_asset,
};

constexpr std::array<TechnicalStandard::Kind, 3> kTechnicalStandardUniverse = {
    TechnicalStandard::Kind::native,
    TechnicalStandard::Kind::erc20,
    TechnicalStandard::Kind::other,
};

// One entry per facet dimension, in a stable order. Used by exhaustive tests
// and by reporting axes; the literal lists mirror the universe arrays above.
struct FacetDimension {
    std::string name;
    std::vector<std::string> values;
};

const std::vector<FacetDimension>& facet_universe();

// Literals of a single dimension, or nullptr when the name is unknown.
const FacetDimension* find_facet_dimension(std::string_view name);

}  // namespace taxonomy
