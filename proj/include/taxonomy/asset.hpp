// The asset descriptor: one crypto-asset's explicit taxonomy features.
// Everything here is immutable after construction; the engines derive labels
// from these fields and never write back.
#pragma once

#include <optional>
#include <string>

#include "taxonomy/facets.hpp"
#include "taxonomy/surface.hpp"

namespace taxonomy {

struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    bool operator==(const Date&) const = default;

    bool valid() const;
    std::string to_string() const;  // YYYY-MM-DD
    static std::optional<Date> parse(std::string_view s);
};

struct AssetRef {
    std::string symbol;  // non-empty, no whitespace
    bool is_fiat = false;

    bool operator==(const AssetRef&) const = default;
};

struct HoweyProngs {
    bool investment_of_money = false;
    bool common_enterprise = false;
    bool expectation_of_profits = false;
    bool efforts_of_others = false;

    bool operator==(const HoweyProngs&) const = default;
    bool all() const {
        return investment_of_money && common_enterprise && expectation_of_profits &&
               efforts_of_others;
    }
};

struct MifidProngs {
    bool profits_or_repayment = false;
    bool claim_against_identifiable_issuer = false;

    bool operator==(const MifidProngs&) const = default;
    bool all() const { return profits_or_repayment && claim_against_identifiable_issuer; }
};

struct AifProngs {
    bool pooled_risk_return = false;
    bool defined_investment_policy = false;
    bool investor_benefit = false;

    bool operator==(const AifProngs&) const = default;
    bool all() const {
        return pooled_risk_return && defined_investment_policy && investor_benefit;
    }
};

// All nine prongs are explicitly set whenever the record is present; the
// parser refuses partially filled records.
struct LegalTestInputs {
    HoweyProngs howey;
    MifidProngs mifid;
    AifProngs aif;

    bool operator==(const LegalTestInputs&) const = default;
};

// Descriptive market metrics; never an input to classification.
struct AssetMetadata {
    double market_cap_usd = 0.0;
    Date snapshot_date;

    bool operator==(const AssetMetadata&) const = default;
};

struct AssetDescriptor {
    std::string id;
    std::string symbol;
    std::optional<std::string> name;

    TechnicalStandard technical_standard;
    AssetFunction function = AssetFunction::other;
    IssuerKind issuer_kind = IssuerKind::none;
    MintingType minting_type = MintingType::consensus;
    YieldSource yield_source = YieldSource::none;
    // nullopt = unspecified. Only representable alongside a non-none yield
    // source; with yield none the parser normalizes an absent value to none.
    std::optional<DistributionMechanism> distribution_mechanism =
        DistributionMechanism::none;
    RedemptionMechanism redemption_mechanism = RedemptionMechanism::none;
    FormOfClaim form_of_claim = FormOfClaim::no_claim;

    std::optional<AssetRef> reference;
    bool is_stablecoin = false;

    std::optional<LegalClassification> explicit_legal_classification;
    std::optional<LegalTestInputs> legal_test_inputs;

    CriticalResourceSurface critical_resource_surface;
    std::optional<AssetMetadata> metadata;

    bool operator==(const AssetDescriptor&) const = default;

    bool has_reference() const { return reference.has_value(); }
    bool has_yield() const { return yield_source != YieldSource::none; }
    bool distribution_is(DistributionMechanism m) const {
        return distribution_mechanism.has_value() && *distribution_mechanism == m;
    }
};

}  // namespace taxonomy
