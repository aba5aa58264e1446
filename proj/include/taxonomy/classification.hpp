#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taxonomy/asset.hpp"
#include "taxonomy/centralisation.hpp"
#include "taxonomy/facets.hpp"

namespace taxonomy {

// Reference-asset category derived from the reference/stablecoin/minting
// facets. Subtype accompanies referenced_non_stablecoin and nothing else.
struct ReferenceCategory {
    enum class Kind {
        no_reference,
        e_money_token,
        asset_referenced_token,
        referenced_non_stablecoin,
    };
    enum class Subtype { wrapped, liquid_staking, other };

    Kind kind = Kind::no_reference;
    std::optional<Subtype> subtype;

    bool operator==(const ReferenceCategory&) const = default;
};

const char* to_string(ReferenceCategory::Kind kind);
const char* to_string(ReferenceCategory::Subtype subtype);
// Flattened form: "no_reference", "e_money_token", "asset_referenced_token",
// or "referenced_non_stablecoin/<subtype>".
std::string to_string(const ReferenceCategory& category);

enum class TradFiAnalogy {
    commodity,
    voting_equity_share,
    payment_in_kind,
    repo,
    depositary_receipt,
    capitalising_share_class,
    pass_through_certificate,
    other,
};

constexpr std::array<TradFiAnalogy, 8> kTradFiAnalogyUniverse = {
    TradFiAnalogy::commodity,
    TradFiAnalogy::voting_equity_share,
    TradFiAnalogy::payment_in_kind,
    TradFiAnalogy::repo,
    TradFiAnalogy::depositary_receipt,
    TradFiAnalogy::capitalising_share_class,
    TradFiAnalogy::pass_through_certificate,
    TradFiAnalogy::other,
};

const char* to_string(TradFiAnalogy analogy);

// One evaluated predicate in a decision walk. rule_id keys into the replay
// registry; predicate is the human-readable condition; result is what the
// predicate evaluated to on the descriptor.
struct TraceStep {
    std::string rule_id;
    std::string predicate;
    bool result = false;

    bool operator==(const TraceStep&) const = default;
};

struct DecisionTrace {
    std::vector<TraceStep> steps;
    // Final verdict per derived dimension (centralisation, reference_category,
    // legal_classification, tradfi_analogy).
    std::map<std::string, std::string> verdicts;

    bool operator==(const DecisionTrace&) const = default;
};

// Re-evaluates the registered predicate for a rule id against a descriptor.
// Throws std::out_of_range for unknown rule ids.
bool replay_predicate(const std::string& rule_id, const AssetDescriptor& d);

// True iff every recorded step matches a fresh predicate evaluation and the
// recorded verdicts match a fresh classification of the same descriptor.
bool replay_trace(const DecisionTrace& trace, const AssetDescriptor& d);

// Renders trace steps as display lines; the matching analogy rule renders as
// "rule 6: distribution=quantity_accrual → pass_through_certificate".
std::vector<std::string> format_trace(const DecisionTrace& trace);

ReferenceCategory reference_category(const AssetDescriptor& d);

// Four-way legal mapping over fully populated test inputs.
LegalClassification legal_classification(const LegalTestInputs& t, bool is_stablecoin);

// Cross-check between the explicit label and the derived legal verdict.
// The explicit label is authoritative for reports; the derived verdict for
// traces. match is populated only when both sources exist.
struct LegalVerdict {
    std::optional<LegalClassification> explicit_label;
    std::optional<LegalClassification> derived;
    std::optional<bool> match;

    bool operator==(const LegalVerdict&) const = default;

    std::optional<LegalClassification> reported() const {
        return explicit_label ? explicit_label : derived;
    }
    std::optional<LegalClassification> traced() const {
        return derived ? derived : explicit_label;
    }
};

LegalVerdict check_explicit_legal(const AssetDescriptor& d);

struct AnalogyResult {
    TradFiAnalogy analogy = TradFiAnalogy::other;
    std::vector<TraceStep> steps;
};

// Ordered first-match decision walk over the eight analogy rules; the steps
// record every predicate evaluated along the path.
AnalogyResult tradfi_analogy(const AssetDescriptor& d);

// Flag literals attached by classify().
inline constexpr const char* kFlagFixtureInconsistency = "fixture-inconsistency";
inline constexpr const char* kFlagLegalMismatch = "legal-mismatch";

struct DerivedClassification {
    std::string id;
    CentralisationLabel centralisation = CentralisationLabel::hybrid;
    std::vector<GroupOutcome> group_outcomes;
    ReferenceCategory reference_category;
    LegalVerdict legal;
    TradFiAnalogy tradfi_analogy = TradFiAnalogy::other;
    DecisionTrace trace;
    std::vector<std::string> flags;
};

// Pure derivation of every output dimension plus the concatenated trace.
DerivedClassification classify(const AssetDescriptor& d);

}  // namespace taxonomy
