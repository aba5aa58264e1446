#include "taxonomy/classification.hpp"

#include <functional>
#include <stdexcept>

namespace taxonomy {

const char* to_string(ReferenceCategory::Kind kind) {
    switch (kind) {
        case ReferenceCategory::Kind::no_reference: return "no_reference";
        case ReferenceCategory::Kind::e_money_token: return "e_money_token";
        case ReferenceCategory::Kind::asset_referenced_token: return "asset_referenced_token";
        case ReferenceCategory::Kind::referenced_non_stablecoin: return "referenced_non_stablecoin";
    }
    return "?";
}

const char* to_string(ReferenceCategory::Subtype subtype) {
    switch (subtype) {
        case ReferenceCategory::Subtype::wrapped: return "wrapped";
        case ReferenceCategory::Subtype::liquid_staking: return "liquid_staking";
        case ReferenceCategory::Subtype::other: return "other";
    }
    return "?";
}

std::string to_string(const ReferenceCategory& category) {
    std::string out = to_string(category.kind);
    if (category.subtype) {
        out += '/';
        out += to_string(*category.subtype);
    }
    return out;
}

const char* to_string(TradFiAnalogy analogy) {
    switch (analogy) {
        case TradFiAnalogy::commodity: return "commodity";
        case TradFiAnalogy::voting_equity_share: return "voting_equity_share";
        case TradFiAnalogy::payment_in_kind: return "payment_in_kind";
        case TradFiAnalogy::repo: return "repo";
        case TradFiAnalogy::depositary_receipt: return "depositary_receipt";
        case TradFiAnalogy::capitalising_share_class: return "capitalising_share_class";
        case TradFiAnalogy::pass_through_certificate: return "pass_through_certificate";
        case TradFiAnalogy::other: return "other";
    }
    return "?";
}

namespace {

GroupStatus group_status(const AssetDescriptor& d, FunctionalGroup group) {
    for (const auto& outcome : evaluate_groups(d.critical_resource_surface, d)) {
        if (outcome.group == group) return outcome.status;
    }
    return GroupStatus::not_applicable;
}

bool emt_conditions(const AssetDescriptor& d) {
    return d.reference.has_value() && d.reference->is_fiat &&
           d.issuer_kind == IssuerKind::centralised &&
           d.redemption_mechanism == RedemptionMechanism::off_chain_issuer;
}

using Predicate = bool (*)(const AssetDescriptor&);

const std::map<std::string, Predicate>& replay_registry() {
    static const std::map<std::string, Predicate> registry = {
        {"mdt.governance", [](const AssetDescriptor& d) {
             return group_status(d, FunctionalGroup::governance) == GroupStatus::pass;
         }},
        {"mdt.minting", [](const AssetDescriptor& d) {
             return group_status(d, FunctionalGroup::minting) == GroupStatus::pass;
         }},
        {"mdt.yield", [](const AssetDescriptor& d) {
             return group_status(d, FunctionalGroup::yield) == GroupStatus::pass;
         }},
        {"mdt.redemption", [](const AssetDescriptor& d) {
             return group_status(d, FunctionalGroup::redemption) == GroupStatus::pass;
         }},
        {"mdt.market", [](const AssetDescriptor& d) {
             return group_status(d, FunctionalGroup::market) == GroupStatus::pass;
         }},
        {"mdt.community", [](const AssetDescriptor& d) {
             return group_status(d, FunctionalGroup::community) == GroupStatus::pass;
         }},
        {"refcat.reference", [](const AssetDescriptor& d) { return d.has_reference(); }},
        {"refcat.stablecoin", [](const AssetDescriptor& d) { return d.is_stablecoin; }},
        {"refcat.emt", [](const AssetDescriptor& d) { return emt_conditions(d); }},
        {"refcat.wrapped", [](const AssetDescriptor& d) {
             return d.minting_type == MintingType::wrapped;
         }},
        {"refcat.liquid_staking", [](const AssetDescriptor& d) {
             return d.minting_type == MintingType::staking;
         }},
        {"legal.howey", [](const AssetDescriptor& d) {
             return d.legal_test_inputs && d.legal_test_inputs->howey.all();
         }},
        {"legal.mifid", [](const AssetDescriptor& d) {
             return d.legal_test_inputs && d.legal_test_inputs->mifid.all();
         }},
        {"legal.aif", [](const AssetDescriptor& d) {
             return d.legal_test_inputs && d.legal_test_inputs->aif.all();
         }},
        {"analogy.branch.reference", [](const AssetDescriptor& d) { return d.has_reference(); }},
        {"analogy.branch.stablecoin", [](const AssetDescriptor& d) { return d.is_stablecoin; }},
        {"analogy.1", [](const AssetDescriptor& d) {
             return !d.has_reference() && d.function == AssetFunction::governance;
         }},
        {"analogy.2", [](const AssetDescriptor& d) {
             return !d.has_reference() && !d.has_yield() &&
                    d.form_of_claim == FormOfClaim::no_claim;
         }},
        {"analogy.3", [](const AssetDescriptor& d) {
             return !d.has_reference() && d.has_yield() &&
                    d.distribution_is(DistributionMechanism::quantity_accrual);
         }},
        {"analogy.4", [](const AssetDescriptor& d) {
             return d.has_reference() && d.is_stablecoin &&
                    (d.redemption_mechanism == RedemptionMechanism::protocol_par ||
                     d.redemption_mechanism == RedemptionMechanism::burn_to_unlock);
         }},
        {"analogy.5", [](const AssetDescriptor& d) {
             return d.has_reference() && !d.is_stablecoin && !d.has_yield() &&
                    d.minting_type == MintingType::wrapped;
         }},
        {"analogy.6", [](const AssetDescriptor& d) {
             return d.has_reference() && !d.is_stablecoin &&
                    d.distribution_is(DistributionMechanism::quantity_accrual);
         }},
        {"analogy.7", [](const AssetDescriptor& d) {
             return d.has_reference() && !d.is_stablecoin &&
                    d.distribution_is(DistributionMechanism::value_accrual);
         }},
        {"analogy.8", [](const AssetDescriptor&) { return true; }},
    };
    return registry;
}

ReferenceCategory reference_category_traced(const AssetDescriptor& d,
                                            std::vector<TraceStep>& steps) {
    auto step = [&steps](const char* id, const char* predicate, bool result) {
        steps.push_back({id, predicate, result});
        return result;
    };
    ReferenceCategory category;
    if (!step("refcat.reference", "reference present", d.has_reference())) {
        category.kind = ReferenceCategory::Kind::no_reference;
        return category;
    }
    if (step("refcat.stablecoin", "is_stablecoin", d.is_stablecoin)) {
        bool emt = step("refcat.emt",
                        "fiat reference ∧ issuer_kind=centralised ∧ redemption=off_chain_issuer",
                        emt_conditions(d));
        category.kind = emt ? ReferenceCategory::Kind::e_money_token
                            : ReferenceCategory::Kind::asset_referenced_token;
        return category;
    }
    category.kind = ReferenceCategory::Kind::referenced_non_stablecoin;
    if (step("refcat.wrapped", "minting_type=wrapped",
             d.minting_type == MintingType::wrapped)) {
        category.subtype = ReferenceCategory::Subtype::wrapped;
    } else if (step("refcat.liquid_staking", "minting_type=staking",
                    d.minting_type == MintingType::staking)) {
        category.subtype = ReferenceCategory::Subtype::liquid_staking;
    } else {
        category.subtype = ReferenceCategory::Subtype::other;
    }
    return category;
}

}  // namespace

bool replay_predicate(const std::string& rule_id, const AssetDescriptor& d) {
    return replay_registry().at(rule_id)(d);
}

ReferenceCategory reference_category(const AssetDescriptor& d) {
    std::vector<TraceStep> ignored;
    return reference_category_traced(d, ignored);
}

LegalClassification legal_classification(const LegalTestInputs& t, bool is_stablecoin) {
    bool howey = t.howey.all();
    bool mifid = t.mifid.all();
    bool aif = t.aif.all();
    if (howey && aif) return LegalClassification::fund_aif;
    if (howey || mifid) return LegalClassification::security_or_financial_instrument;
    if (is_stablecoin) return LegalClassification::stable_value_token;
    return LegalClassification::other_crypto_asset;
}

LegalVerdict check_explicit_legal(const AssetDescriptor& d) {
    LegalVerdict verdict;
    verdict.explicit_label = d.explicit_legal_classification;
    if (d.legal_test_inputs) {
        verdict.derived = legal_classification(*d.legal_test_inputs, d.is_stablecoin);
    }
    if (verdict.explicit_label && verdict.derived) {
        verdict.match = (*verdict.explicit_label == *verdict.derived);
    }
    return verdict;
}

AnalogyResult tradfi_analogy(const AssetDescriptor& d) {
    AnalogyResult result;
    auto step = [&result](const char* id, const char* predicate, bool value) {
        result.steps.push_back({id, predicate, value});
        return value;
    };

    if (!step("analogy.branch.reference", "reference present", d.has_reference())) {
        if (step("analogy.1", "function=governance",
                 d.function == AssetFunction::governance)) {
            result.analogy = TradFiAnalogy::voting_equity_share;
            return result;
        }
        if (step("analogy.2", "yield_source=none ∧ form_of_claim=no_claim",
                 !d.has_yield() && d.form_of_claim == FormOfClaim::no_claim)) {
            result.analogy = TradFiAnalogy::commodity;
            return result;
        }
        if (step("analogy.3", "yield_source≠none ∧ distribution=quantity_accrual",
                 d.has_yield() && d.distribution_is(DistributionMechanism::quantity_accrual))) {
            result.analogy = TradFiAnalogy::payment_in_kind;
            return result;
        }
    } else if (step("analogy.branch.stablecoin", "is_stablecoin", d.is_stablecoin)) {
        if (step("analogy.4", "redemption∈{protocol_par,burn_to_unlock}",
                 d.redemption_mechanism == RedemptionMechanism::protocol_par ||
                     d.redemption_mechanism == RedemptionMechanism::burn_to_unlock)) {
            result.analogy = TradFiAnalogy::repo;
            return result;
        }
    } else {
        if (step("analogy.5", "yield_source=none ∧ minting=wrapped",
                 !d.has_yield() && d.minting_type == MintingType::wrapped)) {
            result.analogy = TradFiAnalogy::depositary_receipt;
            return result;
        }
        if (step("analogy.6", "distribution=quantity_accrual",
                 d.distribution_is(DistributionMechanism::quantity_accrual))) {
            result.analogy = TradFiAnalogy::pass_through_certificate;
            return result;
        }
        if (step("analogy.7", "distribution=value_accrual",
                 d.distribution_is(DistributionMechanism::value_accrual))) {
            result.analogy = TradFiAnalogy::capitalising_share_class;
            return result;
        }
    }
    step("analogy.8", "default", true);
    result.analogy = TradFiAnalogy::other;
    return result;
}

DerivedClassification classify(const AssetDescriptor& d) {
    DerivedClassification c;
    c.id = d.id;

    c.group_outcomes = evaluate_groups(d.critical_resource_surface, d);
    c.centralisation = centralisation_label(c.group_outcomes);
    for (const auto& outcome : c.group_outcomes) {
        if (outcome.status == GroupStatus::not_applicable) continue;
        c.trace.steps.push_back({std::string("mdt.") + to_string(outcome.group),
                                 "free of unilateral (j=1) control",
                                 outcome.status == GroupStatus::pass});
    }

    c.reference_category = reference_category_traced(d, c.trace.steps);

    c.legal = check_explicit_legal(d);
    if (d.legal_test_inputs) {
        const LegalTestInputs& t = *d.legal_test_inputs;
        c.trace.steps.push_back(
            {"legal.howey", "all four investment-contract prongs hold", t.howey.all()});
        c.trace.steps.push_back(
            {"legal.mifid", "both financial-instrument prongs hold", t.mifid.all()});
        c.trace.steps.push_back(
            {"legal.aif", "all three collective-investment prongs hold", t.aif.all()});
    }

    AnalogyResult analogy = tradfi_analogy(d);
    c.tradfi_analogy = analogy.analogy;
    c.trace.steps.insert(c.trace.steps.end(), analogy.steps.begin(), analogy.steps.end());

    if (d.has_yield() && !d.distribution_mechanism.has_value()) {
        c.flags.push_back(kFlagFixtureInconsistency);
    }
    if (c.legal.match.has_value() && !*c.legal.match) {
        c.flags.push_back(kFlagLegalMismatch);
    }

    c.trace.verdicts["centralisation"] = to_string(c.centralisation);
    c.trace.verdicts["reference_category"] = to_string(c.reference_category);
    auto traced_legal = c.legal.traced();
    c.trace.verdicts["legal_classification"] =
        traced_legal ? to_string(*traced_legal) : "unclassified";
    c.trace.verdicts["tradfi_analogy"] = to_string(c.tradfi_analogy);
    return c;
}

bool replay_trace(const DecisionTrace& trace, const AssetDescriptor& d) {
    for (const auto& step : trace.steps) {
        if (replay_predicate(step.rule_id, d) != step.result) return false;
    }
    return classify(d).trace.verdicts == trace.verdicts;
}

std::vector<std::string> format_trace(const DecisionTrace& trace) {
    std::vector<std::string> lines;
    lines.reserve(trace.steps.size());
    auto verdict_of = [&trace](const char* dimension) -> std::string {
        auto it = trace.verdicts.find(dimension);
        return it == trace.verdicts.end() ? std::string("?") : it->second;
    };
    for (const auto& step : trace.steps) {
        std::string line;
        if (step.rule_id.rfind("mdt.", 0) == 0) {
            line = step.rule_id + ": " + step.predicate + " → " +
                   (step.result ? "pass" : "fail");
        } else if (step.rule_id.rfind("analogy.branch.", 0) == 0) {
            line = "branch: " + step.predicate + " → " + (step.result ? "yes" : "no");
        } else if (step.rule_id.rfind("analogy.", 0) == 0) {
            std::string number = step.rule_id.substr(std::string("analogy.").size());
            if (step.result) {
                line = "rule " + number + ": " + step.predicate + " → " +
                       verdict_of("tradfi_analogy");
            } else {
                line = "rule " + number + ": " + step.predicate + " → no";
            }
        } else {
            line = step.rule_id + ": " + step.predicate + " → " +
                   (step.result ? "yes" : "no");
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace taxonomy
