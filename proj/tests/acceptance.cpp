// Acceptance gate: runs every release criterion end to end against the
// bundled fixtures and prints one [PASS]/[FAIL] line per criterion.
#include <unistd.h>

#include <array>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "taxonomy/centralisation.hpp"
#include "taxonomy/classification.hpp"
#include "taxonomy/corpus.hpp"
#include "taxonomy/holders.hpp"
#include "taxonomy/reporting.hpp"

using namespace taxonomy;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_data_dir;
int g_failures = 0;

std::string data_path(const std::string& name) { return g_data_dir + "/" + name; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Runs one criterion body; the body returns an empty string on success or a
// failure detail. Enforces the per-criterion time budget.
void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<std::string()>& body) {
    auto start = Clock::now();
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        detail = std::string("unexpected exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (detail.empty() && budget_seconds > 0 && elapsed > budget_seconds) {
        std::ostringstream s;
        s << "exceeded time budget: " << elapsed << " s > " << budget_seconds << " s";
        detail = s.str();
    }
    if (detail.empty()) {
        std::cout << "[PASS] criterion " << number << ": " << label << "\n";
    } else {
        std::cout << "[FAIL] criterion " << number << ": " << label << " — " << detail
                  << "\n";
        ++g_failures;
    }
}

std::string check(bool ok, const std::string& detail) { return ok ? "" : detail; }

Corpus load_or_die(const std::string& name, std::string* error) {
    auto loaded = load_corpus(data_path(name));
    if (!loaded.corpus) {
        *error = name + " failed to load: " + loaded.report.to_text();
        return {};
    }
    return *loaded.corpus;
}

// ---- criterion 1: golden fixtures ------------------------------------------

struct Expected {
    std::string centralisation;
    std::string reference_category;
    std::string legal;
    std::string analogy;
    std::vector<std::string> flags;
};

const std::map<std::string, Expected>& expected_cases() {
    static const std::map<std::string, Expected> table = {
        {"btc", {"decentralised", "no_reference", "other_crypto_asset", "commodity", {}}},
        {"uni",
         {"decentralised", "no_reference", "other_crypto_asset", "voting_equity_share",
          {}}},
        {"hbar",
         {"decentralised", "no_reference", "other_crypto_asset", "payment_in_kind", {}}},
        {"dai",
         {"decentralised", "asset_referenced_token", "stable_value_token", "repo", {}}},
        {"wbtc",
         {"hybrid", "referenced_non_stablecoin/wrapped",
          "security_or_financial_instrument", "depositary_receipt", {}}},
        {"steth",
         {"decentralised", "referenced_non_stablecoin/liquid_staking",
          "other_crypto_asset", "pass_through_certificate", {}}},
        {"cbeth",
         {"centralised", "referenced_non_stablecoin/wrapped",
          "security_or_financial_instrument", "capitalising_share_class", {}}},
        {"xrp", {"centralised", "no_reference", "other_crypto_asset", "commodity", {}}},
        {"hbarx",
         {"decentralised", "referenced_non_stablecoin/liquid_staking",
          "other_crypto_asset", "other", {"fixture-inconsistency"}}},
    };
    return table;
}

std::string run_golden_fixtures() {
    std::string error;
    Corpus corpus = load_or_die("cases.json", &error);
    if (!error.empty()) return error;
    if (corpus.assets.size() != 9) return "expected 9 fixture assets";

    for (const auto& asset : corpus.assets) {
        auto it = expected_cases().find(asset.id);
        if (it == expected_cases().end()) return "unexpected asset id " + asset.id;
        const Expected& want = it->second;
        DerivedClassification got = classify(asset);

        if (to_string(got.centralisation) != want.centralisation)
            return asset.id + ": centralisation " + to_string(got.centralisation) +
                   " != " + want.centralisation;
        if (to_string(got.reference_category) != want.reference_category)
            return asset.id + ": reference category " +
                   to_string(got.reference_category) + " != " + want.reference_category;
        auto legal = got.legal.reported();
        std::string legal_text = legal ? to_string(*legal) : "unclassified";
        if (legal_text != want.legal)
            return asset.id + ": legal " + legal_text + " != " + want.legal;
        if (to_string(got.tradfi_analogy) != want.analogy)
            return asset.id + ": analogy " + std::string(to_string(got.tradfi_analogy)) +
                   " != " + want.analogy;
        if (got.flags != want.flags) return asset.id + ": flag set differs";
        if (!replay_trace(got.trace, asset)) return asset.id + ": trace replay failed";
    }
    return "";
}

// ---- criterion 2: label truth table -----------------------------------------

CentralisationLabel label_oracle(const std::array<GroupStatus, 6>& statuses) {
    bool any_fail = false;
    for (GroupStatus s : statuses)
        if (s == GroupStatus::fail) any_fail = true;
    if (!any_fail) return CentralisationLabel::decentralised;
    bool any_core = false;
    bool all_core_fail = true;
    for (std::size_t i = 0; i < 4; ++i) {
        if (statuses[i] == GroupStatus::not_applicable) continue;
        any_core = true;
        if (statuses[i] != GroupStatus::fail) all_core_fail = false;
    }
    if (any_core && all_core_fail) return CentralisationLabel::centralised;
    return CentralisationLabel::hybrid;
}

std::string run_truth_table() {
    const std::array<GroupStatus, 3> statuses = {GroupStatus::pass, GroupStatus::fail,
                                                 GroupStatus::not_applicable};
    std::size_t checked = 0;
    for (GroupStatus a : statuses)
        for (GroupStatus b : statuses)
            for (GroupStatus c : statuses)
                for (GroupStatus d : statuses)
                    for (GroupStatus e : statuses)
                        for (GroupStatus f : statuses) {
                            std::array<GroupStatus, 6> v = {a, b, c, d, e, f};
                            std::vector<GroupOutcome> outcomes;
                            for (std::size_t i = 0; i < 6; ++i) {
                                GroupOutcome o;
                                o.group = kFunctionalGroupUniverse[i];
                                o.status = v[i];
                                if (o.status == GroupStatus::fail) {
                                    o.failing_resources.emplace_back(
                                        sub_dimensions_of(o.group).front(), "resource");
                                }
                                outcomes.push_back(std::move(o));
                            }
                            if (centralisation_label(outcomes) != label_oracle(v)) {
                                return "label mismatch at vector " +
                                       std::to_string(checked);
                            }
                            ++checked;
                        }
    return check(checked == 729, "expected 729 vectors");
}

// ---- criterion 3: analogy totality/exclusivity ------------------------------

AssetDescriptor product_asset() {
    AssetDescriptor d;
    d.id = "asset";
    d.symbol = "AST";
    d.technical_standard = TechnicalStandard::erc20();
    d.issuer_kind = IssuerKind::protocol;
    return d;
}

TradFiAnalogy analogy_oracle(const AssetDescriptor& d) {
    bool ref = d.reference.has_value();
    bool yield = d.yield_source != YieldSource::none;
    bool qa = d.distribution_mechanism.has_value() &&
              *d.distribution_mechanism == DistributionMechanism::quantity_accrual;
    bool va = d.distribution_mechanism.has_value() &&
              *d.distribution_mechanism == DistributionMechanism::value_accrual;
    if (!ref && d.function == AssetFunction::governance)
        return TradFiAnalogy::voting_equity_share;
    if (!ref && !yield && d.form_of_claim == FormOfClaim::no_claim)
        return TradFiAnalogy::commodity;
    if (!ref && yield && qa) return TradFiAnalogy::payment_in_kind;
    if (ref && d.is_stablecoin &&
        (d.redemption_mechanism == RedemptionMechanism::protocol_par ||
         d.redemption_mechanism == RedemptionMechanism::burn_to_unlock))
        return TradFiAnalogy::repo;
    if (ref && !d.is_stablecoin && !yield && d.minting_type == MintingType::wrapped)
        return TradFiAnalogy::depositary_receipt;
    if (ref && !d.is_stablecoin && qa) return TradFiAnalogy::pass_through_certificate;
    if (ref && !d.is_stablecoin && va) return TradFiAnalogy::capitalising_share_class;
    return TradFiAnalogy::other;
}

std::string run_analogy_product() {
    std::vector<std::optional<DistributionMechanism>> distributions;
    distributions.emplace_back(std::nullopt);
    for (auto m : kDistributionMechanismUniverse) distributions.emplace_back(m);

    std::set<TradFiAnalogy> seen;
    std::size_t checked = 0;
    for (int ref_kind = 0; ref_kind < 3; ++ref_kind) {
        for (auto function : kFunctionUniverse)
            for (auto minting : kMintingTypeUniverse)
                for (auto yield : kYieldSourceUniverse)
                    for (const auto& distribution : distributions)
                        for (auto redemption : kRedemptionMechanismUniverse)
                            for (auto claim : kFormOfClaimUniverse) {
                                AssetDescriptor d = product_asset();
                                if (ref_kind > 0) d.reference = AssetRef{"REF", false};
                                d.is_stablecoin = ref_kind == 2;
                                d.function = function;
                                d.minting_type = minting;
                                d.yield_source = yield;
                                d.distribution_mechanism = distribution;
                                d.redemption_mechanism = redemption;
                                d.form_of_claim = claim;

                                AnalogyResult got = tradfi_analogy(d);
                                if (got.analogy != analogy_oracle(d)) {
                                    return "divergence from rule-order oracle at tuple " +
                                           std::to_string(checked);
                                }
                                seen.insert(got.analogy);
                                ++checked;
                            }
    }
    if (seen.size() != kTradFiAnalogyUniverse.size())
        return "not every analogy is reachable";
    return check(checked == 3u * 4 * 8 * 7 * 6 * 8 * 6, "tuple count off");
}

// ---- criterion 4: monotonicity ----------------------------------------------

int label_rank(CentralisationLabel label) {
    switch (label) {
        case CentralisationLabel::centralised: return 0;
        case CentralisationLabel::hybrid: return 1;
        case CentralisationLabel::decentralised: return 2;
    }
    return 1;
}

std::string run_monotonicity() {
    std::mt19937 gen(20251119);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> j_kind(0, 3);
    std::uniform_int_distribution<int> n_resources(1, 3);

    auto label_of = [](const AssetDescriptor& d) {
        return centralisation_label(evaluate_groups(d.critical_resource_surface, d));
    };

    for (int round = 0; round < 1000; ++round) {
        AssetDescriptor d = product_asset();
        d.function = AssetFunction::utility;
        d.form_of_claim = FormOfClaim::no_claim;
        if (coin(gen) == 1) {
            d.yield_source = YieldSource::staking_rewards;
            d.distribution_mechanism = DistributionMechanism::quantity_accrual;
        } else {
            d.yield_source = YieldSource::none;
            d.distribution_mechanism = DistributionMechanism::none;
        }
        if (coin(gen) == 1) {
            d.reference = AssetRef{"ETH", false};
            d.redemption_mechanism = RedemptionMechanism::queued_withdrawal;
        }
        for (SubDimension sub : kSubDimensionUniverse) {
            if (coin(gen) == 0) continue;
            ResourceEntries entries;
            int n = n_resources(gen);
            for (int i = 0; i < n; ++i) {
                std::optional<std::uint64_t> j;
                switch (j_kind(gen)) {
                    case 0: j = std::nullopt; break;
                    case 1: j = 1; break;
                    case 2: j = 2; break;
                    default: j = 5; break;
                }
                entries["r" + std::to_string(i)] = j;
            }
            d.critical_resource_surface.entries[sub] = std::move(entries);
        }

        int before = label_rank(label_of(d));

        std::vector<std::pair<SubDimension, std::string>> unilateral;
        std::vector<std::pair<SubDimension, std::string>> plural;
        for (const auto& [sub, entries] : d.critical_resource_surface.entries) {
            for (const auto& [name, j] : entries) {
                if (j.has_value() && *j == 1) {
                    unilateral.emplace_back(sub, name);
                } else {
                    plural.emplace_back(sub, name);
                }
            }
        }

        if (!unilateral.empty()) {
            auto pick = unilateral[std::uniform_int_distribution<std::size_t>(
                0, unilateral.size() - 1)(gen)];
            AssetDescriptor repaired = d;
            repaired.critical_resource_surface.entries[pick.first][pick.second] =
                coin(gen) == 0 ? std::optional<std::uint64_t>{}
                               : std::optional<std::uint64_t>{9};
            if (label_rank(label_of(repaired)) < before) {
                return "repairing a unilateral resource moved the label toward "
                       "centralised (round " +
                       std::to_string(round) + ")";
            }
        }
        if (!plural.empty()) {
            auto pick = plural[std::uniform_int_distribution<std::size_t>(
                0, plural.size() - 1)(gen)];
            AssetDescriptor broken = d;
            broken.critical_resource_surface.entries[pick.first][pick.second] = 1;
            if (label_rank(label_of(broken)) > before) {
                return "breaking a plural resource moved the label away from "
                       "centralised (round " +
                       std::to_string(round) + ")";
            }
        }
    }
    return "";
}

// ---- criterion 5: ownership boundary ----------------------------------------

std::string run_ownership_boundary() {
    auto snapshot_of = [](const std::string& name, std::string* error) {
        auto loaded = load_holder_csv(data_path(name));
        if (!loaded.snapshot) *error = name + " failed to load";
        return loaded.snapshot;
    };
    std::string error;

    auto eq = snapshot_of("holders_boundary_eq.csv", &error);
    if (!error.empty()) return error;
    auto c_eq = ownership_concentration(*eq);
    if (c_eq.parties.has_value()) return "60.00% must stay unbounded";
    if (top_share_percent(c_eq) != "60.00") return "eq top share != 60.00";

    auto above = snapshot_of("holders_boundary_above.csv", &error);
    if (!error.empty()) return error;
    auto c_above = ownership_concentration(*above);
    if (!c_above.parties || *c_above.parties != 1)
        return "60.000001% must identify a single party";
    if (top_share_percent(c_above) != "60.00") return "above top share != 60.00";

    auto top100 = snapshot_of("holders_150.csv", &error);
    if (!error.empty()) return error;
    auto c_top = ownership_concentration(*top100);
    if (top_share_percent(c_top) != "70.00") return "top-100 restriction share != 70.00";
    if (!c_top.parties || *c_top.parties != 1) return "top-100 restriction parties != 1";

    HolderSnapshot hand;
    hand.balances.push_back({"a", *Decimal::parse("61")});
    hand.balances.push_back({"b", *Decimal::parse("39")});
    auto c_hand = ownership_concentration(hand);
    if (top_share_percent(c_hand) != "61.00" || !c_hand.parties || *c_hand.parties != 1)
        return "61/39 must be 61.00% with one party";

    HolderSnapshot zero;
    zero.balances.push_back({"a", *Decimal::parse("0")});
    bool threw = false;
    try {
        ownership_concentration(zero);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    return check(threw, "degenerate snapshot must be rejected");
}

// ---- criterion 6: legal oracle ----------------------------------------------

std::string run_legal_oracle() {
    std::size_t checked = 0;
    for (int bits = 0; bits < 512; ++bits) {
        LegalTestInputs t;
        t.howey.investment_of_money = bits & 1;
        t.howey.common_enterprise = bits & 2;
        t.howey.expectation_of_profits = bits & 4;
        t.howey.efforts_of_others = bits & 8;
        t.mifid.profits_or_repayment = bits & 16;
        t.mifid.claim_against_identifiable_issuer = bits & 32;
        t.aif.pooled_risk_return = bits & 64;
        t.aif.defined_investment_policy = bits & 128;
        t.aif.investor_benefit = bits & 256;
        for (bool stable : {false, true}) {
            bool howey = (bits & 15) == 15;
            bool mifid = (bits & 48) == 48;
            bool aif = (bits & 448) == 448;
            LegalClassification want;
            if (howey && aif) {
                want = LegalClassification::fund_aif;
            } else if (howey || mifid) {
                want = LegalClassification::security_or_financial_instrument;
            } else if (stable) {
                want = LegalClassification::stable_value_token;
            } else {
                want = LegalClassification::other_crypto_asset;
            }
            if (legal_classification(t, stable) != want) {
                return "divergence at prong mask " + std::to_string(bits);
            }
            ++checked;
        }
    }
    return check(checked == 1024, "expected 1024 prong cases");
}

// ---- criterion 7: corpus conservation + determinism --------------------------

std::string run_corpus_report() {
    std::string error;
    Corpus corpus = load_or_die("corpus30.json", &error);
    if (!error.empty()) return error;
    if (corpus.assets.size() != 30) return "expected 30 assets";

    ClassifiedCorpus classified = classify_corpus(corpus);

    for (const auto& dim : report_dimensions()) {
        auto dist = facet_distribution(classified, dim.name);
        std::size_t sum = 0;
        for (const auto& [value, n] : dist.counts) sum += n;
        if (sum != 30) return "distribution over " + dim.name + " does not sum to 30";

        auto buckets = bucket_table(classified, dim.name);
        std::size_t members = 0;
        for (const auto& [bucket, ids] : buckets.buckets) members += ids.size();
        if (members != 30) return "buckets over " + dim.name + " do not partition 30";
    }

    if (centralisation_summary(classified) != "decentralised:18 hybrid:8 centralised:4")
        return "unexpected centralisation split: " + centralisation_summary(classified);

    auto legal = facet_distribution(classified, "legal_classification");
    for (const auto& [value, n] : legal.counts) {
        if (value == "unclassified" && n != 10)
            return "legal gaps must surface as 10 unclassified assets, got " +
                   std::to_string(n);
    }

    auto paths = parallel_set_paths(
        classified, {"centralisation", "distribution_mechanism", "tradfi_analogy"});
    std::size_t path_total = 0;
    for (const auto& path : paths.paths) path_total += path.count;
    if (path_total + paths.excluded_ids.size() != 30)
        return "parallel-set paths plus exclusions must cover all 30 assets";
    if (paths.excluded_ids != std::vector<std::string>{"hbarx"})
        return "only hbarx lacks a distribution value";

    std::size_t flagged = 0;
    for (const auto& asset : classified.assets) {
        if (!asset.classification.flags.empty()) ++flagged;
    }
    if (flagged != 2) return "expected exactly hbarx and syn05 to carry flags";

    // Byte determinism across two full bundle writes.
    auto temp_root = std::filesystem::temp_directory_path() /
                     ("taxonomy_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(temp_root);
    ReportBundleOptions options{{"centralisation", "tradfi_analogy"}, true};
    std::string dir_a = (temp_root / "a").string();
    std::string dir_b = (temp_root / "b").string();
    write_report_bundle(classified, options, dir_a);
    write_report_bundle(classified, options, dir_b);
    std::string detail;
    for (const char* file : {"distributions.csv", "buckets.csv", "parallel_sets.csv",
                             "classifications.json", "summary.md"}) {
        std::string a = read_file(dir_a + "/" + std::string(file));
        std::string b = read_file(dir_b + "/" + std::string(file));
        if (a.empty() || a != b) {
            detail = std::string(file) + " is not byte-deterministic";
            break;
        }
    }
    std::filesystem::remove_all(temp_root);
    return detail;
}

// ---- criterion 8: round-trip identity ----------------------------------------

std::string run_round_trip() {
    for (const char* name : {"cases.json", "corpus30.json"}) {
        auto loaded = load_corpus(data_path(name));
        if (!loaded.corpus) return std::string(name) + " failed to load";
        std::string text = serialize_corpus(*loaded.corpus);
        auto reparsed = parse_corpus(text);
        if (!reparsed.corpus) return std::string(name) + " reparse failed";
        if (!(*reparsed.corpus == *loaded.corpus))
            return std::string(name) + " does not round-trip to an identical corpus";
        if (serialize_corpus(*reparsed.corpus) != text)
            return std::string(name) + " serialization is not a fixed point";
    }

    for (const char* name :
         {"holders_boundary_eq.csv", "holders_boundary_above.csv", "holders_150.csv"}) {
        std::string original = read_file(data_path(name));
        auto parsed = parse_holder_csv(original);
        if (!parsed.snapshot) return std::string(name) + " failed to parse";
        if (serialize_holder_csv(*parsed.snapshot) != original)
            return std::string(name) + " does not round-trip byte-for-byte";
    }

    // Exact decimal semantics at the boundary.
    auto above = parse_holder_csv(read_file(data_path("holders_boundary_above.csv")));
    const Decimal& top = above.snapshot->balances[0].balance;
    if (top.to_string() != "60.000001") return "boundary balance lost precision";
    if (!(top > *Decimal::parse("60"))) return "exact comparison failed";
    if (Decimal::percent(*Decimal::parse("2"), *Decimal::parse("3")) != "66.67")
        return "percent rounding is not half-up to two decimals";
    return "";
}

}  // namespace

int main() {
    g_data_dir = std::getenv("DATA_DIR") != nullptr ? std::getenv("DATA_DIR") : "data";

    criterion(1, "golden fixtures classify to their published outcomes", 1.0,
              run_golden_fixtures);
    criterion(2, "all 729 group-status vectors match the label oracle", 1.0,
              run_truth_table);
    criterion(3, "analogy rules are total and first-match exclusive", 10.0,
              run_analogy_product);
    criterion(4, "single-resource edits move the label monotonically", 10.0,
              run_monotonicity);
    criterion(5, "ownership concentration honours the strict 60% boundary", 0.0,
              run_ownership_boundary);
    criterion(6, "legal verdicts match the prong oracle on all 1024 cases", 1.0,
              run_legal_oracle);
    criterion(7, "thirty-asset report conserves assets and is byte-deterministic", 0.0,
              run_corpus_report);
    criterion(8, "corpora and snapshots round-trip with exact decimals", 0.0,
              run_round_trip);

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
