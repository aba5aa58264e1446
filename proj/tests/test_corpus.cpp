#include <string>

#include "doctest.h"
#include "json.hpp"
#include "taxonomy/corpus.hpp"
#include "test_util.hpp"

using namespace taxonomy;
using testutil::contains;

namespace {

// Minimal valid single-asset corpus used as a mutation base.
nlohmann::json minimal_corpus() {
    return nlohmann::json::parse(R"({
      "version": 1,
      "assets": [
        {
          "id": "tok",
          "symbol": "TOK",
          "technical_standard": "erc20",
          "function": "utility",
          "issuer_kind": "protocol",
          "minting_type": "pre_mined",
          "yield_source": "none",
          "redemption_mechanism": "none",
          "form_of_claim": "no_claim",
          "is_stablecoin": false,
          "critical_resource_surface": {}
        }
      ]
    })");
}

CorpusLoadResult parse_json(const nlohmann::json& j, ParseMode mode = ParseMode::strict) {
    return parse_corpus(j.dump(), mode);
}

bool has_issue(const ValidationReport& r, const std::string& path_fragment,
               const std::string& message_fragment) {
    for (const auto& issue : r.issues) {
        if (contains(issue.path, path_fragment) &&
            contains(issue.message, message_fragment)) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("the bundled nine-asset corpus loads cleanly in strict mode") {
    auto loaded = load_corpus(testutil::data_path("cases.json"));
    CHECK(loaded.status == LoadStatus::ok);
    REQUIRE(loaded.corpus.has_value());
    CHECK(loaded.report.ok());
    CHECK(loaded.report.warning_count() == 0);
    CHECK(loaded.corpus->assets.size() == 9);
    CHECK(loaded.corpus->version == 1);
    REQUIRE(loaded.corpus->provenance.has_value());
    CHECK(loaded.corpus->provenance->source == "curated-fixtures");

    const AssetDescriptor* dai = loaded.corpus->find("dai");
    REQUIRE(dai != nullptr);
    CHECK(dai->is_stablecoin);
    REQUIRE(dai->reference.has_value());
    CHECK(dai->reference->symbol == "USD");
    CHECK(dai->reference->is_fiat);
    // yield none + absent distribution normalizes to none, not unspecified.
    CHECK(dai->distribution_mechanism == DistributionMechanism::none);

    const AssetDescriptor* hbarx = loaded.corpus->find("hbarx");
    REQUIRE(hbarx != nullptr);
    // yield present + absent distribution stays unspecified.
    CHECK_FALSE(hbarx->distribution_mechanism.has_value());

    // Unbounded party count round-trips as null.
    const AssetDescriptor* daix = loaded.corpus->find("dai");
    const ResourceEntries* entries =
        daix->critical_resource_surface.find(SubDimension::mint_data_param);
    REQUIRE(entries != nullptr);
    REQUIRE(entries->count("oracle_aggregators") == 1);
    CHECK_FALSE(entries->at("oracle_aggregators").has_value());

    CHECK(loaded.corpus->find("nope") == nullptr);
}

TEST_CASE("the thirty-asset corpus loads cleanly in strict mode") {
    auto loaded = load_corpus(testutil::data_path("corpus30.json"));
    CHECK(loaded.status == LoadStatus::ok);
    REQUIRE(loaded.corpus.has_value());
    CHECK(loaded.report.ok());
    CHECK(loaded.report.warning_count() == 0);
    CHECK(loaded.corpus->assets.size() == 30);
}

TEST_CASE("serialization round-trips to the identical corpus") {
    for (const char* name : {"cases.json", "corpus30.json"}) {
        CAPTURE(name);
        auto loaded = load_corpus(testutil::data_path(name));
        REQUIRE(loaded.corpus.has_value());

        std::string text = serialize_corpus(*loaded.corpus);
        auto reparsed = parse_corpus(text);
        REQUIRE(reparsed.corpus.has_value());
        CHECK(reparsed.report.ok());
        CHECK(*reparsed.corpus == *loaded.corpus);

        // Serialization is a fixed point: serialize(parse(serialize(c))) is
        // byte-identical to serialize(c).
        CHECK(serialize_corpus(*reparsed.corpus) == text);
    }
}

TEST_CASE("missing files are I/O errors, not data errors") {
    auto loaded = load_corpus(testutil::data_path("no_such_file.json"));
    CHECK(loaded.status == LoadStatus::io_error);
    CHECK_FALSE(loaded.corpus.has_value());
    CHECK_FALSE(loaded.report.ok());
}

TEST_CASE("malformed JSON is reported with the parser diagnostic") {
    auto loaded = parse_corpus("{ \"version\": 1, ");
    CHECK(loaded.status == LoadStatus::data_errors);
    REQUIRE_FALSE(loaded.report.issues.empty());
    CHECK(contains(loaded.report.issues[0].message, "malformed JSON"));
}

TEST_CASE("unsupported versions are rejected with the found value") {
    auto j = minimal_corpus();
    j["version"] = 2;
    auto loaded = parse_json(j);
    CHECK_FALSE(loaded.corpus.has_value());
    CHECK(has_issue(loaded.report, "version", "unsupported corpus version 2 (expected 1)"));
}

TEST_CASE("duplicate ids name both positions") {
    auto j = minimal_corpus();
    auto second = j["assets"][0];
    second["symbol"] = "TOK2";
    j["assets"].push_back(second);
    auto third = j["assets"][0];
    j["assets"].push_back(third);

    auto loaded = parse_json(j);
    CHECK_FALSE(loaded.corpus.has_value());
    CHECK(has_issue(loaded.report, "assets[1].id",
                    "duplicate id \"tok\" (first used at assets[0].id)"));
    CHECK(has_issue(loaded.report, "assets[2].id",
                    "duplicate id \"tok\" (first used at assets[0].id)"));
}

TEST_CASE("facet typos get a nearest-literal hint") {
    auto j = minimal_corpus();
    j["assets"][0]["yield_source"] = "staking_rewards";
    j["assets"][0]["distribution_mechanism"] = "quantity_acrual";
    auto loaded = parse_json(j);
    CHECK_FALSE(loaded.corpus.has_value());
    CHECK(has_issue(loaded.report, "assets[0].distribution_mechanism",
                    "unknown value \"quantity_acrual\" for distribution_mechanism; did "
                    "you mean \"quantity_accrual\"?"));
}

TEST_CASE("unknown sub-dimensions get a hint too") {
    auto j = minimal_corpus();
    j["assets"][0]["critical_resource_surface"]["gov_rulechange"] = {{"admin_keys", 2}};
    auto loaded = parse_json(j);
    CHECK_FALSE(loaded.corpus.has_value());
    CHECK(has_issue(loaded.report, "assets[0].critical_resource_surface",
                    "did you mean \"gov_rule_change\"?"));
}

TEST_CASE("unknown keys are errors in strict mode, warnings in lenient") {
    auto j = minimal_corpus();
    j["assets"][0]["colour"] = "blue";

    auto strict = parse_json(j, ParseMode::strict);
    CHECK_FALSE(strict.corpus.has_value());
    CHECK(has_issue(strict.report, "assets[0]", "unknown key \"colour\""));

    auto lenient = parse_json(j, ParseMode::lenient);
    REQUIRE(lenient.corpus.has_value());
    CHECK(lenient.report.ok());
    CHECK(lenient.report.warning_count() == 1);
    CHECK(has_issue(lenient.report, "assets[0]", "unknown key \"colour\" (ignored)"));
}

TEST_CASE("surface party counts must be positive integers or null") {
    auto j = minimal_corpus();
    j["assets"][0]["critical_resource_surface"]["gov_rule_change"] = {{"admin_keys", 0}};
    auto loaded = parse_json(j);
    CHECK(has_issue(loaded.report, "admin_keys", "party count must be >= 1 or null"));

    j["assets"][0]["critical_resource_surface"]["gov_rule_change"] = {{"admin_keys", -3}};
    loaded = parse_json(j);
    CHECK(has_issue(loaded.report, "admin_keys",
                    "party count must be a positive integer or null"));

    j["assets"][0]["critical_resource_surface"]["gov_rule_change"] = {
        {"admin_keys", "three"}};
    loaded = parse_json(j);
    CHECK(has_issue(loaded.report, "admin_keys",
                    "party count must be a positive integer or null"));

    j["assets"][0]["critical_resource_surface"]["gov_rule_change"] = {
        {"admin_keys", nullptr}};
    loaded = parse_json(j);
    REQUIRE(loaded.corpus.has_value());
    const auto* entries = loaded.corpus->assets[0].critical_resource_surface.find(
        SubDimension::gov_rule_change);
    REQUIRE(entries != nullptr);
    CHECK_FALSE(entries->at("admin_keys").has_value());
}

TEST_CASE("legal test inputs demand all nine prongs") {
    auto j = minimal_corpus();
    j["assets"][0]["legal_test_inputs"] = {
        {"howey",
         {{"investment_of_money", true},
          {"common_enterprise", true},
          {"expectation_of_profits", true},
          {"efforts_of_others", true}}},
        {"mifid", {{"profits_or_repayment", false}}},  // second prong missing
        {"aif",
         {{"pooled_risk_return", false},
          {"defined_investment_policy", false},
          {"investor_benefit", false}}}};
    auto loaded = parse_json(j);
    CHECK_FALSE(loaded.corpus.has_value());
    CHECK(has_issue(loaded.report, "legal_test_inputs.mifid", "missing required field"));
}

TEST_CASE("wrong JSON types are reported with expected and found types") {
    auto j = minimal_corpus();
    j["assets"][0]["is_stablecoin"] = "yes";
    auto loaded = parse_json(j);
    CHECK(has_issue(loaded.report, "assets[0].is_stablecoin", "expected"));

    j = minimal_corpus();
    j["assets"] = "not-an-array";
    loaded = parse_json(j);
    CHECK_FALSE(loaded.corpus.has_value());
}

TEST_CASE("metadata requires a cap and a parseable date") {
    auto j = minimal_corpus();
    j["assets"][0]["metadata"] = {{"market_cap_usd", 1000000.0}};
    auto loaded = parse_json(j);
    CHECK(has_issue(loaded.report, "metadata", "missing required field"));

    j["assets"][0]["metadata"] = {{"market_cap_usd", 1000000.0},
                                  {"snapshot_date", "19-11-2025"}};
    loaded = parse_json(j);
    CHECK_FALSE(loaded.corpus.has_value());
    CHECK(has_issue(loaded.report, "metadata.snapshot_date", "unparseable date"));
}

TEST_CASE("several independent faults are all reported in one pass") {
    auto j = minimal_corpus();
    auto second = j["assets"][0];
    second["id"] = "tok2";
    second["yield_source"] = "staking";  // unknown literal
    auto third = j["assets"][0];
    third["id"] = "tok3";
    third["redemption_mechanism"] = "burn_to_unlock";  // needs a reference
    auto fourth = j["assets"][0];
    fourth["id"] = "tok";  // duplicate of assets[0]
    j["assets"].push_back(second);
    j["assets"].push_back(third);
    j["assets"].push_back(fourth);

    auto loaded = parse_json(j);
    CHECK_FALSE(loaded.corpus.has_value());
    CHECK(loaded.report.error_count() >= 3);
    CHECK(has_issue(loaded.report, "assets[1].yield_source", "unknown value"));
    CHECK(has_issue(loaded.report, "assets[2].redemption_mechanism",
                    "requires a reference asset"));
    CHECK(has_issue(loaded.report, "assets[3].id", "duplicate id"));
}

TEST_CASE("required fields are reported when absent") {
    auto j = minimal_corpus();
    j["assets"][0].erase("symbol");
    auto loaded = parse_json(j);
    CHECK(has_issue(loaded.report, "assets[0]", "missing required field"));

    j = minimal_corpus();
    j.erase("version");
    loaded = parse_json(j);
    CHECK_FALSE(loaded.corpus.has_value());
}

TEST_CASE("writing a corpus creates a loadable file") {
    testutil::ScratchDir scratch;
    auto loaded = load_corpus(testutil::data_path("cases.json"));
    REQUIRE(loaded.corpus.has_value());

    std::string path = scratch.file("copy.json");
    std::string error;
    REQUIRE(write_corpus(*loaded.corpus, path, &error));
    auto reloaded = load_corpus(path);
    REQUIRE(reloaded.corpus.has_value());
    CHECK(*reloaded.corpus == *loaded.corpus);

    std::string bad_path = scratch.str() + "/no_dir/copy.json";
    CHECK_FALSE(write_corpus(*loaded.corpus, bad_path, &error));
    CHECK_FALSE(error.empty());
}
