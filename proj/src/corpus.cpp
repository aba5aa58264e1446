#include "taxonomy/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace taxonomy {

using json = nlohmann::ordered_json;

const AssetDescriptor* Corpus::find(const std::string& id) const {
    for (const auto& asset : assets) {
        if (asset.id == id) return &asset;
    }
    return nullptr;
}

namespace {

struct ParseContext {
    ParseMode mode;
    ValidationReport& report;

    void unknown_key(const std::string& path, const std::string& key) {
        std::string message = "unknown key \"" + key + "\"";
        if (mode == ParseMode::strict) {
            report.error(path, message);
        } else {
            report.warning(path, message + " (ignored)");
        }
    }
};

std::string type_name(const json& value) {
    switch (value.type()) {
        case json::value_t::null: return "null";
        case json::value_t::object: return "object";
        case json::value_t::array: return "array";
        case json::value_t::string: return "string";
        case json::value_t::boolean: return "boolean";
        case json::value_t::number_integer:
        case json::value_t::number_unsigned:
        case json::value_t::number_float: return "number";
        default: return "unknown";
    }
}

// Fetches a required field of the given JSON type; reports and returns
// nullptr when absent or mistyped.
const json* require_field(ParseContext& ctx, const json& obj, const std::string& path,
                          const std::string& key, json::value_t type,
                          const char* type_label) {
    if (!obj.contains(key)) {
        ctx.report.error(path + "." + key, "missing required field");
        return nullptr;
    }
    const json& value = obj.at(key);
    bool ok = value.type() == type;
    if (type == json::value_t::number_float) {
        ok = value.is_number();
    }
    if (type == json::value_t::boolean) ok = value.is_boolean();
    if (!ok) {
        ctx.report.error(path + "." + key, std::string("expected ") + type_label +
                                               ", got " + type_name(value));
        return nullptr;
    }
    return &value;
}

// Parses a closed-vocabulary facet string via fn, reporting unknown literals
// with a nearest-literal hint drawn from the dimension's universe.
template <typename T, typename Fn>
std::optional<T> parse_facet(ParseContext& ctx, const std::string& path,
                             const std::string& dimension, const std::string& raw,
                             Fn fn) {
    std::optional<T> value = fn(raw);
    if (value) return value;
    std::string message = "unknown value \"" + raw + "\" for " + dimension;
    const FacetDimension* dim = find_facet_dimension(dimension);
    if (dim != nullptr) {
        std::string hint = nearest_literal(raw, dim->values);
        if (!hint.empty()) message += "; did you mean \"" + hint + "\"?";
    }
    ctx.report.error(path, message);
    return std::nullopt;
}

std::optional<Date> parse_date_field(ParseContext& ctx, const std::string& path,
                                     const std::string& raw) {
    auto date = Date::parse(raw);
    if (!date) {
        ctx.report.error(path, "unparseable date \"" + raw + "\" (expected YYYY-MM-DD)");
    }
    return date;
}

void parse_surface(ParseContext& ctx, const json& value, const std::string& path,
                   CriticalResourceSurface& surface) {
    if (!value.is_object()) {
        ctx.report.error(path, "expected object, got " + type_name(value));
        return;
    }
    for (const auto& [sub_name, resources] : value.items()) {
        auto sub = parse_sub_dimension(sub_name);
        if (!sub) {
            std::vector<std::string> names;
            for (SubDimension s : kSubDimensionUniverse) names.emplace_back(to_string(s));
            std::string message = "unknown sub-dimension \"" + sub_name + "\"";
            std::string hint = nearest_literal(sub_name, names);
            if (!hint.empty()) message += "; did you mean \"" + hint + "\"?";
            ctx.report.error(path + "." + sub_name, message);
            continue;
        }
        if (!resources.is_object()) {
            ctx.report.error(path + "." + sub_name,
                             "expected object, got " + type_name(resources));
            continue;
        }
        ResourceEntries entries;
        for (const auto& [resource, j] : resources.items()) {
            std::string rpath = path + "." + sub_name + "." + resource;
            if (j.is_null()) {
                entries[resource] = std::nullopt;
            } else if (j.is_number_unsigned()) {
                auto n = j.get<std::uint64_t>();
                if (n < 1) {
                    ctx.report.error(rpath, "party count must be >= 1 or null");
                    continue;
                }
                entries[resource] = n;
            } else {
                ctx.report.error(rpath, "party count must be a positive integer or null");
                continue;
            }
        }
        surface.entries[*sub] = std::move(entries);
    }
}

template <typename Prongs>
void parse_prongs(ParseContext& ctx, const json& value, const std::string& path,
                  const std::vector<std::pair<std::string, bool Prongs::*>>& fields,
                  std::optional<Prongs>& out) {
    if (!value.is_object()) {
        ctx.report.error(path, "expected object, got " + type_name(value));
        out = std::nullopt;
        return;
    }
    Prongs prongs;
    bool ok = true;
    for (const auto& [key, member] : fields) {
        const json* v = require_field(ctx, value, path, key, json::value_t::boolean, "boolean");
        if (v == nullptr) {
            ok = false;
            continue;
        }
        prongs.*member = v->get<bool>();
    }
    for (const auto& [key, v] : value.items()) {
        bool known = false;
        for (const auto& [name, member] : fields) {
            if (name == key) { known = true; break; }
        }
        if (!known) ctx.unknown_key(path, key);
    }
    if (ok) out = prongs;
}

void parse_legal_inputs(ParseContext& ctx, const json& value, const std::string& path,
                        std::optional<LegalTestInputs>& out) {
    if (!value.is_object()) {
        ctx.report.error(path, "expected object, got " + type_name(value));
        return;
    }
    std::optional<HoweyProngs> howey;
    std::optional<MifidProngs> mifid;
    std::optional<AifProngs> aif;
    if (const json* v = require_field(ctx, value, path, "howey", json::value_t::object, "object")) {
        parse_prongs<HoweyProngs>(
            ctx, *v, path + ".howey",
            {{"investment_of_money", &HoweyProngs::investment_of_money},
             {"common_enterprise", &HoweyProngs::common_enterprise},
             {"expectation_of_profits", &HoweyProngs::expectation_of_profits},
             {"efforts_of_others", &HoweyProngs::efforts_of_others}},
            howey);
    }
    if (const json* v = require_field(ctx, value, path, "mifid", json::value_t::object, "object")) {
        parse_prongs<MifidProngs>(
            ctx, *v, path + ".mifid",
            {{"profits_or_repayment", &MifidProngs::profits_or_repayment},
             {"claim_against_identifiable_issuer",
              &MifidProngs::claim_against_identifiable_issuer}},
            mifid);
    }
    if (const json* v = require_field(ctx, value, path, "aif", json::value_t::object, "object")) {
        parse_prongs<AifProngs>(
            ctx, *v, path + ".aif",
            {{"pooled_risk_return", &AifProngs::pooled_risk_return},
             {"defined_investment_policy", &AifProngs::defined_investment_policy},
             {"investor_benefit", &AifProngs::investor_benefit}},
            aif);
    }
    for (const auto& [key, v] : value.items()) {
        if (key != "howey" && key != "mifid" && key != "aif") ctx.unknown_key(path, key);
    }
    if (howey && mifid && aif) out = LegalTestInputs{*howey, *mifid, *aif};
}

const std::vector<std::string>& asset_keys() {
    static const std::vector<std::string> keys = {
        "id", "symbol", "name", "technical_standard", "function", "issuer_kind",
        "minting_type", "yield_source", "distribution_mechanism",
        "redemption_mechanism", "form_of_claim", "reference", "is_stablecoin",
        "explicit_legal_classification", "legal_test_inputs",
        "critical_resource_surface", "metadata"};
    return keys;
}

AssetDescriptor parse_asset(ParseContext& ctx, const json& obj, const std::string& path) {
    AssetDescriptor d;

    for (const auto& [key, value] : obj.items()) {
        const auto& keys = asset_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            ctx.unknown_key(path, key);
        }
    }

    if (const json* v = require_field(ctx, obj, path, "id", json::value_t::string, "string")) {
        d.id = v->get<std::string>();
    }
    if (const json* v = require_field(ctx, obj, path, "symbol", json::value_t::string, "string")) {
        d.symbol = v->get<std::string>();
    }
    if (obj.contains("name") && !obj.at("name").is_null()) {
        if (obj.at("name").is_string()) {
            d.name = obj.at("name").get<std::string>();
        } else {
            ctx.report.error(path + ".name", "expected string or null");
        }
    }

    if (const json* v = require_field(ctx, obj, path, "technical_standard",
                                      json::value_t::string, "string")) {
        auto parsed = parse_facet<TechnicalStandard>(ctx, path + ".technical_standard",
                                                     "technical_standard",
                                                     v->get<std::string>(),
                                                     parse_technical_standard);
        if (parsed) d.technical_standard = *parsed;
    }
    if (const json* v = require_field(ctx, obj, path, "function", json::value_t::string,
                                      "string")) {
        auto parsed = parse_facet<AssetFunction>(ctx, path + ".function", "function",
                                                 v->get<std::string>(), parse_asset_function);
        if (parsed) d.function = *parsed;
    }
    if (const json* v = require_field(ctx, obj, path, "issuer_kind", json::value_t::string,
                                      "string")) {
        auto parsed = parse_facet<IssuerKind>(ctx, path + ".issuer_kind", "issuer_kind",
                                              v->get<std::string>(), parse_issuer_kind);
        if (parsed) d.issuer_kind = *parsed;
    }
    if (const json* v = require_field(ctx, obj, path, "minting_type", json::value_t::string,
                                      "string")) {
        auto parsed = parse_facet<MintingType>(ctx, path + ".minting_type", "minting_type",
                                               v->get<std::string>(), parse_minting_type);
        if (parsed) d.minting_type = *parsed;
    }
    if (const json* v = require_field(ctx, obj, path, "yield_source", json::value_t::string,
                                      "string")) {
        auto parsed = parse_facet<YieldSource>(ctx, path + ".yield_source", "yield_source",
                                               v->get<std::string>(), parse_yield_source);
        if (parsed) d.yield_source = *parsed;
    }

    // Absent or null distribution stays unspecified for yielding assets and
    // normalizes to none for non-yielding ones.
    if (obj.contains("distribution_mechanism") && !obj.at("distribution_mechanism").is_null()) {
        const json& v = obj.at("distribution_mechanism");
        if (!v.is_string()) {
            ctx.report.error(path + ".distribution_mechanism", "expected string or null");
            d.distribution_mechanism = std::nullopt;
        } else {
            auto parsed = parse_facet<DistributionMechanism>(
                ctx, path + ".distribution_mechanism", "distribution_mechanism",
                v.get<std::string>(), parse_distribution_mechanism);
            d.distribution_mechanism =
                parsed ? std::optional<DistributionMechanism>(*parsed) : std::nullopt;
        }
    } else if (d.yield_source == YieldSource::none) {
        d.distribution_mechanism = DistributionMechanism::none;
    } else {
        d.distribution_mechanism = std::nullopt;
    }

    if (const json* v = require_field(ctx, obj, path, "redemption_mechanism",
                                      json::value_t::string, "string")) {
        auto parsed = parse_facet<RedemptionMechanism>(
            ctx, path + ".redemption_mechanism", "redemption_mechanism",
            v->get<std::string>(), parse_redemption_mechanism);
        if (parsed) d.redemption_mechanism = *parsed;
    }
    if (const json* v = require_field(ctx, obj, path, "form_of_claim", json::value_t::string,
                                      "string")) {
        auto parsed = parse_facet<FormOfClaim>(ctx, path + ".form_of_claim", "form_of_claim",
                                               v->get<std::string>(), parse_form_of_claim);
        if (parsed) d.form_of_claim = *parsed;
    }

    if (obj.contains("reference") && !obj.at("reference").is_null()) {
        const json& ref = obj.at("reference");
        std::string rpath = path + ".reference";
        if (!ref.is_object()) {
            ctx.report.error(rpath, "expected object or null");
        } else {
            AssetRef parsed;
            bool ok = true;
            if (const json* v = require_field(ctx, ref, rpath, "symbol",
                                              json::value_t::string, "string")) {
                parsed.symbol = v->get<std::string>();
            } else {
                ok = false;
            }
            if (const json* v = require_field(ctx, ref, rpath, "is_fiat",
                                              json::value_t::boolean, "boolean")) {
                parsed.is_fiat = v->get<bool>();
            } else {
                ok = false;
            }
            for (const auto& [key, v] : ref.items()) {
                if (key != "symbol" && key != "is_fiat") ctx.unknown_key(rpath, key);
            }
            if (ok) d.reference = std::move(parsed);
        }
    }

    if (const json* v = require_field(ctx, obj, path, "is_stablecoin",
                                      json::value_t::boolean, "boolean")) {
        d.is_stablecoin = v->get<bool>();
    }

    if (obj.contains("explicit_legal_classification") &&
        !obj.at("explicit_legal_classification").is_null()) {
        const json& v = obj.at("explicit_legal_classification");
        std::string lpath = path + ".explicit_legal_classification";
        if (!v.is_string()) {
            ctx.report.error(lpath, "expected string or null");
        } else {
            auto parsed = parse_facet<LegalClassification>(
                ctx, lpath, "legal_classification", v.get<std::string>(),
                parse_legal_classification);
            if (parsed) d.explicit_legal_classification = *parsed;
        }
    }

    if (obj.contains("legal_test_inputs") && !obj.at("legal_test_inputs").is_null()) {
        parse_legal_inputs(ctx, obj.at("legal_test_inputs"), path + ".legal_test_inputs",
                           d.legal_test_inputs);
    }

    if (obj.contains("critical_resource_surface") &&
        !obj.at("critical_resource_surface").is_null()) {
        parse_surface(ctx, obj.at("critical_resource_surface"),
                      path + ".critical_resource_surface", d.critical_resource_surface);
    }

    if (obj.contains("metadata") && !obj.at("metadata").is_null()) {
        const json& meta = obj.at("metadata");
        std::string mpath = path + ".metadata";
        if (!meta.is_object()) {
            ctx.report.error(mpath, "expected object or null");
        } else {
            AssetMetadata parsed;
            bool ok = true;
            if (const json* v = require_field(ctx, meta, mpath, "market_cap_usd",
                                              json::value_t::number_float, "number")) {
                parsed.market_cap_usd = v->get<double>();
            } else {
                ok = false;
            }
            if (const json* v = require_field(ctx, meta, mpath, "snapshot_date",
                                              json::value_t::string, "string")) {
                auto date = parse_date_field(ctx, mpath + ".snapshot_date",
                                             v->get<std::string>());
                if (date) {
                    parsed.snapshot_date = *date;
                } else {
                    ok = false;
                }
            } else {
                ok = false;
            }
            for (const auto& [key, v] : meta.items()) {
                if (key != "market_cap_usd" && key != "snapshot_date") {
                    ctx.unknown_key(mpath, key);
                }
            }
            if (ok) d.metadata = parsed;
        }
    }

    return d;
}

}  // namespace

CorpusLoadResult parse_corpus(const std::string& text, ParseMode mode) {
    CorpusLoadResult result;
    ParseContext ctx{mode, result.report};

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        result.report.error("file", std::string("malformed JSON: ") + e.what());
        result.status = LoadStatus::data_errors;
        return result;
    }

    if (!doc.is_object()) {
        result.report.error("file", "top level must be an object");
        result.status = LoadStatus::data_errors;
        return result;
    }

    Corpus corpus;
    if (const json* v = require_field(ctx, doc, "file", "version",
                                      json::value_t::number_unsigned, "integer")) {
        corpus.version = v->get<int>();
        if (corpus.version != 1) {
            result.report.error("file.version",
                                "unsupported corpus version " +
                                    std::to_string(corpus.version) + " (expected 1)");
        }
    }

    if (doc.contains("provenance") && !doc.at("provenance").is_null()) {
        const json& prov = doc.at("provenance");
        if (!prov.is_object()) {
            ctx.report.error("file.provenance", "expected object or null");
        } else {
            CorpusProvenance parsed;
            bool ok = true;
            if (const json* v = require_field(ctx, prov, "file.provenance", "source",
                                              json::value_t::string, "string")) {
                parsed.source = v->get<std::string>();
            } else {
                ok = false;
            }
            if (prov.contains("snapshot_date") && !prov.at("snapshot_date").is_null()) {
                if (!prov.at("snapshot_date").is_string()) {
                    ctx.report.error("file.provenance.snapshot_date",
                                     "expected string or null");
                    ok = false;
                } else {
                    auto date = parse_date_field(ctx, "file.provenance.snapshot_date",
                                                 prov.at("snapshot_date").get<std::string>());
                    if (date) {
                        parsed.snapshot_date = *date;
                    } else {
                        ok = false;
                    }
                }
            }
            for (const auto& [key, v] : prov.items()) {
                if (key != "source" && key != "snapshot_date") {
                    ctx.unknown_key("file.provenance", key);
                }
            }
            if (ok) corpus.provenance = std::move(parsed);
        }
    }

    for (const auto& [key, v] : doc.items()) {
        if (key != "version" && key != "assets" && key != "provenance") {
            ctx.unknown_key("file", key);
        }
    }

    if (const json* assets = require_field(ctx, doc, "file", "assets",
                                           json::value_t::array, "array")) {
        std::map<std::string, std::size_t> first_position;
        for (std::size_t i = 0; i < assets->size(); ++i) {
            std::string path = "assets[" + std::to_string(i) + "]";
            const json& entry = (*assets)[i];
            if (!entry.is_object()) {
                result.report.error(path, "expected object, got " + type_name(entry));
                continue;
            }
            AssetDescriptor d = parse_asset(ctx, entry, path);
            if (!d.id.empty()) {
                auto [it, inserted] = first_position.emplace(d.id, i);
                if (!inserted) {
                    result.report.error(path + ".id",
                                        "duplicate id \"" + d.id + "\" (first used at assets[" +
                                            std::to_string(it->second) + "].id)");
                }
            }
            check_descriptor_invariants(d, path, result.report);
            corpus.assets.push_back(std::move(d));
        }
    }

    if (result.report.ok()) {
        result.corpus = std::move(corpus);
        result.status = LoadStatus::ok;
    } else {
        result.status = LoadStatus::data_errors;
    }
    return result;
}

CorpusLoadResult load_corpus(const std::string& path, ParseMode mode) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        CorpusLoadResult result;
        result.report.error(path, "cannot open file");
        result.status = LoadStatus::io_error;
        return result;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str(), mode);
}

namespace {

json surface_to_json(const CriticalResourceSurface& surface) {
    json out = json::object();
    for (const auto& [sub, resources] : surface.entries) {
        json entries = json::object();
        for (const auto& [resource, parties] : resources) {
            if (parties) {
                entries[resource] = *parties;
            } else {
                entries[resource] = nullptr;
            }
        }
        out[to_string(sub)] = std::move(entries);
    }
    return out;
}

json asset_to_json(const AssetDescriptor& d) {
    json out = json::object();
    out["id"] = d.id;
    out["symbol"] = d.symbol;
    out["name"] = d.name ? json(*d.name) : json(nullptr);
    out["technical_standard"] = to_string(d.technical_standard);
    out["function"] = to_string(d.function);
    out["issuer_kind"] = to_string(d.issuer_kind);
    out["minting_type"] = to_string(d.minting_type);
    out["yield_source"] = to_string(d.yield_source);
    out["distribution_mechanism"] =
        d.distribution_mechanism ? json(to_string(*d.distribution_mechanism)) : json(nullptr);
    out["redemption_mechanism"] = to_string(d.redemption_mechanism);
    out["form_of_claim"] = to_string(d.form_of_claim);
    if (d.reference) {
        out["reference"] = {{"symbol", d.reference->symbol}, {"is_fiat", d.reference->is_fiat}};
    } else {
        out["reference"] = nullptr;
    }
    out["is_stablecoin"] = d.is_stablecoin;
    out["explicit_legal_classification"] =
        d.explicit_legal_classification ? json(to_string(*d.explicit_legal_classification))
                                        : json(nullptr);
    if (d.legal_test_inputs) {
        const LegalTestInputs& t = *d.legal_test_inputs;
        out["legal_test_inputs"] = {
            {"howey",
             {{"investment_of_money", t.howey.investment_of_money},
              {"common_enterprise", t.howey.common_enterprise},
              {"expectation_of_profits", t.howey.expectation_of_profits},
              {"efforts_of_others", t.howey.efforts_of_others}}},
            {"mifid",
             {{"profits_or_repayment", t.mifid.profits_or_repayment},
              {"claim_against_identifiable_issuer",
               t.mifid.claim_against_identifiable_issuer}}},
            {"aif",
             {{"pooled_risk_return", t.aif.pooled_risk_return},
              {"defined_investment_policy", t.aif.defined_investment_policy},
              {"investor_benefit", t.aif.investor_benefit}}}};
    } else {
        out["legal_test_inputs"] = nullptr;
    }
    out["critical_resource_surface"] = surface_to_json(d.critical_resource_surface);
    if (d.metadata) {
        out["metadata"] = {{"market_cap_usd", d.metadata->market_cap_usd},
                           {"snapshot_date", d.metadata->snapshot_date.to_string()}};
    } else {
        out["metadata"] = nullptr;
    }
    return out;
}

}  // namespace

std::string serialize_corpus(const Corpus& corpus) {
    json doc = json::object();
    doc["version"] = corpus.version;
    if (corpus.provenance) {
        json prov = json::object();
        prov["source"] = corpus.provenance->source;
        prov["snapshot_date"] = corpus.provenance->snapshot_date
                                    ? json(corpus.provenance->snapshot_date->to_string())
                                    : json(nullptr);
        doc["provenance"] = std::move(prov);
    } else {
        doc["provenance"] = nullptr;
    }
    json assets = json::array();
    for (const auto& asset : corpus.assets) assets.push_back(asset_to_json(asset));
    doc["assets"] = std::move(assets);
    return doc.dump(2) + "\n";
}

bool write_corpus(const Corpus& corpus, const std::string& path, std::string* error) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        if (error != nullptr) *error = "cannot open " + path + " for writing";
        return false;
    }
    out << serialize_corpus(corpus);
    out.flush();
    if (!out) {
        if (error != nullptr) *error = "write failed for " + path;
        return false;
    }
    return true;
}

}  // namespace taxonomy
