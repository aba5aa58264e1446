#include "taxonomy/holders.hpp"

#include <fstream>
#include <sstream>

namespace taxonomy {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

// Splits a "# key=value" comment body; returns false when no '=' present.
bool split_kv(const std::string& body, std::string& key, std::string& value) {
    std::size_t eq = body.find('=');
    if (eq == std::string::npos) return false;
    key = trim(body.substr(0, eq));
    value = trim(body.substr(eq + 1));
    return true;
}

}  // namespace

SnapshotLoadResult parse_holder_csv(const std::string& text) {
    SnapshotLoadResult result;
    HolderSnapshot snapshot;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool version_seen = false;
    bool header_seen = false;
    bool failed = false;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        std::string where = "line " + std::to_string(line_no);

        if (line_no == 1) {
            std::string key, value;
            if (line.rfind('#', 0) != 0 || !split_kv(line.substr(1), key, value) ||
                key != "version") {
                result.report.error(where, "missing version comment: first line must be \"# version=1\"");
                failed = true;
            } else if (value != "1") {
                result.report.error(where, "unsupported snapshot version " + value + " (expected 1)");
                failed = true;
            } else {
                version_seen = true;
            }
            continue;
        }

        if (line.empty()) continue;

        if (line.rfind('#', 0) == 0) {
            std::string key, value;
            if (!split_kv(line.substr(1), key, value)) continue;  // free-form comment
            if (key == "chain") {
                snapshot.chain = value;
            } else if (key == "token_id") {
                snapshot.token_id = value;
            } else if (key == "snapshot_date") {
                auto date = Date::parse(value);
                if (date) {
                    snapshot.snapshot_date = *date;
                } else {
                    result.report.warning(where, "unparseable snapshot_date \"" + value + "\"");
                }
            } else if (key != "version") {
                result.report.warning(where, "unknown metadata key \"" + key + "\"");
            }
            continue;
        }

        if (!header_seen) {
            if (line != "address,balance") {
                result.report.error(where, "missing header: expected \"address,balance\"");
                failed = true;
                break;
            }
            header_seen = true;
            continue;
        }

        std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            result.report.error(where, "malformed row: expected \"address,balance\"");
            failed = true;
            continue;
        }
        std::string address = trim(line.substr(0, comma));
        std::string balance_text = trim(line.substr(comma + 1));
        if (address.empty()) {
            result.report.error(where, "empty address");
            failed = true;
            continue;
        }
        if (!balance_text.empty() && balance_text.front() == '-') {
            result.report.error(where, "negative balance at line " + std::to_string(line_no));
            failed = true;
            continue;
        }
        auto balance = Decimal::parse(balance_text);
        if (!balance) {
            result.report.error(where, "unparseable balance \"" + balance_text + "\"");
            failed = true;
            continue;
        }
        snapshot.balances.push_back({std::move(address), std::move(*balance)});
    }

    if (version_seen && !header_seen && !failed) {
        result.report.error("file", "missing header: expected \"address,balance\"");
        failed = true;
    }
    if (header_seen && snapshot.balances.empty() && !failed) {
        result.report.error("file", "empty body: no holder rows");
        failed = true;
    }
    if (!failed) {
        bool any_positive = false;
        for (const auto& hb : snapshot.balances) {
            if (!hb.balance.is_zero()) { any_positive = true; break; }
        }
        if (!any_positive) {
            result.report.error("file", "degenerate snapshot: no strictly positive balance");
            failed = true;
        }
    }

    if (!snapshot.chain) result.report.warning("file", "missing chain metadata comment");
    if (!snapshot.token_id) result.report.warning("file", "missing token_id metadata comment");
    if (!snapshot.snapshot_date) result.report.warning("file", "missing snapshot_date metadata comment");

    if (failed) {
        result.status = LoadStatus::data_errors;
    } else {
        result.status = LoadStatus::ok;
        result.snapshot = std::move(snapshot);
    }
    return result;
}

SnapshotLoadResult load_holder_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        SnapshotLoadResult result;
        result.report.error(path, "cannot open file");
        result.status = LoadStatus::io_error;
        return result;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_holder_csv(buf.str());
}

std::string serialize_holder_csv(const HolderSnapshot& snapshot) {
    std::ostringstream out;
    out << "# version=1\n";
    if (snapshot.chain) out << "# chain=" << *snapshot.chain << "\n";
    if (snapshot.token_id) out << "# token_id=" << *snapshot.token_id << "\n";
    if (snapshot.snapshot_date) out << "# snapshot_date=" << snapshot.snapshot_date->to_string() << "\n";
    out << "address,balance\n";
    for (const auto& hb : snapshot.balances) {
        out << hb.address << "," << hb.balance.to_string() << "\n";
    }
    return out.str();
}

}  // namespace taxonomy
