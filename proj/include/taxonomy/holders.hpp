#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taxonomy/asset.hpp"
#include "taxonomy/decimal.hpp"
#include "taxonomy/validation.hpp"

namespace taxonomy {

struct HolderBalance {
    std::string address;
    Decimal balance;

    bool operator==(const HolderBalance&) const = default;
};

// Point-in-time token holder snapshot parsed from the CSV interchange format.
struct HolderSnapshot {
    std::optional<std::string> chain;
    std::optional<std::string> token_id;
    std::optional<Date> snapshot_date;
    std::vector<HolderBalance> balances;
};

enum class LoadStatus {
    ok,           // parsed, no errors (warnings allowed)
    data_errors,  // file readable but contents invalid
    io_error,     // file missing or unreadable
};

struct SnapshotLoadResult {
    std::optional<HolderSnapshot> snapshot;
    ValidationReport report;
    LoadStatus status = LoadStatus::ok;
};

// Parses holder CSV text: a "# version=1" first line, optional "# key=value"
// metadata comments, an "address,balance" header, then one row per holder.
SnapshotLoadResult parse_holder_csv(const std::string& text);

// Reads and parses a holder CSV file from disk.
SnapshotLoadResult load_holder_csv(const std::string& path);

// Writes a snapshot back to the CSV interchange format (round-trips metadata).
std::string serialize_holder_csv(const HolderSnapshot& snapshot);

}  // namespace taxonomy
