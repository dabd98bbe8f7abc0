#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

namespace abcroots {

inline constexpr int kScanSchemaVersion = 1;

// One scanned resulting equation.  Big integers travel as decimal strings so
// the JSONL round-trip is bit-exact at any size; the factorization-dependent
// fields are absent when the budget ran out (see flags).
struct ScanRecord {
    long k = 0;
    int s = 0;
    int n = 0;
    std::string p, q, d; // d signed
    long g = 1;
    std::string a, b, c;
    std::optional<std::string> rad_abc;
    std::optional<double> quality;
    std::optional<double> approx_gain;
    std::optional<double> power_gain;
    std::vector<std::string> flags;

    std::tuple<long, int, int> key() const { return {k, s, n}; }
    bool operator==(const ScanRecord&) const = default;
};

nlohmann::json record_to_json(const ScanRecord& rec);

// Strict: rejects wrong schema versions and unknown fields.
ScanRecord record_from_json(const nlohmann::json& j);

void append_jsonl(const std::filesystem::path& path, std::span<const ScanRecord> records);
std::vector<ScanRecord> read_jsonl(const std::filesystem::path& path);

// Keys already present in a results file; missing file means empty set.
std::set<std::tuple<long, int, int>> existing_keys(const std::filesystem::path& path);

// RFC 4180, reals fixed to 4 decimals, flags joined with ';'.
void write_csv(const std::filesystem::path& path, std::span<const ScanRecord> records);
std::string csv_header();
std::string csv_line(const ScanRecord& rec);

} // namespace abcroots
