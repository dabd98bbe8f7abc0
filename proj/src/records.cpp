#include "abcroots/records.hpp"

#include "abcroots/errors.hpp"

#include <array>
#include <cstdio>
#include <fstream>

namespace abcroots {

namespace {

constexpr std::array<const char*, 16> kFields = {
    "schema", "k", "s", "n", "p", "q", "d", "g", "a", "b", "c",
    "rad_abc", "quality", "approx_gain", "power_gain", "flags"};

void put_optional_double(nlohmann::json& j, const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
    else j[key] = nullptr;
}

std::optional<double> get_optional_double(const nlohmann::json& j, const char* key) {
    if (j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

} // namespace

nlohmann::json record_to_json(const ScanRecord& rec) {
    nlohmann::json j;
    j["schema"] = kScanSchemaVersion;
    j["k"] = rec.k;
    j["s"] = rec.s;
    j["n"] = rec.n;
    j["p"] = rec.p;
    j["q"] = rec.q;
    j["d"] = rec.d;
    j["g"] = rec.g;
    j["a"] = rec.a;
    j["b"] = rec.b;
    j["c"] = rec.c;
    if (rec.rad_abc) j["rad_abc"] = *rec.rad_abc;
    else j["rad_abc"] = nullptr;
    put_optional_double(j, "quality", rec.quality);
    put_optional_double(j, "approx_gain", rec.approx_gain);
    put_optional_double(j, "power_gain", rec.power_gain);
    j["flags"] = rec.flags;
    return j;
}

ScanRecord record_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("record is not a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (std::find_if(kFields.begin(), kFields.end(),
                         [&](const char* f) { return key == f; }) == kFields.end())
            throw SchemaError("unknown field '" + key + "'");
    }
    for (const char* field : kFields)
        if (!j.contains(field)) throw SchemaError(std::string("missing field '") + field + "'");
    try {
        if (j.at("schema").get<int>() != kScanSchemaVersion)
            throw SchemaError("unsupported schema version " + j.at("schema").dump());

        ScanRecord rec;
        rec.k = j.at("k").get<long>();
        rec.s = j.at("s").get<int>();
        rec.n = j.at("n").get<int>();
        rec.p = j.at("p").get<std::string>();
        rec.q = j.at("q").get<std::string>();
        rec.d = j.at("d").get<std::string>();
        rec.g = j.at("g").get<long>();
        rec.a = j.at("a").get<std::string>();
        rec.b = j.at("b").get<std::string>();
        rec.c = j.at("c").get<std::string>();
        if (!j.at("rad_abc").is_null()) rec.rad_abc = j.at("rad_abc").get<std::string>();
        rec.quality = get_optional_double(j, "quality");
        rec.approx_gain = get_optional_double(j, "approx_gain");
        rec.power_gain = get_optional_double(j, "power_gain");
        rec.flags = j.at("flags").get<std::vector<std::string>>();
        return rec;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed record: ") + e.what());
    }
}

void append_jsonl(const std::filesystem::path& path, std::span<const ScanRecord> records) {
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for appending");
    for (const auto& rec : records) out << record_to_json(rec).dump() << '\n';
    out.flush();
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::vector<ScanRecord> read_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::vector<ScanRecord> out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw SchemaError(path.string() + ":" + std::to_string(lineno) + ": invalid JSON");
        out.push_back(record_from_json(j));
    }
    return out;
}

std::set<std::tuple<long, int, int>> existing_keys(const std::filesystem::path& path) {
    std::set<std::tuple<long, int, int>> keys;
    if (!std::filesystem::exists(path)) return keys;
    for (const auto& rec : read_jsonl(path)) keys.insert(rec.key());
    return keys;
}

namespace {

// RFC 4180: quote when the field holds a comma, quote or newline.
std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

std::string fixed4(const std::optional<double>& v) {
    if (!v) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", *v);
    return buf;
}

std::string join_flags(const std::vector<std::string>& flags) {
    std::string out;
    for (size_t i = 0; i < flags.size(); ++i) {
        if (i) out += ';';
        out += flags[i];
    }
    return out;
}

} // namespace

std::string csv_header() {
    return "k,s,n,p,q,d,g,a,b,c,rad_abc,quality,approx_gain,power_gain,flags";
}

std::string csv_line(const ScanRecord& rec) {
    std::string out;
    out += std::to_string(rec.k) + ',' + std::to_string(rec.s) + ',' + std::to_string(rec.n) + ',';
    out += csv_escape(rec.p) + ',' + csv_escape(rec.q) + ',' + csv_escape(rec.d) + ',';
    out += std::to_string(rec.g) + ',';
    out += csv_escape(rec.a) + ',' + csv_escape(rec.b) + ',' + csv_escape(rec.c) + ',';
    out += csv_escape(rec.rad_abc.value_or("")) + ',';
    out += fixed4(rec.quality) + ',' + fixed4(rec.approx_gain) + ',' + fixed4(rec.power_gain) + ',';
    out += csv_escape(join_flags(rec.flags));
    return out;
}

void write_csv(const std::filesystem::path& path, std::span<const ScanRecord> records) {
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << csv_header() << '\n';
    for (const auto& rec : records) out << csv_line(rec) << '\n';
    out.flush();
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

} // namespace abcroots
