#include "turanham/cache.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "turanham/fnv.hpp"

namespace turanham {

namespace {

std::string hex16(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[value & 0xF];
        value >>= 4;
    }
    return out;
}

ExactInt parse_count(const nlohmann::json& value) {
    if (!value.is_string()) {
        throw std::runtime_error("cache: counts must be decimal strings");
    }
    const std::string& text = value.get_ref<const std::string&>();
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw std::runtime_error("cache: malformed integer '" + text + "'");
    }
    return ExactInt(text);
}

}  // namespace

void save_cache(const std::string& path, CountingEngine& engine) {
    nlohmann::json doc;
    doc["triangles"] = nlohmann::json::array();
    for (auto& [d, triangle] : engine.triangles()) {
        nlohmann::json rows = nlohmann::json::array();
        for (int n = 0; n <= triangle.max_row(); ++n) {
            nlohmann::json row = nlohmann::json::array();
            for (const ExactInt& v : triangle.row(n)) {
                row.push_back(v.str());
            }
            rows.push_back(std::move(row));
        }
        doc["triangles"].push_back({{"module", "labelled"}, {"d", d}, {"rows", std::move(rows)}});
    }
    doc["sectors"] = nlohmann::json::array();
    for (auto& [key, table] : engine.sectors().tables()) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& [v, k, value] : table.computed_entries()) {
            entries.push_back({v, k, value.str()});
        }
        doc["sectors"].push_back({{"module", "sector"},
                                  {"m", key.first},
                                  {"d", key.second},
                                  {"entries", std::move(entries)}});
    }
    const std::string payload = doc.dump();
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cache: cannot open '" + path + "' for writing");
    }
    out << kCacheFormatVersion << " fnv1a64=" << hex16(fnv1a64(payload)) << '\n' << payload;
    if (!out) {
        throw std::runtime_error("cache: write to '" + path + "' failed");
    }
}

void load_cache(const std::string& path, CountingEngine& engine) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cache: cannot open '" + path + "'");
    }
    std::string header;
    std::getline(in, header);
    std::istringstream head(header);
    std::string version, checksum_field;
    head >> version >> checksum_field;
    if (version != kCacheFormatVersion) {
        throw std::runtime_error("cache: format version '" + version + "' is not supported (want " +
                                 std::string(kCacheFormatVersion) + ")");
    }
    if (checksum_field.rfind("fnv1a64=", 0) != 0 || checksum_field.size() != 8 + 16) {
        throw std::runtime_error("cache: malformed checksum field");
    }
    std::string payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (hex16(fnv1a64(payload)) != checksum_field.substr(8)) {
        throw std::runtime_error("cache: checksum mismatch, file is corrupt or truncated");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(payload);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("cache: payload is not valid JSON: ") + e.what());
    }
    for (const auto& entry : doc.value("triangles", nlohmann::json::array())) {
        const int d = entry.at("d").get<int>();
        if (d < 2) {
            throw std::runtime_error("cache: triangle with invalid part size d=" +
                                     std::to_string(d));
        }
        LabelledTriangle& triangle = engine.triangle(d, 0);
        const auto& rows = entry.at("rows");
        for (int n = 0; n < static_cast<int>(rows.size()); ++n) {
            std::vector<ExactInt> row;
            row.reserve(rows[static_cast<std::size_t>(n)].size());
            for (const auto& cell : rows[static_cast<std::size_t>(n)]) {
                row.push_back(parse_count(cell));
            }
            if (n <= triangle.max_row()) {
                if (triangle.row(n) != row) {
                    throw std::runtime_error("cache: triangle row disagrees with computed data at d=" +
                                             std::to_string(d) + ", n=" + std::to_string(n));
                }
            } else {
                triangle.restore_row(n, std::move(row));
            }
        }
    }
    for (const auto& entry : doc.value("sectors", nlohmann::json::array())) {
        const int m = entry.at("m").get<int>();
        const int d = entry.at("d").get<int>();
        if (m < 1 || d < 2) {
            throw std::runtime_error("cache: sector table with invalid key (m=" + std::to_string(m) +
                                     ", d=" + std::to_string(d) + ")");
        }
        SectorTable& table = engine.sectors().get(m, d);
        for (const auto& cell : entry.at("entries")) {
            table.restore_entry(cell.at(0).get<long long>(), cell.at(1).get<long long>(),
                                parse_count(cell.at(2)));
        }
    }
}

}  // namespace turanham
