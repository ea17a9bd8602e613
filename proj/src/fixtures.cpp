#include "turanham/fixtures.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "turanham/fnv.hpp"

#include "fixtures_data.inc"

namespace turanham {

namespace {

struct EmbeddedTable {
    int d;
    std::string_view csv;
    std::uint64_t checksum;  // FNV-1a over the raw CSV bytes
};

constexpr EmbeddedTable kTables[] = {
    {2, kTableD2, 0x311b2bc9bb4b4854ULL},
    {3, kTableD3, 0x63e6d5b11066b3cbULL},
    {4, kTableD4, 0x039cd8e63770853bULL},
    {5, kTableD5, 0x87472909cf71ec1dULL},
    {6, kTableD6, 0xac33c98c4ad551beULL},
};

void parse_table(const EmbeddedTable& table, std::vector<CountsRecord>& out) {
    if (fnv1a64(table.csv) != table.checksum) {
        throw std::runtime_error("fixture table for d=" + std::to_string(table.d) +
                                 " fails its checksum; the embedded data was altered");
    }
    std::istringstream in{std::string(table.csv)};
    std::string line;
    if (!std::getline(in, line) || line != "n,linear,labelled,rotations,all_symmetries") {
        throw std::runtime_error("fixture table for d=" + std::to_string(table.d) +
                                 " has an unexpected header");
    }
    int expected_n = 1;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::string cell;
        CountsRecord rec;
        rec.d = table.d;
        auto next = [&]() -> std::string {
            if (!std::getline(fields, cell, ',')) {
                throw std::runtime_error("fixture row truncated: " + line);
            }
            return cell;
        };
        rec.n = std::stoi(next());
        rec.linear = ExactInt(next());
        rec.labelled = ExactInt(next());
        rec.rotations = ExactInt(next());
        rec.all_symmetries = ExactInt(next());
        if (rec.n != expected_n) {
            throw std::runtime_error("fixture rows for d=" + std::to_string(table.d) +
                                     " are not consecutive at n=" + std::to_string(rec.n));
        }
        ++expected_n;
        out.push_back(std::move(rec));
    }
}

}  // namespace

FixtureSet FixtureSet::load() {
    FixtureSet set;
    for (const EmbeddedTable& table : kTables) {
        parse_table(table, set.records_);
    }
    return set;
}

int FixtureSet::n_max(int d) const {
    int best = 0;
    for (const CountsRecord& rec : records_) {
        if (rec.d == d && rec.n > best) {
            best = rec.n;
        }
    }
    return best;
}

}  // namespace turanham
