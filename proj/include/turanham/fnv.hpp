#pragma once

#include <cstdint>
#include <string_view>

namespace turanham {

// FNV-1a, 64-bit.
constexpr std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char byte : data) {
        hash ^= byte;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

}  // namespace turanham
