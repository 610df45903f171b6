#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace htm {

// 64-bit FNV-1a. Used for content addressing of artifacts and cache keys,
// not for security.
constexpr std::uint64_t fnv1a64(std::string_view data,
                                std::uint64_t seed = 0xcbf29ce484222325ull) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Hex-encoded (16 chars, lowercase) FNV-1a of a string.
std::string content_hash(std::string_view data);

/// Content hash of a file's bytes. Throws on unreadable file.
std::string file_hash(const std::string& path);

}  // namespace htm
