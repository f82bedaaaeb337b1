#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace evopt {

// FNV-1a, 64-bit. Used for cassette keys, manifest hashes and the
// execution cache. Stable across platforms and documented in the
// cassette header so external tools can precompute keys.
inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string fnv1a64_hex(std::string_view data) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace evopt
