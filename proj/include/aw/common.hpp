#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace aw {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

using Bytes = std::vector<u8>;

// Raised by config parsing/validation; message names the offending field.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

inline u32 rotl32(u32 x, unsigned r) {
    r &= 31u;
    return r == 0 ? x : (x << r) | (x >> (32u - r));
}

std::string to_hex(const Bytes& data);
std::string to_hex64(u64 w);
Bytes from_hex(const std::string& s);  // throws std::invalid_argument on bad input

// Big-endian (most-significant-byte-first) word packing, the fixed
// byte-order convention used throughout.
u64 load_be64(const u8* p);
void store_be64(u64 w, u8* p);

// splitmix64: deterministic generator for placeholder tables and test data.
struct SplitMix64 {
    u64 s;
    explicit SplitMix64(u64 seed) : s(seed) {}
    u64 next() {
        u64 z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

}  // namespace aw
