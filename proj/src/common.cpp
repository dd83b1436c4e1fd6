#include "aw/common.hpp"

#include <cctype>

namespace aw {

static const char* kHexDigits = "0123456789abcdef";

std::string to_hex(const Bytes& data) {
    std::string out;
    out.reserve(data.size() * 2);
    for (u8 b : data) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0x0f]);
    }
    return out;
}

std::string to_hex64(u64 w) {
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = kHexDigits[w & 0x0f];
        w >>= 4;
    }
    return out;
}

static int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

Bytes from_hex(const std::string& s) {
    if (s.size() % 2 != 0)
        throw std::invalid_argument("hex string has odd length");
    Bytes out;
    out.reserve(s.size() / 2);
    for (size_t i = 0; i < s.size(); i += 2) {
        int hi = hex_val(s[i]);
        int lo = hex_val(s[i + 1]);
        if (hi < 0 || lo < 0)
            throw std::invalid_argument("invalid hex digit");
        out.push_back(static_cast<u8>((hi << 4) | lo));
    }
    return out;
}

u64 load_be64(const u8* p) {
    u64 w = 0;
    for (int i = 0; i < 8; ++i) w = (w << 8) | p[i];
    return w;
}

void store_be64(u64 w, u8* p) {
    for (int i = 7; i >= 0; --i) {
        p[i] = static_cast<u8>(w & 0xff);
        w >>= 8;
    }
}

}  // namespace aw
