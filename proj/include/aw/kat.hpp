#pragma once

#include "aw/sponge.hpp"

namespace aw {

struct KatRecord {
    unsigned index = 0;
    Cipher cipher = Cipher::Ace;
    unsigned p = 1;
    bool hash = false;
    Bytes key, nonce, ad, pt, ct, tag; // aead records
    Bytes msg, digest;                 // hash records

    bool operator==(const KatRecord&) const = default;
};

/// Deterministic vector grid: per cipher and parallel degree, AEAD records
/// over short/aligned/ragged AD and payload lengths, plus hash records for
/// ACE.  Inputs depend only on the grid position, never on p, so records
/// with the same logical inputs agree across degrees.
std::vector<KatRecord> kat_grid(const CipherConfig& cfg);

std::string serialize_kats(const std::vector<KatRecord>& records,
                           const CipherConfig& cfg);
/// Throws std::invalid_argument on malformed input (line number included).
std::vector<KatRecord> parse_kats(const std::string& text, u64* fingerprint = nullptr);

struct KatVerifyResult {
    bool ok = true;
    unsigned failed_index = 0;
    std::string field;   // first differing field
    std::string message; // human-readable summary
};

std::string generate_kats(const CipherConfig& cfg);
KatVerifyResult verify_kats(const std::string& text, const CipherConfig& cfg);

}  // namespace aw
