#pragma once

#include "aw/ace.hpp"
#include "aw/wage.hpp"

namespace aw {

enum class Direction { Encrypt, Decrypt };

struct AeadRequest {
    Bytes key;    // 16 bytes
    Bytes nonce;  // 16 bytes
    Bytes associated_data;
    Bytes payload; // plaintext (encrypt) or ciphertext (decrypt)
    Bytes tag;     // expected tag, decrypt only
    Direction direction = Direction::Encrypt;
};

struct AeadResult {
    Bytes payload_out;
    Bytes tag;
    bool tag_ok = true; // always true for encrypt
};

/// One 64-bit input block.  `len_bits` counts the original data bits;
/// padded blocks carry the 10* pattern after them.
struct Block {
    u64 bits = 0;
    unsigned len_bits = 64;
    bool padded = false;

    bool operator==(const Block&) const = default;
};

/// Splits MSB-first into 64-bit blocks; a final partial block gets a 1 bit
/// then zeros.  Exact multiples (including empty input) emit no padding.
std::vector<Block> pad_blocks(const Bytes& data);

/// Same split without inserting the padding bit (ciphertext side).
std::vector<Block> split_blocks(const Bytes& data);

/// Cipher-indexed state.
struct SpongeState {
    Cipher cipher = Cipher::Ace;
    AceState ace;
    WageState wage;

    bool operator==(const SpongeState&) const = default;
};

/// The ordered 64 state-bit positions forming the rate.
struct RateView {
    Cipher cipher = Cipher::Ace;
    std::vector<BitPos> positions; // listed most-significant-first
};

RateView make_rate_view(Cipher cipher, const CipherConfig& cfg);

enum class InjectMode { Absorb, Replace };

u64 extract_rate(const SpongeState& s, const RateView& rv);
SpongeState inject_rate(const SpongeState& s, const RateView& rv, u64 word,
                        InjectMode mode);
/// Replace the first len_bits with `word`, XOR the 10* padding into the rest.
SpongeState replace_rate_padded(const SpongeState& s, const RateView& rv, u64 word,
                                unsigned len_bits);

SpongeState apply_domain_separator(const SpongeState& s, u8 ds, const CipherConfig& cfg);

SpongeState load_ae(const Bytes& key, const Bytes& nonce, Cipher cipher,
                    const CipherConfig& cfg);
/// Region-wise shift-in loading and its direct placement map; load_ae uses
/// the shift form and the two must agree bit-exactly.
WageState wage_load_shift(const Bytes& key, const Bytes& nonce, const CipherConfig& cfg);
WageState wage_load_direct(const Bytes& key, const Bytes& nonce, const CipherConfig& cfg);

AceState load_hash_iv(const CipherConfig& cfg);

Bytes tag_extract(const SpongeState& s, const CipherConfig& cfg);
Bytes wage_tag_shift(const WageState& s, const CipherConfig& cfg);
Bytes wage_tag_direct(const WageState& s, const CipherConfig& cfg);

SpongeState permute(const SpongeState& s, const CipherConfig& cfg, unsigned p = 1);

AeadResult aead(const AeadRequest& req, Cipher cipher, const CipherConfig& cfg,
                unsigned p = 1);

/// 256-bit hash (ACE only): IV load, absorb, four-read squeeze.
Bytes ace_hash(const Bytes& message, const CipherConfig& cfg, unsigned p = 1);

}  // namespace aw
