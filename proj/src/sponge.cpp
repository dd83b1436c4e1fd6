#include "aw/sponge.hpp"

namespace aw {

static u64 partial_word(const u8* p, size_t n) {
    u64 w = 0;
    for (size_t i = 0; i < n; ++i) w |= static_cast<u64>(p[i]) << (56 - 8 * i);
    return w;
}

std::vector<Block> pad_blocks(const Bytes& data) {
    std::vector<Block> out;
    size_t full = data.size() / 8;
    for (size_t i = 0; i < full; ++i) out.push_back({load_be64(data.data() + 8 * i), 64, false});
    size_t rem = data.size() % 8;
    if (rem) {
        u64 w = partial_word(data.data() + 8 * full, rem);
        unsigned len = static_cast<unsigned>(8 * rem);
        w |= 1ull << (63 - len);
        out.push_back({w, len, true});
    }
    return out;
}

std::vector<Block> split_blocks(const Bytes& data) {
    std::vector<Block> out;
    size_t full = data.size() / 8;
    for (size_t i = 0; i < full; ++i) out.push_back({load_be64(data.data() + 8 * i), 64, false});
    size_t rem = data.size() % 8;
    if (rem)
        out.push_back({partial_word(data.data() + 8 * full, rem),
                       static_cast<unsigned>(8 * rem), false});
    return out;
}

RateView make_rate_view(Cipher cipher, const CipherConfig& cfg) {
    RateView rv;
    rv.cipher = cipher;
    if (cipher == Cipher::Ace) {
        for (const auto& rb : cfg.rate_bytes_ace)
            for (int b = 7; b >= 0; --b)
                rv.positions.push_back({rb.word, rb.bit * 8 + static_cast<unsigned>(b)});
    } else {
        for (const auto& rs : cfg.wage_rate_stages)
            for (int b = static_cast<int>(rs.bits) - 1; b >= 0; --b)
                rv.positions.push_back({rs.stage, static_cast<unsigned>(b)});
    }
    return rv;
}

static u8 get_bit(const SpongeState& s, const BitPos& pos) {
    if (s.cipher == Cipher::Ace) return static_cast<u8>((s.ace.reg(pos.word) >> pos.bit) & 1);
    return static_cast<u8>((s.wage.s[pos.word] >> pos.bit) & 1);
}

static void xor_bit(SpongeState& s, const BitPos& pos, u8 v) {
    if (!v) return;
    if (s.cipher == Cipher::Ace)
        s.ace.reg(pos.word) ^= 1ull << pos.bit;
    else
        s.wage.s[pos.word] ^= static_cast<u8>(1u << pos.bit);
}

u64 extract_rate(const SpongeState& s, const RateView& rv) {
    u64 w = 0;
    for (const auto& pos : rv.positions) w = (w << 1) | get_bit(s, pos);
    return w;
}

SpongeState inject_rate(const SpongeState& s, const RateView& rv, u64 word,
                        InjectMode mode) {
    SpongeState out = s;
    u64 delta = mode == InjectMode::Absorb ? word : word ^ extract_rate(s, rv);
    unsigned n = static_cast<unsigned>(rv.positions.size());
    for (unsigned i = 0; i < n; ++i)
        xor_bit(out, rv.positions[i], static_cast<u8>((delta >> (n - 1 - i)) & 1));
    return out;
}

SpongeState replace_rate_padded(const SpongeState& s, const RateView& rv, u64 word,
                                unsigned len_bits) {
    if (len_bits >= 64) return inject_rate(s, rv, word, InjectMode::Replace);
    u64 head = len_bits == 0 ? 0 : ~0ull << (64 - len_bits);
    u64 old = extract_rate(s, rv);
    u64 next = (word & head) | ((old ^ (1ull << (63 - len_bits))) & ~head);
    return inject_rate(s, rv, next, InjectMode::Replace);
}

SpongeState apply_domain_separator(const SpongeState& s, u8 ds, const CipherConfig& cfg) {
    const auto& positions = s.cipher == Cipher::Ace ? cfg.ace_domain_sep_positions
                                                    : cfg.wage_domain_sep_positions;
    SpongeState out = s;
    unsigned n = static_cast<unsigned>(positions.size());
    for (unsigned i = 0; i < n; ++i)
        xor_bit(out, positions[i], static_cast<u8>((ds >> (n - 1 - i)) & 1));
    return out;
}

static void check_key_nonce(const Bytes& key, const Bytes& nonce) {
    if (key.size() != 16) throw std::invalid_argument("key must be 16 bytes");
    if (nonce.size() != 16) throw std::invalid_argument("nonce must be 16 bytes");
}

/// Bit k of the 259-bit loading stream K || N || 000, numbered from the
/// most significant end.
static u8 stream_bit(const Bytes& key, const Bytes& nonce, unsigned k) {
    if (k < 128) return (key[k / 8] >> (7 - k % 8)) & 1;
    if (k < 256) return (nonce[(k - 128) / 8] >> (7 - k % 8)) & 1;
    return 0;
}

static std::array<u8, 37> loading_words(const Bytes& key, const Bytes& nonce) {
    std::array<u8, 37> w{};
    for (unsigned i = 0; i < 37; ++i)
        for (unsigned t = 0; t < 7; ++t)
            w[i] |= static_cast<u8>(stream_bit(key, nonce, 7 * i + t) << (6 - t));
    return w;
}

WageState wage_load_direct(const Bytes& key, const Bytes& nonce, const CipherConfig& cfg) {
    check_key_nonce(key, nonce);
    (void)cfg;
    WageState s;
    auto w = loading_words(key, nonce);
    for (unsigned i = 0; i < 37; ++i) s.s[i] = w[i];
    return s;
}

WageState wage_load_shift(const Bytes& key, const Bytes& nonce, const CipherConfig& cfg) {
    check_key_nonce(key, nonce);
    WageState s;
    auto w = loading_words(key, nonce);
    for (const auto& region : cfg.wage_load_regions) {
        unsigned lo = region.entry_stage - region.length + 1;
        for (unsigned c = 0; c < region.length; ++c) {
            for (unsigned i = lo; i < region.entry_stage; ++i) s.s[i] = s.s[i + 1];
            s.s[region.entry_stage] = w[lo + c];
        }
    }
    return s;
}

SpongeState load_ae(const Bytes& key, const Bytes& nonce, Cipher cipher,
                    const CipherConfig& cfg) {
    check_key_nonce(key, nonce);
    SpongeState s;
    s.cipher = cipher;
    if (cipher == Cipher::Ace) {
        s.ace.a = load_be64(key.data());
        s.ace.c = load_be64(key.data() + 8);
        s.ace.b = load_be64(nonce.data());
        s.ace.e = load_be64(nonce.data() + 8);
        s.ace.d = 0;
    } else {
        s.wage = wage_load_shift(key, nonce, cfg);
    }
    return s;
}

AceState load_hash_iv(const CipherConfig& cfg) {
    AceState s;
    for (const auto& iv : cfg.hash_iv_bytes)
        s.reg(iv.reg) |= static_cast<u64>(iv.value) << (8 * iv.byte);
    return s;
}

static Bytes wage_pack_tag(const std::array<u8, 37>& w) {
    Bytes tag(16, 0);
    for (unsigned k = 0; k < 128; ++k) {
        u8 bit = (w[k / 7] >> (6 - k % 7)) & 1;
        tag[k / 8] |= static_cast<u8>(bit << (7 - k % 8));
    }
    return tag;
}

Bytes wage_tag_direct(const WageState& s, const CipherConfig& cfg) {
    (void)cfg;
    std::array<u8, 37> w{};
    for (unsigned i = 0; i < 37; ++i) w[i] = s.s[i];
    return wage_pack_tag(w);
}

Bytes wage_tag_shift(const WageState& s, const CipherConfig& cfg) {
    WageState t = s;
    std::array<u8, 37> w{};
    for (const auto& region : cfg.wage_load_regions) {
        unsigned lo = region.entry_stage - region.length + 1;
        for (unsigned c = 0; c < region.length; ++c) {
            w[lo + c] = t.s[lo];
            for (unsigned i = lo; i < region.entry_stage; ++i) t.s[i] = t.s[i + 1];
            t.s[region.entry_stage] = 0;
        }
    }
    return wage_pack_tag(w);
}

Bytes tag_extract(const SpongeState& s, const CipherConfig& cfg) {
    if (s.cipher == Cipher::Ace) {
        Bytes tag(16);
        store_be64(s.ace.a, tag.data());
        store_be64(s.ace.c, tag.data() + 8);
        return tag;
    }
    return wage_tag_shift(s.wage, cfg);
}

SpongeState permute(const SpongeState& s, const CipherConfig& cfg, unsigned p) {
    SpongeState out = s;
    if (s.cipher == Cipher::Ace)
        out.ace = ace_permutation(s.ace, cfg, p);
    else
        out.wage = wage_permutation(s.wage, cfg, p);
    return out;
}

static SpongeState run_schedule(SpongeState s, const std::vector<ScheduleAction>& schedule,
                                const RateView& rv, u64 k0, u64 k1, u8 ds,
                                const CipherConfig& cfg, unsigned p) {
    for (const auto& action : schedule) {
        switch (action.kind) {
            case ScheduleAction::AbsorbKey0:
                s = inject_rate(s, rv, k0, InjectMode::Absorb);
                break;
            case ScheduleAction::AbsorbKey1:
                s = inject_rate(s, rv, k1, InjectMode::Absorb);
                break;
            case ScheduleAction::Permute:
                s = apply_domain_separator(s, ds, cfg);
                s = permute(s, cfg, p);
                break;
        }
    }
    return s;
}

AeadResult aead(const AeadRequest& req, Cipher cipher, const CipherConfig& cfg,
                unsigned p) {
    check_key_nonce(req.key, req.nonce);
    if (req.direction == Direction::Decrypt && req.tag.size() != 16)
        throw std::invalid_argument("decryption needs a 16-byte tag");

    const RateView rv = make_rate_view(cipher, cfg);
    const u64 k0 = load_be64(req.key.data());
    const u64 k1 = load_be64(req.key.data() + 8);
    const auto& ds = cfg.domain_separators;

    SpongeState s = load_ae(req.key, req.nonce, cipher, cfg);
    s = run_schedule(s, cfg.init_schedule, rv, k0, k1, ds.init, cfg, p);

    for (const auto& b : pad_blocks(req.associated_data)) {
        s = inject_rate(s, rv, b.bits, InjectMode::Absorb);
        s = apply_domain_separator(s, ds.ad, cfg);
        s = permute(s, cfg, p);
    }

    AeadResult res;
    if (req.direction == Direction::Encrypt) {
        for (const auto& b : pad_blocks(req.payload)) {
            u64 c = extract_rate(s, rv) ^ b.bits;
            for (unsigned i = 0; i < b.len_bits / 8; ++i)
                res.payload_out.push_back(static_cast<u8>(c >> (56 - 8 * i)));
            s = inject_rate(s, rv, b.bits, InjectMode::Absorb);
            s = apply_domain_separator(s, ds.payload, cfg);
            s = permute(s, cfg, p);
        }
    } else {
        for (const auto& b : split_blocks(req.payload)) {
            u64 m = extract_rate(s, rv) ^ b.bits;
            for (unsigned i = 0; i < b.len_bits / 8; ++i)
                res.payload_out.push_back(static_cast<u8>(m >> (56 - 8 * i)));
            s = b.len_bits == 64 ? inject_rate(s, rv, b.bits, InjectMode::Replace)
                                 : replace_rate_padded(s, rv, b.bits, b.len_bits);
            s = apply_domain_separator(s, ds.payload, cfg);
            s = permute(s, cfg, p);
        }
    }

    s = run_schedule(s, cfg.final_schedule, rv, k0, k1, ds.final, cfg, p);
    res.tag = tag_extract(s, cfg);

    if (req.direction == Direction::Decrypt) {
        u8 diff = 0;
        for (size_t i = 0; i < 16; ++i) diff |= res.tag[i] ^ req.tag[i];
        if (diff) {
            res.payload_out.clear();
            res.tag_ok = false;
        }
    }
    return res;
}

Bytes ace_hash(const Bytes& message, const CipherConfig& cfg, unsigned p) {
    const RateView rv = make_rate_view(Cipher::Ace, cfg);
    SpongeState s;
    s.cipher = Cipher::Ace;
    s.ace = load_hash_iv(cfg);
    for (const auto& b : pad_blocks(message)) {
        s = inject_rate(s, rv, b.bits, InjectMode::Absorb);
        s = permute(s, cfg, p);
    }
    Bytes digest(32);
    for (unsigned i = 0; i < 4; ++i) {
        store_be64(extract_rate(s, rv), digest.data() + 8 * i);
        if (i < 3) s = permute(s, cfg, p);
    }
    return digest;
}

}  // namespace aw
