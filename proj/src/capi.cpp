#include "aw.h"

#include <cstring>

#include "aw/cost.hpp"
#include "aw/hwsim.hpp"
#include "aw/kat.hpp"

using namespace aw;

struct aw_config {
    CipherConfig cfg;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& msg) {
    if (err) *err = dup_string(msg);
}

int wrap(char** err, const auto& fn) {
    try {
        return fn();
    } catch (const ConfigError& e) {
        set_err(err, e.what());
        return AW_ERR_CONFIG;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return AW_ERR_USAGE;
    }
}

Cipher to_cipher(int c) {
    if (c != AW_CIPHER_ACE && c != AW_CIPHER_WAGE)
        throw std::invalid_argument("unknown cipher id");
    return c == AW_CIPHER_ACE ? Cipher::Ace : Cipher::Wage;
}

}  // namespace

extern "C" {

const char* aw_version(void) { return "1.0.0"; }

int aw_config_default(aw_config** out) {
    return wrap(nullptr, [&] {
        auto* h = new aw_config{default_config()};
        finalize_config(h->cfg);
        *out = h;
        return AW_OK;
    });
}

int aw_config_load_file(const char* path, aw_config** out, char** err) {
    return wrap(err, [&] {
        *out = new aw_config{load_config_file(path)};
        return AW_OK;
    });
}

int aw_config_load_text(const char* text, aw_config** out, char** err) {
    return wrap(err, [&] {
        *out = new aw_config{load_config_text(text)};
        return AW_OK;
    });
}

void aw_config_free(aw_config* cfg) { delete cfg; }

uint64_t aw_config_fingerprint(const aw_config* cfg) {
    return config_fingerprint(cfg->cfg);
}

int aw_aead(const aw_config* cfg, int cipher, unsigned p, int direction,
            const uint8_t key[16], const uint8_t nonce[16],
            const uint8_t* ad, size_t ad_len,
            const uint8_t* payload, size_t payload_len,
            const uint8_t* tag_in, uint8_t* payload_out, uint8_t tag_out[16]) {
    return wrap(nullptr, [&]() -> int {
        if (!cfg || !key || !nonce || (!payload && payload_len) || (!ad && ad_len))
            throw std::invalid_argument("null argument");
        AeadRequest req;
        req.key.assign(key, key + 16);
        req.nonce.assign(nonce, nonce + 16);
        req.associated_data.assign(ad, ad + ad_len);
        req.payload.assign(payload, payload + payload_len);
        req.direction = direction == AW_DECRYPT ? Direction::Decrypt : Direction::Encrypt;
        if (req.direction == Direction::Decrypt) {
            if (!tag_in) throw std::invalid_argument("decryption needs a tag");
            req.tag.assign(tag_in, tag_in + 16);
        }
        auto res = aead(req, to_cipher(cipher), cfg->cfg, p);
        if (tag_out) std::memcpy(tag_out, res.tag.data(), 16);
        if (!res.tag_ok) {
            if (payload_out) std::memset(payload_out, 0, payload_len);
            return AW_ERR_VERIFY;
        }
        if (payload_out && !res.payload_out.empty())
            std::memcpy(payload_out, res.payload_out.data(), res.payload_out.size());
        return AW_OK;
    });
}

int aw_hash(const aw_config* cfg, unsigned p, const uint8_t* msg, size_t msg_len,
            uint8_t digest[32]) {
    return wrap(nullptr, [&] {
        if (!cfg || !digest || (!msg && msg_len))
            throw std::invalid_argument("null argument");
        auto d = ace_hash(Bytes(msg, msg + msg_len), cfg->cfg, p);
        std::memcpy(digest, d.data(), 32);
        return AW_OK;
    });
}

int aw_kat_generate(const aw_config* cfg, char** out) {
    return wrap(nullptr, [&] {
        *out = dup_string(generate_kats(cfg->cfg));
        return AW_OK;
    });
}

int aw_kat_verify(const aw_config* cfg, const char* text, char** message) {
    return wrap(message, [&]() -> int {
        auto res = verify_kats(text, cfg->cfg);
        if (message) *message = dup_string(res.message);
        return res.ok ? AW_OK : AW_ERR_VERIFY;
    });
}

int aw_simulate(const aw_config* cfg, const char* script_text, int as_json,
                char** trace, char** err) {
    return wrap(err, [&] {
        auto script = parse_script(script_text);
        auto core = sim_reset(script.cipher, script.p, cfg->cfg);
        auto t = sim_run(core, script);
        *trace = dup_string(as_json ? trace_to_json(t) : trace_to_text(t));
        return AW_OK;
    });
}

int aw_report(const aw_config* cfg, int cipher, int as_json, char** out) {
    return wrap(nullptr, [&] {
        GeCostTable ge;
        auto rep = scaling_report(to_cipher(cipher), cfg->cfg, ge);
        *out = dup_string(as_json ? report_to_json(rep) : report_to_text(rep));
        return AW_OK;
    });
}

void aw_string_free(char* s) { delete[] s; }

}  // extern "C"
