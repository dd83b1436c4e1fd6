#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aw.h"

namespace {

constexpr int kUsage = AW_ERR_USAGE;

int fail(const std::string& msg, int code) {
    std::cerr << "error: " << msg << "\n";
    return code;
}

std::string take_string(char* s) {
    if (!s) return {};
    std::string out(s);
    aw_string_free(s);
    return out;
}

bool parse_hex(const std::string& s, std::vector<uint8_t>& out) {
    if (s.size() % 2) return false;
    out.clear();
    for (size_t i = 0; i < s.size(); i += 2) {
        auto nib = [](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            if (c >= 'A' && c <= 'F') return c - 'A' + 10;
            return -1;
        };
        int hi = nib(s[i]), lo = nib(s[i + 1]);
        if (hi < 0 || lo < 0) return false;
        out.push_back(static_cast<uint8_t>(hi * 16 + lo));
    }
    return true;
}

std::string to_hex(const std::vector<uint8_t>& data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << data;
    return bool(out);
}

struct ConfigHandle {
    aw_config* cfg = nullptr;
    ~ConfigHandle() { aw_config_free(cfg); }
};

int load_config(const std::string& path, ConfigHandle& h) {
    if (path.empty()) {
        if (aw_config_default(&h.cfg) != AW_OK)
            return fail("default configuration rejected", AW_ERR_CONFIG);
        return AW_OK;
    }
    char* err = nullptr;
    int rc = aw_config_load_file(path.c_str(), &h.cfg, &err);
    if (rc != AW_OK) return fail(take_string(err), AW_ERR_CONFIG);
    return AW_OK;
}

// --in takes hex, --in-file raw bytes; at most one of the two.
int gather_input(const std::string& hex, const std::string& file,
                 std::vector<uint8_t>& data) {
    if (!hex.empty() && !file.empty())
        return fail("--in and --in-file are mutually exclusive", kUsage);
    if (!file.empty()) {
        std::string raw;
        if (!read_file(file, raw)) return fail("cannot read " + file, kUsage);
        data.assign(raw.begin(), raw.end());
        return AW_OK;
    }
    if (!parse_hex(hex, data)) return fail("bad hex input", kUsage);
    return AW_OK;
}

int emit(const std::vector<uint8_t>& data, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << to_hex(data) << "\n";
        return AW_OK;
    }
    std::string raw(data.begin(), data.end());
    if (!write_file(out_file, raw)) return fail("cannot write " + out_file, kUsage);
    return AW_OK;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ACE/WAGE workbench"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "configuration file")
        ->envname("AW_CONFIG");

    std::string cipher = "ace", direction = "enc";
    unsigned p = 1;
    std::string key_hex, nonce_hex, ad_hex, in_hex, in_file, out_file, tag_hex;

    auto* aead_cmd = app.add_subcommand("aead", "authenticated encryption");
    aead_cmd->add_option("--cipher", cipher)->check(CLI::IsMember({"ace", "wage"}));
    aead_cmd->add_option("--p", p)->check(CLI::IsMember({1, 2, 3, 4, 6, 8}));
    aead_cmd->add_option("--direction", direction)->check(CLI::IsMember({"enc", "dec"}));
    aead_cmd->add_option("--key", key_hex, "128 bit key (hex)")->required();
    aead_cmd->add_option("--nonce", nonce_hex, "128 bit nonce (hex)")->required();
    aead_cmd->add_option("--ad", ad_hex, "associated data (hex)");
    aead_cmd->add_option("--in", in_hex, "payload (hex)");
    aead_cmd->add_option("--in-file", in_file, "payload file (raw bytes)");
    aead_cmd->add_option("--out-file", out_file, "write output bytes here");

    auto* hash_cmd = app.add_subcommand("hash", "256 bit hash");
    hash_cmd->add_option("--p", p)->check(CLI::IsMember({1, 2, 4, 8}));
    hash_cmd->add_option("--in", in_hex, "message (hex)");
    hash_cmd->add_option("--in-file", in_file, "message file (raw bytes)");

    std::string kat_file;
    auto* kat_cmd = app.add_subcommand("kat", "known answer tests");
    kat_cmd->require_subcommand(1);
    auto* kat_gen = kat_cmd->add_subcommand("generate", "write the vector grid");
    kat_gen->add_option("file", kat_file)->required();
    auto* kat_ver = kat_cmd->add_subcommand("verify", "recompute and compare");
    kat_ver->add_option("file", kat_file)->required();

    std::string script_file;
    bool as_json = false;
    auto* sim_cmd = app.add_subcommand("simulate", "run a protocol script");
    sim_cmd->add_option("script", script_file)->required();
    sim_cmd->add_flag("--json", as_json, "structured trace");
    sim_cmd->add_option("--out-file", out_file, "write the trace here");

    std::string report_cipher;
    auto* report_cmd = app.add_subcommand("report", "area/throughput scaling");
    report_cmd->add_option("--cipher", report_cipher)
        ->check(CLI::IsMember({"ace", "wage"}));
    report_cmd->add_flag("--json", as_json, "structured report");

    CLI11_PARSE(app, argc, argv);

    ConfigHandle cfg;
    if (int rc = load_config(config_path, cfg); rc != AW_OK) return rc;

    if (aead_cmd->parsed()) {
        std::vector<uint8_t> key, nonce, ad, payload;
        if (!parse_hex(key_hex, key) || key.size() != 16)
            return fail("key must be 32 hex digits", kUsage);
        if (!parse_hex(nonce_hex, nonce) || nonce.size() != 16)
            return fail("nonce must be 32 hex digits", kUsage);
        if (!parse_hex(ad_hex, ad)) return fail("bad hex in --ad", kUsage);
        if (int rc = gather_input(in_hex, in_file, payload); rc != AW_OK) return rc;
        int c = cipher == "ace" ? AW_CIPHER_ACE : AW_CIPHER_WAGE;
        if (direction == "enc") {
            std::vector<uint8_t> out(payload.size() + 16);
            int rc = aw_aead(cfg.cfg, c, p, AW_ENCRYPT, key.data(), nonce.data(),
                             ad.data(), ad.size(), payload.data(), payload.size(),
                             nullptr, out.data(), out.data() + payload.size());
            if (rc != AW_OK) return fail("encryption rejected the request", rc);
            return emit(out, out_file);
        }
        // ciphertext followed by the 128 bit tag
        if (payload.size() < 16) return fail("input shorter than the tag", kUsage);
        size_t ct_len = payload.size() - 16;
        std::vector<uint8_t> pt(ct_len), tag(16);
        int rc = aw_aead(cfg.cfg, c, p, AW_DECRYPT, key.data(), nonce.data(),
                         ad.data(), ad.size(), payload.data(), ct_len,
                         payload.data() + ct_len, pt.data(), tag.data());
        if (rc == AW_ERR_VERIFY) return fail("tag verification failed", AW_ERR_VERIFY);
        if (rc != AW_OK) return fail("decryption rejected the request", rc);
        return emit(pt, out_file);
    }

    if (hash_cmd->parsed()) {
        std::vector<uint8_t> msg, digest(32);
        if (int rc = gather_input(in_hex, in_file, msg); rc != AW_OK) return rc;
        int rc = aw_hash(cfg.cfg, p, msg.data(), msg.size(), digest.data());
        if (rc != AW_OK) return fail("hash rejected the request", rc);
        std::cout << to_hex(digest) << "\n";
        return AW_OK;
    }

    if (kat_gen->parsed()) {
        char* text = nullptr;
        if (aw_kat_generate(cfg.cfg, &text) != AW_OK)
            return fail("vector generation failed", kUsage);
        std::string body = take_string(text);
        if (!write_file(kat_file, body)) return fail("cannot write " + kat_file, kUsage);
        return AW_OK;
    }
    if (kat_ver->parsed()) {
        std::string body;
        if (!read_file(kat_file, body)) return fail("cannot read " + kat_file, kUsage);
        char* msg = nullptr;
        int rc = aw_kat_verify(cfg.cfg, body.c_str(), &msg);
        std::string m = take_string(msg);
        if (rc != AW_OK) return fail(m, rc);
        std::cout << m << "\n";
        return AW_OK;
    }

    if (sim_cmd->parsed()) {
        std::string script;
        if (!read_file(script_file, script))
            return fail("cannot read " + script_file, kUsage);
        char* trace = nullptr;
        char* err = nullptr;
        int rc = aw_simulate(cfg.cfg, script.c_str(), as_json, &trace, &err);
        if (rc != AW_OK) return fail(take_string(err), rc);
        std::string body = take_string(trace);
        if (out_file.empty())
            std::cout << body;
        else if (!write_file(out_file, body))
            return fail("cannot write " + out_file, kUsage);
        return AW_OK;
    }

    if (report_cmd->parsed()) {
        std::vector<int> ciphers;
        if (report_cipher.empty() || report_cipher == "ace")
            ciphers.push_back(AW_CIPHER_ACE);
        if (report_cipher.empty() || report_cipher == "wage")
            ciphers.push_back(AW_CIPHER_WAGE);
        for (int c : ciphers) {
            char* out = nullptr;
            if (aw_report(cfg.cfg, c, as_json, &out) != AW_OK)
                return fail("report generation failed", kUsage);
            std::cout << take_string(out);
            if (!as_json) std::cout << "\n";
        }
        return AW_OK;
    }

    return kUsage;
}
