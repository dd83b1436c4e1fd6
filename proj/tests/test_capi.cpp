#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

#include "aw.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    aw_string_free(s);
    return out;
}

struct Config {
    aw_config* cfg = nullptr;
    Config() { REQUIRE(aw_config_default(&cfg) == AW_OK); }
    ~Config() { aw_config_free(cfg); }
};

} // namespace

TEST_SUITE("capi") {

TEST_CASE("version string is present") {
    CHECK(aw_version() != nullptr);
    CHECK(std::strlen(aw_version()) > 0);
}

TEST_CASE("config loading and fingerprinting") {
    Config def;
    CHECK(aw_config_fingerprint(def.cfg) != 0);

    aw_config* cfg = nullptr;
    char* err = nullptr;
    CHECK(aw_config_load_text("wage_rounds = 110\n", &cfg, &err) == AW_OK);
    CHECK(aw_config_fingerprint(cfg) != aw_config_fingerprint(def.cfg));
    aw_config_free(cfg);

    cfg = nullptr;
    int rc = aw_config_load_text("wage_field_poly = 43\n", &cfg, &err);
    CHECK(rc == AW_ERR_CONFIG);
    CHECK(take(err).find("wage_field_poly") != std::string::npos);
    CHECK(cfg == nullptr);
}

TEST_CASE("aead round trip and forgery rejection") {
    Config c;
    uint8_t key[16], nonce[16], pt[24], ct[24], tag[16], back[24], tag2[16];
    for (int i = 0; i < 16; ++i) key[i] = static_cast<uint8_t>(i);
    for (int i = 0; i < 16; ++i) nonce[i] = static_cast<uint8_t>(0x10 + i);
    for (int i = 0; i < 24; ++i) pt[i] = static_cast<uint8_t>(0x40 + i);
    uint8_t ad[] = {0xaa, 0xbb, 0xcc};

    for (int cipher : {AW_CIPHER_ACE, AW_CIPHER_WAGE}) {
        REQUIRE(aw_aead(c.cfg, cipher, 1, AW_ENCRYPT, key, nonce, ad, sizeof ad, pt,
                        sizeof pt, nullptr, ct, tag) == AW_OK);
        REQUIRE(aw_aead(c.cfg, cipher, 1, AW_DECRYPT, key, nonce, ad, sizeof ad, ct,
                        sizeof ct, tag, back, tag2) == AW_OK);
        CHECK(std::memcmp(back, pt, sizeof pt) == 0);

        tag[0] ^= 1;
        std::memset(back, 0xee, sizeof back);
        CHECK(aw_aead(c.cfg, cipher, 1, AW_DECRYPT, key, nonce, ad, sizeof ad, ct,
                      sizeof ct, tag, back, tag2) == AW_ERR_VERIFY);
        tag[0] ^= 1;
        for (uint8_t b : back) CHECK(b == 0); // no plaintext released
    }
    CHECK(aw_aead(c.cfg, AW_CIPHER_ACE, 3, AW_ENCRYPT, key, nonce, nullptr, 0, pt,
                  sizeof pt, nullptr, ct, tag) != AW_OK);
}

TEST_CASE("hash produces 32 stable bytes") {
    Config c;
    uint8_t msg[5] = {1, 2, 3, 4, 5};
    uint8_t d1[32], d2[32];
    REQUIRE(aw_hash(c.cfg, 1, msg, sizeof msg, d1) == AW_OK);
    REQUIRE(aw_hash(c.cfg, 4, msg, sizeof msg, d2) == AW_OK);
    CHECK(std::memcmp(d1, d2, 32) == 0);
}

TEST_CASE("kat generate and verify through the C surface") {
    Config c;
    char* text = nullptr;
    REQUIRE(aw_kat_generate(c.cfg, &text) == AW_OK);
    std::string vectors = take(text);
    char* msg = nullptr;
    CHECK(aw_kat_verify(c.cfg, vectors.c_str(), &msg) == AW_OK);
    take(msg);

    auto pos = vectors.find("tag = ");
    vectors[pos + 6] = vectors[pos + 6] == 'f' ? '0' : 'f';
    msg = nullptr;
    CHECK(aw_kat_verify(c.cfg, vectors.c_str(), &msg) == AW_ERR_VERIFY);
    CHECK(take(msg).find("record") != std::string::npos);
}

TEST_CASE("simulator scripts run and errors carry line info") {
    Config c;
    const char* script =
        "cipher = ace\n"
        "p = 8\n"
        "reset\n"
        "idle 2\n";
    char* trace = nullptr;
    char* err = nullptr;
    REQUIRE(aw_simulate(c.cfg, script, 0, &trace, &err) == AW_OK);
    std::string t = take(trace);
    CHECK(t.find("o_ready") != std::string::npos);

    trace = nullptr;
    CHECK(aw_simulate(c.cfg, "cipher = ace\nnope\n", 0, &trace, &err) == AW_ERR_USAGE);
    CHECK(take(err).find("line 2") != std::string::npos);
}

TEST_CASE("reports emit for both ciphers") {
    Config c;
    for (int cipher : {AW_CIPHER_ACE, AW_CIPHER_WAGE}) {
        char* out = nullptr;
        REQUIRE(aw_report(c.cfg, cipher, 1, &out) == AW_OK);
        CHECK(take(out).find("\"rows\"") != std::string::npos);
    }
}

} // TEST_SUITE
