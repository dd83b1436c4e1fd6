#include "doctest.h"

#include "aw/kat.hpp"

using namespace aw;

TEST_SUITE("kat") {

TEST_CASE("generate then verify succeeds") {
    auto cfg = default_config();
    finalize_config(cfg);
    auto text = generate_kats(cfg);
    auto res = verify_kats(text, cfg);
    CHECK(res.ok);
    CHECK(res.message.find("verified") != std::string::npos);
}

TEST_CASE("vector grid covers both ciphers, every degree, and hashing") {
    auto cfg = default_config();
    finalize_config(cfg);
    auto records = kat_grid(cfg);
    unsigned ace = 0, wage = 0, hash = 0;
    for (const auto& r : records) {
        if (r.hash)
            ++hash;
        else if (r.cipher == Cipher::Ace)
            ++ace;
        else
            ++wage;
    }
    CHECK(ace == 4 * 9);
    CHECK(wage == 6 * 9);
    CHECK(hash == 4 * 3);
}

TEST_CASE("same logical inputs give identical vectors across degrees") {
    auto cfg = default_config();
    finalize_config(cfg);
    auto records = kat_grid(cfg);
    for (const auto& a : records)
        for (const auto& b : records) {
            if (a.index >= b.index || a.cipher != b.cipher || a.hash != b.hash) continue;
            if (a.hash) {
                if (a.msg == b.msg) CHECK(a.digest == b.digest);
            } else if (a.key == b.key && a.nonce == b.nonce && a.ad == b.ad &&
                       a.pt == b.pt) {
                CHECK(a.ct == b.ct);
                CHECK(a.tag == b.tag);
            }
        }
}

TEST_CASE("parse round trip preserves every record") {
    auto cfg = default_config();
    finalize_config(cfg);
    auto records = kat_grid(cfg);
    u64 fp = 0;
    auto back = parse_kats(serialize_kats(records, cfg), &fp);
    CHECK(fp == config_fingerprint(cfg));
    REQUIRE(back.size() == records.size());
    for (size_t i = 0; i < records.size(); ++i) REQUIRE(back[i] == records[i]);
}

TEST_CASE("one edited ciphertext nibble is caught and named") {
    auto cfg = default_config();
    finalize_config(cfg);
    auto text = generate_kats(cfg);
    auto pos = text.find("ct = ");
    while (text[pos + 5] == '\n') pos = text.find("ct = ", pos + 1); // non-empty ct
    text[pos + 5] = text[pos + 5] == '0' ? '1' : '0';
    auto res = verify_kats(text, cfg);
    CHECK(!res.ok);
    CHECK(res.field == "ct");
    CHECK(res.message.find("record") != std::string::npos);
}

TEST_CASE("vectors are bound to the table set") {
    auto cfg = default_config();
    finalize_config(cfg);
    auto text = generate_kats(cfg);
    auto other = cfg;
    other.wage_rounds = 112;
    finalize_config(other);
    auto res = verify_kats(text, other);
    CHECK(!res.ok);
    CHECK(res.field == "config");
}

TEST_CASE("malformed lines are reported with their number") {
    try {
        parse_kats("count = 0\ncipher = ace\nbroken line\n");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

} // TEST_SUITE
