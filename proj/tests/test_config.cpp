#include "doctest.h"

#include "aw/config.hpp"

using namespace aw;

TEST_SUITE("config") {

TEST_CASE("default config validates cleanly") {
    auto cfg = default_config();
    CHECK(validate_config(cfg).empty());
    CHECK(cfg.wage_rounds == 111);
    CHECK(cfg.simeck_rotations == std::array<unsigned, 3>{5, 0, 1});
}

TEST_CASE("serialize/parse round trip is the identity") {
    auto cfg = default_config();
    finalize_config(cfg);
    auto back = load_config_text(serialize_config(cfg));
    CHECK(back == cfg);
    CHECK(config_fingerprint(back) == config_fingerprint(cfg));
}

TEST_CASE("missing keys keep their defaults") {
    auto cfg = load_config_text("wage_rounds = 37\n");
    CHECK(cfg.wage_rounds == 37);
    CHECK(cfg.simeck_rotations == std::array<unsigned, 3>{5, 0, 1});
    CHECK(cfg.ace_steps == 16);
}

TEST_CASE("duplicate wgp entry is rejected as non-bijective") {
    auto cfg = default_config();
    cfg.wage_wgp_table[5] = cfg.wage_wgp_table[4];
    auto violations = validate_config(cfg);
    REQUIRE(!violations.empty());
    bool named = false;
    for (const auto& v : violations)
        if (v.find("wage_wgp_table") != std::string::npos) named = true;
    CHECK(named);
    CHECK_THROWS_AS(finalize_config(cfg), ConfigError);
}

TEST_CASE("degree-6 field polynomial is rejected by name") {
    auto cfg = default_config();
    cfg.wage_field_poly = 0x43; // x^6 + x + 1
    auto violations = validate_config(cfg);
    REQUIRE(violations.size() >= 1);
    bool named = false;
    for (const auto& v : violations)
        if (v.find("wage_field_poly") != std::string::npos) named = true;
    CHECK(named);
}

TEST_CASE("load regions must cover all 37 stages") {
    auto cfg = default_config();
    REQUIRE(!cfg.wage_load_regions.empty());
    cfg.wage_load_regions.back().length -= 1; // now 36 stages covered
    auto violations = validate_config(cfg);
    bool named = false;
    for (const auto& v : violations)
        if (v.find("wage_load_regions") != std::string::npos) named = true;
    CHECK(named);
}

TEST_CASE("parse failure names the offending line") {
    CHECK_THROWS_AS(load_config_text("wage_rounds = banana\n"), ConfigError);
}

TEST_CASE("fingerprint separates distinct table sets") {
    auto a = default_config();
    finalize_config(a);
    auto b = a;
    b.wage_rounds = 112;
    CHECK(config_fingerprint(a) != config_fingerprint(b));
}

} // TEST_SUITE
