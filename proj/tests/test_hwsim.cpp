#include "doctest.h"

#include "aw/hwsim.hpp"
#include "sim_oracle.hpp"

using namespace aw;
using aw::testutil::expected_aead_run;
using aw::testutil::expected_hash_run;

namespace {

Bytes random_bytes(SplitMix64& rng, size_t n) {
    Bytes out(n);
    for (auto& b : out) b = static_cast<u8>(rng.next());
    return out;
}

AeadRequest random_request(SplitMix64& rng, size_t ad_len, size_t pt_len) {
    AeadRequest req;
    req.key = random_bytes(rng, 16);
    req.nonce = random_bytes(rng, 16);
    req.associated_data = random_bytes(rng, ad_len);
    req.payload = random_bytes(rng, pt_len);
    return req;
}

} // namespace

TEST_SUITE("hwsim") {

TEST_CASE("cycle counts per permutation") {
    CHECK(cycles_per_permutation(Cipher::Ace, 1) == 128);
    CHECK(cycles_per_permutation(Cipher::Ace, 2) == 64);
    CHECK(cycles_per_permutation(Cipher::Ace, 8) == 16);
    CHECK(cycles_per_permutation(Cipher::Wage, 1) == 112);
    CHECK(cycles_per_permutation(Cipher::Wage, 3) == 38);
    CHECK(cycles_per_permutation(Cipher::Wage, 8) == 14);
    for (Cipher c : {Cipher::Ace, Cipher::Wage})
        for (unsigned p : supported_degrees(c))
            CHECK(cycles_per_permutation(c, p) ==
                  (c == Cipher::Ace ? 128 / p : (112 + p - 1) / p));
    CHECK_THROWS_AS(cycles_per_permutation(Cipher::Ace, 5), std::invalid_argument);
}

TEST_CASE("after reset: ready high, valid low, no cycles counted") {
    auto cfg = default_config();
    auto core = sim_reset(Cipher::Ace, 1, cfg);
    CHECK(core.cycle_total == 0);
    auto out = sim_step(core, SimInput{});
    CHECK(out.o_ready);
    CHECK(!out.o_valid);
    CHECK_THROWS_AS(sim_reset(Cipher::Ace, 3, cfg), std::invalid_argument);
}

TEST_CASE("reset mid-permutation returns to idle") {
    auto cfg = default_config();
    SplitMix64 rng(31);
    auto req = random_request(rng, 0, 8);
    auto script = build_aead_script(req, Cipher::Ace, cfg, 1);
    auto core = sim_reset(Cipher::Ace, 1, cfg);
    // run a prefix of the script, stopping inside a permutation
    for (int i = 0; i < 40; ++i) sim_step(core, script.items[4].in);
    CHECK(core.running());
    SimInput r;
    r.reset = true;
    sim_step(core, r);
    CHECK(!core.running());
    CHECK(core.phase == SimPhase::Load);
    CHECK(sim_step(core, SimInput{}).o_ready);
}

TEST_CASE("empty script leaves an idle-only trace") {
    auto cfg = default_config();
    auto core = sim_reset(Cipher::Wage, 1, cfg);
    Script s;
    s.cipher = Cipher::Wage;
    s.items.push_back({ScriptItem::Idle, 25, {}});
    auto t = sim_run(core, s);
    REQUIRE(t.records.size() == 25);
    for (const auto& r : t.records) {
        CHECK(r.out.o_ready);
        CHECK(!r.out.o_valid);
        CHECK(r.phase == SimPhase::Load);
    }
}

TEST_CASE("busy window is exactly one permutation long") {
    auto cfg = default_config();
    SplitMix64 rng(32);
    for (Cipher cipher : {Cipher::Ace, Cipher::Wage}) {
        for (unsigned p : supported_degrees(cipher)) {
            auto req = random_request(rng, 0, 16);
            auto script = build_aead_script(req, cipher, cfg, p);
            auto core = sim_reset(cipher, p, cfg);
            auto t = sim_run(core, script);
            // distance between the two payload accept cycles = permutation span
            std::vector<u64> accepts;
            for (const auto& r : t.records)
                if (r.out.accepted && r.in.i_dom_sep == cfg.domain_separators.payload)
                    accepts.push_back(r.cycle);
            REQUIRE(accepts.size() == 2);
            CHECK(accepts[1] - accepts[0] == cycles_per_permutation(cipher, p));
            // o_ready stays low across the whole window
            for (u64 c = accepts[0]; c < accepts[1]; ++c)
                REQUIRE(!t.records[c].out.o_ready);
            // pcount walks 0..cycles-1 and wraps
            for (u64 c = accepts[0]; c < accepts[1]; ++c)
                REQUIRE(t.records[c].pcount == c - accepts[0]);
        }
    }
}

TEST_CASE("o_data is forced to zero when o_valid is low") {
    auto cfg = default_config();
    SplitMix64 rng(33);
    auto req = random_request(rng, 8, 8);
    auto script = build_aead_script(req, Cipher::Ace, cfg, 4);
    auto core = sim_reset(Cipher::Ace, 4, cfg);
    for (const auto& r : sim_run(core, script).records)
        if (!r.out.o_valid) REQUIRE(r.out.o_data == 0);
}

TEST_CASE("trace outputs and final state equal the pure computation") {
    auto cfg = default_config();
    SplitMix64 rng(34);
    for (Cipher cipher : {Cipher::Ace, Cipher::Wage}) {
        for (unsigned p : supported_degrees(cipher)) {
            for (Direction dir : {Direction::Encrypt, Direction::Decrypt}) {
                auto req = random_request(rng, rng.next() % 20, rng.next() % 20);
                if (dir == Direction::Decrypt) {
                    auto enc = aead(req, cipher, cfg, p);
                    req.payload = enc.payload_out;
                    req.tag = enc.tag;
                    req.direction = Direction::Decrypt;
                }
                auto expected = expected_aead_run(req, cipher, cfg, p);
                auto script = build_aead_script(req, cipher, cfg, p);
                auto core = sim_reset(cipher, p, cfg);
                auto t = sim_run(core, script);
                REQUIRE(trace_outputs(t) == expected.words);
                REQUIRE(core.state == expected.final_state);
                REQUIRE(core.phase == SimPhase::Done);
            }
        }
    }
}

TEST_CASE("stalls never change the output stream") {
    auto cfg = default_config();
    SplitMix64 rng(35);
    auto req = random_request(rng, 11, 13);
    for (Cipher cipher : {Cipher::Ace, Cipher::Wage}) {
        auto baseline_script = build_aead_script(req, cipher, cfg, 2);
        auto core0 = sim_reset(cipher, 2, cfg);
        auto baseline = trace_outputs(sim_run(core0, baseline_script));
        auto state0 = core0.state;
        for (unsigned k : {1u, 7u, 100u}) {
            auto script = build_aead_script(req, cipher, cfg, 2, {k});
            auto core = sim_reset(cipher, 2, cfg);
            auto t = sim_run(core, script);
            REQUIRE(trace_outputs(t) == baseline);
            REQUIRE(core.state == state0);
        }
    }
}

TEST_CASE("hash mode matches the pure squeeze") {
    auto cfg = default_config();
    SplitMix64 rng(36);
    for (unsigned p : supported_degrees(Cipher::Ace)) {
        Bytes msg = random_bytes(rng, rng.next() % 30);
        auto expected = expected_hash_run(msg, cfg, p);
        auto script = build_hash_script(msg, cfg, p);
        auto core = sim_reset(Cipher::Ace, p, cfg);
        auto t = sim_run(core, script);
        REQUIRE(trace_outputs(t) == expected.words);
        REQUIRE(core.state == expected.final_state);
    }
}

TEST_CASE("script text round trips and errors carry line numbers") {
    auto cfg = default_config();
    SplitMix64 rng(37);
    auto req = random_request(rng, 8, 8);
    auto script = build_aead_script(req, Cipher::Wage, cfg, 4, {2});
    auto back = parse_script(serialize_script(script));
    CHECK(back.cipher == script.cipher);
    CHECK(back.p == script.p);
    REQUIRE(back.items.size() == script.items.size());
    auto core1 = sim_reset(Cipher::Wage, 4, cfg);
    auto core2 = sim_reset(Cipher::Wage, 4, cfg);
    CHECK(trace_outputs(sim_run(core1, script)) == trace_outputs(sim_run(core2, back)));

    try {
        parse_script("cipher = ace\np = 1\nbogus\n");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("text and json traces agree on the column data") {
    auto cfg = default_config();
    SplitMix64 rng(38);
    auto req = random_request(rng, 0, 8);
    auto script = build_aead_script(req, Cipher::Ace, cfg, 8);
    auto core = sim_reset(Cipher::Ace, 8, cfg);
    auto t = sim_run(core, script);
    auto text = trace_to_text(t);
    auto json = trace_to_json(t);
    CHECK(text.find("o_ready") != std::string::npos);
    CHECK(json.find("\"pcount\"") != std::string::npos);
    // one text line per cycle plus the header
    size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == t.records.size() + 1);
}

} // TEST_SUITE
