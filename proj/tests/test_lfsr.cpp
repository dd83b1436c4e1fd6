#include "doctest.h"

#include "aw/lfsr.hpp"

using namespace aw;

namespace {

// Independent oracle: expand the raw recurrence a_{n+w} = XOR of a_{n+t}
// over the taps, starting from the seed bits, with no shift-register
// bookkeeping at all.
std::vector<u8> sequence_oracle(const LfsrSpec& spec, size_t n) {
    std::vector<u8> a(spec.width + n);
    for (unsigned i = 0; i < spec.width; ++i)
        a[i] = static_cast<u8>((spec.initial_state >> i) & 1);
    for (size_t i = 0; i < n; ++i) {
        u8 v = 0;
        for (unsigned t : spec.taps) v ^= a[i + t];
        a[spec.width + i] = v;
    }
    return a;
}

u8 window7(const std::vector<u8>& a, size_t start) {
    u8 v = 0;
    for (int i = 0; i < 7; ++i) v |= static_cast<u8>(a[start + i] << i);
    return v;
}

} // namespace

TEST_SUITE("lfsr") {

TEST_CASE("clocking matches the recurrence oracle") {
    auto cfg = default_config();
    for (const LfsrSpec* spec : {&cfg.ace_const_lfsr, &cfg.wage_const_lfsr}) {
        auto a = sequence_oracle(*spec, 500);
        LfsrState l(*spec);
        auto emitted = lfsr_step(l, 500);
        for (size_t i = 0; i < 500; ++i)
            REQUIRE(emitted[i] == a[spec->width + i]);
    }
}

TEST_CASE("primitive degree-7 register has period 127") {
    auto cfg = default_config();
    for (const LfsrSpec* spec : {&cfg.ace_const_lfsr, &cfg.wage_const_lfsr}) {
        LfsrState l(*spec);
        u32 initial = l.state;
        unsigned period = 0;
        do {
            l.clock();
            ++period;
        } while (l.state != initial && period <= 128);
        CHECK(period == 127);
    }
}

TEST_CASE("stepping composes: 2+2 equals 1+1+1+1") {
    LfsrState a(default_config().ace_const_lfsr), b = a;
    lfsr_step(a, 2);
    lfsr_step(a, 2);
    for (int i = 0; i < 4; ++i) lfsr_step(b, 1);
    CHECK(a == b);
}

TEST_CASE("all-zero seed emits zeros forever") {
    auto spec = default_config().ace_const_lfsr;
    spec.initial_state = 0;
    LfsrState l(spec);
    for (u8 bit : lfsr_step(l, 300)) CHECK(bit == 0);
    CHECK(l.state == 0);
}

TEST_CASE("round constants advance three positions per round") {
    auto cfg = default_config();
    LfsrState l(cfg.ace_const_lfsr), serial = l;
    for (int round = 0; round < 128; ++round) ace_round_constants(l);
    lfsr_step(serial, 384);
    CHECK(l == serial);
}

TEST_CASE("step constants are windows of the serial stream") {
    auto cfg = default_config();
    auto a = sequence_oracle(cfg.ace_const_lfsr, 24 * 16 + 16);
    LfsrState l(cfg.ace_const_lfsr);
    for (unsigned step = 0; step < 16; ++step) {
        auto k = ace_step_constants(l, cfg.ace_rounds_per_step);
        REQUIRE(k.rc.size() == cfg.ace_rounds_per_step);
        // rc bits in consumption order are the raw stream
        for (unsigned r = 0; r < 8; ++r)
            for (unsigned j = 0; j < 3; ++j)
                REQUIRE(k.rc[r][j] == a[7 + 24 * step + 3 * r + j]);
        // the 10-element window ends where the step's stream ends, so the
        // three overlapping 8-bit constants start 3 elements earlier
        size_t w = 24 * step + 21;
        for (int j = 0; j < 3; ++j) REQUIRE(k.sc[j] == window7(a, w + j) +
                                            (a[w + j + 7] << 7));
    }
}

TEST_CASE("zero seed yields zero step constants") {
    auto spec = default_config().ace_const_lfsr;
    spec.initial_state = 0;
    LfsrState l(spec);
    auto k = ace_step_constants(l, 8);
    CHECK(k.sc == std::array<u8, 3>{0, 0, 0});
}

TEST_CASE("round-constant pairs are adjacent stream windows") {
    auto cfg = default_config();
    auto a = sequence_oracle(cfg.wage_const_lfsr, 2 * 111 + 8);
    LfsrState l(cfg.wage_const_lfsr);
    for (unsigned r = 0; r < 111; ++r) {
        auto rc = wage_round_constants(l);
        REQUIRE(rc[0] == window7(a, 2 * r));
        REQUIRE(rc[1] == window7(a, 2 * r + 1));
    }
    LfsrState serial(cfg.wage_const_lfsr);
    lfsr_step(serial, 222);
    CHECK(l == serial);
}

TEST_CASE("parallel generation flattens to the serial stream") {
    auto cfg = default_config();
    for (unsigned p : {1u, 2u, 4u, 8u}) {
        AceConstantScheduler par(cfg, p);
        AceConstantScheduler ser(cfg, 1);
        unsigned cycles = 128 / p;
        std::vector<std::array<u8, 3>> flat, flat1;
        std::vector<std::array<u8, 3>> sc_par, sc_ser;
        for (unsigned c = 0; c < cycles; ++c) {
            auto bundle = par.next_cycle();
            REQUIRE(bundle.rc.size() == p);
            REQUIRE(bundle.bit_count == 3 * p + (bundle.step_end ? 7 : 0));
            for (auto& rc : bundle.rc) flat.push_back(rc);
            if (bundle.step_end) sc_par.push_back(bundle.sc);
        }
        for (unsigned c = 0; c < 128; ++c) {
            auto bundle = ser.next_cycle();
            flat1.push_back(bundle.rc[0]);
            if (bundle.step_end) sc_ser.push_back(bundle.sc);
        }
        CHECK(flat == flat1);
        CHECK(sc_par == sc_ser);
        CHECK(sc_par.size() == 16);
        CHECK(par.lfsr() == ser.lfsr());
    }
    for (unsigned p : supported_degrees(Cipher::Wage)) {
        WageConstantScheduler par(cfg, p);
        WageConstantScheduler ser(cfg, 1);
        std::vector<std::array<u8, 2>> flat;
        unsigned left = cfg.wage_rounds;
        while (left) {
            unsigned n = std::min(p, left);
            for (auto& rc : par.next_cycle(n)) flat.push_back(rc);
            left -= n;
        }
        std::vector<std::array<u8, 2>> flat1;
        for (unsigned r = 0; r < cfg.wage_rounds; ++r)
            flat1.push_back(ser.next_cycle(1)[0]);
        CHECK(flat == flat1);
    }
}

TEST_CASE("p=4 cycle bit counts per step are 12 then 19") {
    auto cfg = default_config();
    AceConstantScheduler s(cfg, 4);
    for (int step = 0; step < 16; ++step) {
        CHECK(s.next_cycle().bit_count == 12);
        CHECK(s.next_cycle().bit_count == 19);
    }
}

} // TEST_SUITE
