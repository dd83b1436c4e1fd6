#include "aw/wage.hpp"

#include <algorithm>

namespace aw {

u8 gf7_mul_omega(u8 x, const CipherConfig& cfg) {
    u32 y = static_cast<u32>(x) << 1;
    if (y & 0x80) y ^= cfg.wage_field_poly;
    return static_cast<u8>(y & 0x7f);
}

u8 gf7_mul_omega_inverse(u8 x, const CipherConfig& cfg) {
    return cfg.wage_omega_inverse[x & 0x7f];
}

u8 wage_feedback(const WageState& s, const CipherConfig& cfg) {
    u8 fb = 0;
    for (unsigned t : cfg.wage_feedback_taps) fb ^= s.s[t];
    if (cfg.wage_feedback_omega_s0) fb ^= gf7_mul_omega(s.s[0], cfg);
    return fb;
}

u8 wgp_eval(u8 x, const CipherConfig& cfg) { return cfg.wage_wgp_table[x & 0x7f]; }
u8 wgp_inverse(u8 x, const CipherConfig& cfg) { return cfg.wage_wgp_inverse[x & 0x7f]; }
u8 sb_eval(u8 x, const CipherConfig& cfg) { return cfg.wage_sb_table[x & 0x7f]; }

u8 sb_eval_iterated(u8 x, const CipherConfig& cfg) {
    u8 v = static_cast<u8>(x & 0x7f);
    for (int i = 0; i < 5; ++i) v = cfg.wage_sb_core_table[v];
    return v;
}

static u8 map_value(const WageUpdateEntry& e, const WageState& s,
                    const std::array<u8, 2>& rc, const CipherConfig& cfg) {
    u8 v = e.use_wgp ? wgp_eval(s.s[e.src], cfg) : sb_eval(s.s[e.src], cfg);
    if (e.rc_index >= 0) v ^= rc[e.rc_index];
    return v;
}

WageState wage_round(const WageState& s, const std::array<u8, 2>& rc,
                     const CipherConfig& cfg) {
    // All nonlinear sources and the feedback taps read the pre-round state.
    std::array<u8, 38> u{};
    for (int i = 0; i < 37; ++i) u[i] = s.s[i];
    u[37] = wage_feedback(s, cfg);
    for (const auto& e : cfg.wage_nonlinear_update_map)
        u[e.dest] ^= map_value(e, s, rc, cfg);
    WageState out;
    for (int i = 0; i < 37; ++i) out.s[i] = u[i + 1];
    return out;
}

WageState wage_round_inverse(const WageState& t, const std::array<u8, 2>& rc,
                             const CipherConfig& cfg) {
    // Un-shift, then strip the nonlinear contributions (their sources are
    // never destinations, so one pass suffices), then solve the feedback
    // equation for stage 0.
    std::array<u8, 38> u{};
    for (int i = 1; i <= 37; ++i) u[i] = t.s[i - 1];

    WageState s;
    for (int i = 1; i < 37; ++i) s.s[i] = u[i];
    for (const auto& e : cfg.wage_nonlinear_update_map)
        if (e.dest < 37) s.s[e.dest] = u[e.dest] ^ map_value(e, s, rc, cfg);

    u8 fb = u[37];
    for (const auto& e : cfg.wage_nonlinear_update_map)
        if (e.dest == 37) fb ^= map_value(e, s, rc, cfg);
    for (unsigned tap : cfg.wage_feedback_taps) fb ^= s.s[tap];
    s.s[0] = cfg.wage_feedback_omega_s0 ? gf7_mul_omega_inverse(fb, cfg)
                                        : throw std::logic_error(
                                              "round not invertible without the omega term");
    return s;
}

WageState wage_permutation(const WageState& s, const CipherConfig& cfg, unsigned p) {
    if (!supported_parallelism(Cipher::Wage, p))
        throw std::invalid_argument("unsupported WAGE parallel degree");
    WageState t = s;
    if (p == 1) {
        LfsrState lfsr(cfg.wage_const_lfsr);
        for (unsigned r = 0; r < cfg.wage_rounds; ++r)
            t = wage_round(t, wage_round_constants(lfsr), cfg);
        return t;
    }
    // The data-absorption slot counts as round zero of a 112-slot schedule,
    // so the first cycle performs only p-1 rounds.
    WagePermutationRunner run(cfg, p);
    while (!run.done()) run.cycle(t, cfg);
    return t;
}

WagePermutationRunner::WagePermutationRunner(const CipherConfig& cfg, unsigned p)
    : sched_(cfg, p), p_(p), rounds_left_(cfg.wage_rounds),
      cycles_total_((cfg.wage_rounds + 1 + p - 1) / p) {}

void WagePermutationRunner::cycle(WageState& s, const CipherConfig& cfg) {
    if (done()) return;
    unsigned n = cycles_done_ == 0 ? std::min(p_ - 1, rounds_left_)
                                   : std::min(p_, rounds_left_);
    for (const auto& rc : sched_.next_cycle(n)) s = wage_round(s, rc, cfg);
    rounds_left_ -= n;
    ++cycles_done_;
}

WageState wage_inverse_permutation(const WageState& s, const CipherConfig& cfg) {
    LfsrState lfsr(cfg.wage_const_lfsr);
    std::vector<std::array<u8, 2>> rcs;
    rcs.reserve(cfg.wage_rounds);
    for (unsigned r = 0; r < cfg.wage_rounds; ++r) rcs.push_back(wage_round_constants(lfsr));
    WageState t = s;
    for (auto it = rcs.rbegin(); it != rcs.rend(); ++it)
        t = wage_round_inverse(t, *it, cfg);
    return t;
}

}  // namespace aw
