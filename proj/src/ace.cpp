#include "aw/ace.hpp"

namespace aw {

u64& AceState::reg(unsigned i) {
    switch (i) {
        case 0: return a;
        case 1: return b;
        case 2: return c;
        case 3: return d;
        default: return e;
    }
}

u64 AceState::reg(unsigned i) const {
    return const_cast<AceState*>(this)->reg(i);
}

static u32 simeck_f(u32 x, const CipherConfig& cfg) {
    const auto& r = cfg.simeck_rotations;
    return (rotl32(x, r[0]) & rotl32(x, r[1])) ^ rotl32(x, r[2]);
}

u64 simeck_round(u64 x, u8 rc, const CipherConfig& cfg) {
    u32 hi = static_cast<u32>(x >> 32);
    u32 lo = static_cast<u32>(x);
    u32 new_hi = simeck_f(hi, cfg) ^ lo ^ (cfg.simeck_const_template | (rc & 1));
    return (static_cast<u64>(new_hi) << 32) | hi;
}

u64 simeck_round_inverse(u64 y, u8 rc, const CipherConfig& cfg) {
    u32 new_hi = static_cast<u32>(y >> 32);
    u32 hi = static_cast<u32>(y); // old high half survives in the low word
    u32 lo = new_hi ^ simeck_f(hi, cfg) ^ (cfg.simeck_const_template | (rc & 1));
    return (static_cast<u64>(hi) << 32) | lo;
}

AceState ace_round(const AceState& s, const std::array<u8, 3>& rc,
                   const CipherConfig& cfg) {
    AceState t = s;
    t.a = simeck_round(s.a, rc[0], cfg);
    t.c = simeck_round(s.c, rc[1], cfg);
    t.e = simeck_round(s.e, rc[2], cfg);
    return t;
}

AceState ace_round_inverse(const AceState& s, const std::array<u8, 3>& rc,
                           const CipherConfig& cfg) {
    AceState t = s;
    t.a = simeck_round_inverse(s.a, rc[0], cfg);
    t.c = simeck_round_inverse(s.c, rc[1], cfg);
    t.e = simeck_round_inverse(s.e, rc[2], cfg);
    return t;
}

static u64 step_const_ext(u8 sc, const CipherConfig& cfg) {
    return cfg.ace_step_const_template | sc;
}

// Mixing and the register permutation, applied after the step's rounds.
// All mixing sources read the pre-mix values (simultaneous update).
static AceState step_tail(const AceState& t, const std::array<u8, 3>& sc,
                          const CipherConfig& cfg) {
    AceState m = t;
    for (const auto& mix : cfg.ace_step_mix)
        m.reg(mix.dest) ^= t.reg(mix.src) ^ step_const_ext(sc[mix.sc_index], cfg);
    AceState out;
    for (unsigned i = 0; i < 5; ++i) out.reg(i) = m.reg(cfg.ace_register_permutation[i]);
    return out;
}

static AceState step_tail_inverse(const AceState& s, const std::array<u8, 3>& sc,
                                  const CipherConfig& cfg) {
    AceState m;
    for (unsigned i = 0; i < 5; ++i) m.reg(cfg.ace_register_permutation[i]) = s.reg(i);

    std::array<bool, 5> is_dest{};
    for (const auto& mix : cfg.ace_step_mix) is_dest[mix.dest] = true;
    AceState t = m;
    std::array<bool, 5> known{};
    for (unsigned i = 0; i < 5; ++i) known[i] = !is_dest[i];
    std::array<bool, 5> resolved{};
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& mix : cfg.ace_step_mix) {
            if (resolved[mix.dest] || !known[mix.src]) continue;
            t.reg(mix.dest) =
                m.reg(mix.dest) ^ t.reg(mix.src) ^ step_const_ext(sc[mix.sc_index], cfg);
            resolved[mix.dest] = known[mix.dest] = true;
            progress = true;
        }
    }
    for (const auto& mix : cfg.ace_step_mix)
        if (!resolved[mix.dest])
            throw std::logic_error("ace_step_mix has a circular dependency");
    return t;
}

AceState ace_step(const AceState& s, const AceStepConstants& k, const CipherConfig& cfg) {
    AceState t = s;
    for (const auto& rc : k.rc) t = ace_round(t, rc, cfg);
    return step_tail(t, k.sc, cfg);
}

AceState ace_step_inverse(const AceState& s, const AceStepConstants& k,
                          const CipherConfig& cfg) {
    AceState t = step_tail_inverse(s, k.sc, cfg);
    for (auto it = k.rc.rbegin(); it != k.rc.rend(); ++it)
        t = ace_round_inverse(t, *it, cfg);
    return t;
}

AceState ace_permutation(const AceState& s, const CipherConfig& cfg, unsigned p) {
    if (p == 0 || cfg.ace_rounds_per_step % p != 0)
        throw std::invalid_argument("unsupported ACE parallel degree");
    AceState t = s;
    if (p == 1) {
        LfsrState lfsr(cfg.ace_const_lfsr);
        for (unsigned step = 0; step < cfg.ace_steps; ++step)
            t = ace_step(t, ace_step_constants(lfsr, cfg.ace_rounds_per_step), cfg);
        return t;
    }
    // p rounds per simulated cycle; the step tail fires on step-end cycles.
    AcePermutationRunner run(cfg, p);
    while (!run.done()) run.cycle(t, cfg);
    return t;
}

AcePermutationRunner::AcePermutationRunner(const CipherConfig& cfg, unsigned p)
    : sched_(cfg, p), cycles_total_(cfg.ace_steps * cfg.ace_rounds_per_step / p) {}

void AcePermutationRunner::cycle(AceState& s, const CipherConfig& cfg) {
    if (done()) return;
    auto k = sched_.next_cycle();
    for (const auto& rc : k.rc) s = ace_round(s, rc, cfg);
    if (k.step_end) s = step_tail(s, k.sc, cfg);
    ++cycles_done_;
}

AceState ace_inverse_permutation(const AceState& s, const CipherConfig& cfg) {
    LfsrState lfsr(cfg.ace_const_lfsr);
    std::vector<AceStepConstants> ks;
    ks.reserve(cfg.ace_steps);
    for (unsigned step = 0; step < cfg.ace_steps; ++step)
        ks.push_back(ace_step_constants(lfsr, cfg.ace_rounds_per_step));
    AceState t = s;
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) t = ace_step_inverse(t, *it, cfg);
    return t;
}

}  // namespace aw
