#pragma once

#include "aw/config.hpp"

namespace aw {

/// Running LFSR.  The register window holds sequence elements
/// a_t .. a_{t+width-1} (bit i of `state` = a_{t+i}); each clock computes
/// a_{t+width} from the taps and slides the window by one.
struct LfsrState {
    LfsrSpec spec;
    u32 state = 0;

    explicit LfsrState(const LfsrSpec& s) : spec(s), state(s.initial_state) {}

    u8 element(unsigned i) const { return static_cast<u8>((state >> i) & 1); }

    /// One clock: returns the newly computed sequence element.
    u8 clock();

    bool operator==(const LfsrState&) const = default;
};

/// Advances `count` positions; returns the emitted elements in order.
std::vector<u8> lfsr_step(LfsrState& l, unsigned count);

/// Constants for one 8-round ACE step: per-round bit triples plus the three
/// 8-bit step constants derived from the final round's 10-element window.
struct AceStepConstants {
    std::vector<std::array<u8, 3>> rc; // ace_rounds_per_step triples
    std::array<u8, 3> sc{};            // overlapping windows 0..7 / 1..8 / 2..9
};

/// Emits (rc0, rc1, rc2) for one round; advances the generator by 3.
std::array<u8, 3> ace_round_constants(LfsrState& l);

/// Emits everything one step consumes.  `rounds_per_step` comes from the
/// config (8 by default).
AceStepConstants ace_step_constants(LfsrState& l, unsigned rounds_per_step);

/// Emits the round-constant pair for one WAGE round; advances by 2.
/// Index 0 is rc0 (elements a_t..a_{t+6}, LSB-first), index 1 is rc1
/// (a_{t+1}..a_{t+7}).
std::array<u8, 2> wage_round_constants(LfsrState& l);

/// One simulated clock cycle of p-way-unrolled ACE constant generation:
/// p round triples, plus the step constants on the cycle that closes a step.
struct AceCycleConstants {
    std::vector<std::array<u8, 3>> rc; // p triples
    bool step_end = false;
    std::array<u8, 3> sc{};
    unsigned bit_count = 0; // constant bits produced this cycle (3p, or 3p+7)
};

/// Schedules ACE constants for parallel degree p (p must divide
/// rounds_per_step).  Flattened output is identical to the serial stream.
class AceConstantScheduler {
public:
    AceConstantScheduler(const CipherConfig& cfg, unsigned p);
    AceCycleConstants next_cycle();
    const LfsrState& lfsr() const { return lfsr_; }

private:
    LfsrState lfsr_;
    unsigned p_;
    unsigned rounds_per_step_;
    unsigned round_in_step_ = 0;
};

/// Schedules WAGE constant pairs for parallel degree p; `count` pairs per
/// cycle (the caller clamps the tail of the 111-round schedule).
class WageConstantScheduler {
public:
    WageConstantScheduler(const CipherConfig& cfg, unsigned p);
    std::vector<std::array<u8, 2>> next_cycle(unsigned count);
    const LfsrState& lfsr() const { return lfsr_; }

private:
    LfsrState lfsr_;
    unsigned p_;
};

/// Supported parallel degrees.
bool supported_parallelism(Cipher cipher, unsigned p);
const std::vector<unsigned>& supported_degrees(Cipher cipher);

}  // namespace aw
