#pragma once

#include "aw/lfsr.hpp"

namespace aw {

/// Five 64-bit registers; 320 bits of state.
struct AceState {
    u64 a = 0, b = 0, c = 0, d = 0, e = 0;

    u64& reg(unsigned i);
    u64 reg(unsigned i) const;

    bool operator==(const AceState&) const = default;
};

/// One unkeyed Simeck round on a 64-bit word: the high half runs through
/// rotate/AND/XOR, the low half becomes the old high half.  Bijective for a
/// fixed round-constant bit.
u64 simeck_round(u64 x, u8 rc, const CipherConfig& cfg);
u64 simeck_round_inverse(u64 y, u8 rc, const CipherConfig& cfg);

/// One ACE round: Simeck rounds on A, C, E with their own constant bits;
/// B and D pass through.
AceState ace_round(const AceState& s, const std::array<u8, 3>& rc,
                   const CipherConfig& cfg);
AceState ace_round_inverse(const AceState& s, const std::array<u8, 3>& rc,
                           const CipherConfig& cfg);

/// One ACE step: the configured rounds, the step-constant mixing into B, D,
/// E, and the register permutation.
AceState ace_step(const AceState& s, const AceStepConstants& k,
                  const CipherConfig& cfg);
AceState ace_step_inverse(const AceState& s, const AceStepConstants& k,
                          const CipherConfig& cfg);

/// The full permutation (16 steps of 8 rounds by default).  p > 1 evaluates
/// p rounds per simulated cycle through the parallel constant scheduler; the
/// result is bit-identical for every supported p.
AceState ace_permutation(const AceState& s, const CipherConfig& cfg, unsigned p = 1);

AceState ace_inverse_permutation(const AceState& s, const CipherConfig& cfg);

/// Drives one permutation a simulated clock cycle at a time (p rounds per
/// cycle, step tail on step-end cycles).  Holds no references; copyable.
class AcePermutationRunner {
public:
    AcePermutationRunner(const CipherConfig& cfg, unsigned p);
    void cycle(AceState& s, const CipherConfig& cfg);
    bool done() const { return cycles_done_ == cycles_total_; }
    unsigned cycles_done() const { return cycles_done_; }
    unsigned cycles_total() const { return cycles_total_; }

private:
    AceConstantScheduler sched_;
    unsigned cycles_total_;
    unsigned cycles_done_ = 0;
};

}  // namespace aw
