#pragma once

#include "aw/lfsr.hpp"

namespace aw {

/// Thirty-seven 7-bit stages; 259 bits of state.
struct WageState {
    std::array<u8, 37> s{};

    bool operator==(const WageState&) const = default;
};

/// Multiplication by the field generator omega = x modulo the configured
/// degree-7 polynomial.
u8 gf7_mul_omega(u8 x, const CipherConfig& cfg);
u8 gf7_mul_omega_inverse(u8 x, const CipherConfig& cfg);

/// XOR of the configured tap stages plus omega * S0.
u8 wage_feedback(const WageState& s, const CipherConfig& cfg);

u8 wgp_eval(u8 x, const CipherConfig& cfg);
u8 wgp_inverse(u8 x, const CipherConfig& cfg);
u8 sb_eval(u8 x, const CipherConfig& cfg);
/// SB via five applications of the core iteration; must agree with the table.
u8 sb_eval_iterated(u8 x, const CipherConfig& cfg);

/// One round: nonlinear contributions into the configured stages, round
/// constants at their configured spots, then the down-shift with the
/// feedback entering stage 36.
WageState wage_round(const WageState& s, const std::array<u8, 2>& rc,
                     const CipherConfig& cfg);
WageState wage_round_inverse(const WageState& s, const std::array<u8, 2>& rc,
                             const CipherConfig& cfg);

/// The 111-round permutation.  p > 1 composes p rounds per simulated cycle
/// (clamped on the final cycle) with constants from the parallel scheduler;
/// bit-identical for every supported p.
WageState wage_permutation(const WageState& s, const CipherConfig& cfg, unsigned p = 1);

WageState wage_inverse_permutation(const WageState& s, const CipherConfig& cfg);

/// Drives one permutation a simulated clock cycle at a time.  The first
/// cycle is the I/O slot and performs only p-1 rounds; the total spans
/// ceil((rounds+1)/p) cycles.  Holds no references; copyable.
class WagePermutationRunner {
public:
    WagePermutationRunner(const CipherConfig& cfg, unsigned p);
    void cycle(WageState& s, const CipherConfig& cfg);
    bool done() const { return cycles_done_ == cycles_total_; }
    unsigned cycles_done() const { return cycles_done_; }
    unsigned cycles_total() const { return cycles_total_; }

private:
    WageConstantScheduler sched_;
    unsigned p_;
    unsigned rounds_left_;
    unsigned cycles_total_;
    unsigned cycles_done_ = 0;
};

}  // namespace aw
