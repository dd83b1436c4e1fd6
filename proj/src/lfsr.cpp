#include "aw/lfsr.hpp"

#include <algorithm>

namespace aw {

u8 LfsrState::clock() {
    u32 acc = 0;
    for (unsigned t : spec.taps) acc ^= (state >> t) & 1u;
    state = (state >> 1) | (acc << (spec.width - 1));
    return static_cast<u8>(acc);
}

std::vector<u8> lfsr_step(LfsrState& l, unsigned count) {
    std::vector<u8> out;
    out.reserve(count);
    for (unsigned i = 0; i < count; ++i) out.push_back(l.clock());
    return out;
}

std::array<u8, 3> ace_round_constants(LfsrState& l) {
    return {l.clock(), l.clock(), l.clock()};
}

static std::array<u8, 3> split_step_constants(const std::array<u8, 10>& w) {
    std::array<u8, 3> sc{};
    for (int j = 0; j < 3; ++j) {
        u8 v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<u8>(w[j + i] << i);
        sc[j] = v;
    }
    return sc;
}

AceStepConstants ace_step_constants(LfsrState& l, unsigned rounds_per_step) {
    AceStepConstants out;
    std::array<u8, 10> w{};
    for (unsigned r = 0; r < rounds_per_step; ++r) {
        bool last = (r + 1 == rounds_per_step);
        if (last)
            for (unsigned i = 0; i < 7; ++i) w[i] = l.element(i);
        auto rc = ace_round_constants(l);
        if (last) {
            w[7] = rc[0];
            w[8] = rc[1];
            w[9] = rc[2];
        }
        out.rc.push_back(rc);
    }
    out.sc = split_step_constants(w);
    return out;
}

std::array<u8, 2> wage_round_constants(LfsrState& l) {
    // rc0 = window a_t..a_{t+6}, rc1 = a_{t+1}..a_{t+7}; two feedbacks per round.
    unsigned w = l.spec.width;
    u8 rc0 = static_cast<u8>(l.state & ((1u << w) - 1));
    u8 next = l.clock();
    u8 rc1 = static_cast<u8>((rc0 >> 1) | (next << (w - 1)));
    l.clock();
    return {rc0, rc1};
}

AceConstantScheduler::AceConstantScheduler(const CipherConfig& cfg, unsigned p)
    : lfsr_(cfg.ace_const_lfsr), p_(p), rounds_per_step_(cfg.ace_rounds_per_step) {
    if (p == 0 || rounds_per_step_ % p != 0)
        throw std::invalid_argument("unsupported ACE parallel degree");
}

AceCycleConstants AceConstantScheduler::next_cycle() {
    AceCycleConstants out;
    std::array<u8, 10> w{};
    for (unsigned k = 0; k < p_; ++k) {
        bool last = (round_in_step_ + k + 1 == rounds_per_step_);
        if (last)
            for (unsigned i = 0; i < 7; ++i) w[i] = lfsr_.element(i);
        auto rc = ace_round_constants(lfsr_);
        if (last) {
            w[7] = rc[0];
            w[8] = rc[1];
            w[9] = rc[2];
            out.step_end = true;
        }
        out.rc.push_back(rc);
    }
    out.bit_count = 3 * p_;
    if (out.step_end) {
        out.sc = split_step_constants(w);
        out.bit_count += 7; // the extra window bits completing the 10
    }
    round_in_step_ = (round_in_step_ + p_) % rounds_per_step_;
    return out;
}

WageConstantScheduler::WageConstantScheduler(const CipherConfig& cfg, unsigned p)
    : lfsr_(cfg.wage_const_lfsr), p_(p) {
    if (!supported_parallelism(Cipher::Wage, p))
        throw std::invalid_argument("unsupported WAGE parallel degree");
}

std::vector<std::array<u8, 2>> WageConstantScheduler::next_cycle(unsigned count) {
    std::vector<std::array<u8, 2>> out;
    out.reserve(count);
    for (unsigned i = 0; i < count; ++i) out.push_back(wage_round_constants(lfsr_));
    return out;
}

static const std::vector<unsigned> kAceDegrees{1, 2, 4, 8};
static const std::vector<unsigned> kWageDegrees{1, 2, 3, 4, 6, 8};

const std::vector<unsigned>& supported_degrees(Cipher cipher) {
    return cipher == Cipher::Ace ? kAceDegrees : kWageDegrees;
}

bool supported_parallelism(Cipher cipher, unsigned p) {
    const auto& d = supported_degrees(cipher);
    return std::find(d.begin(), d.end(), p) != d.end();
}

}  // namespace aw
