#pragma once

#include <iosfwd>
#include <optional>

#include "aw/common.hpp"

namespace aw {

enum class Cipher { Ace, Wage };

const char* cipher_name(Cipher c);

/// Feedback shift register description.  The register holds `width`
/// consecutive sequence elements; each clock computes the next element as
/// the XOR of the elements at the tap offsets.
struct LfsrSpec {
    unsigned width = 7;
    std::vector<unsigned> taps;   // offsets into the current window, all < width
    u32 initial_state = 0;        // bit i = sequence element a_i
    unsigned parallel_degree = 1; // feedbacks computed per hardware cycle

    bool operator==(const LfsrSpec&) const = default;
};

/// One nonlinear contribution in the WAGE round: `dest` (pre-shift stage
/// index, 37 = the feedback accumulator) receives WGP or SB of stage `src`,
/// optionally together with one of the two round constants.
struct WageUpdateEntry {
    unsigned dest = 0;
    bool use_wgp = false; // false = SB
    unsigned src = 0;
    int rc_index = -1;    // -1 none, 0 = rc0, 1 = rc1

    bool operator==(const WageUpdateEntry&) const = default;
};

/// A contiguous run of LFSR stages served by one data port during loading
/// and tag extraction.  The port sits at `entry_stage`; data shifts down
/// toward `entry_stage - length + 1`.
struct LoadRegion {
    unsigned port = 0;
    unsigned entry_stage = 0;
    unsigned length = 0;

    bool operator==(const LoadRegion&) const = default;
};

/// One group of rate bits: the low `bits` bits of `stage`, placed
/// most-significant-first in listed order.
struct RateStage {
    unsigned stage = 0;
    unsigned bits = 7;

    bool operator==(const RateStage&) const = default;
};

/// Step-mixing wire: register `dest` absorbs register `src` plus step
/// constant `sc_index`, all read simultaneously after the 8 rounds.
struct AceMixEntry {
    unsigned dest = 0;
    unsigned src = 0;
    unsigned sc_index = 0;

    bool operator==(const AceMixEntry&) const = default;
};

/// A (register, bit) position inside the 320-bit ACE state or a
/// (stage, bit) position inside the 259-bit WAGE state.
struct BitPos {
    unsigned word = 0;
    unsigned bit = 0;

    bool operator==(const BitPos&) const = default;
};

struct ScheduleAction {
    enum Kind { Permute, AbsorbKey0, AbsorbKey1 } kind = Permute;

    bool operator==(const ScheduleAction&) const = default;
};

struct HashIvByte {
    unsigned reg = 0;
    unsigned byte = 0; // 7 = most significant
    u8 value = 0;

    bool operator==(const HashIvByte&) const = default;
};

struct DomainSeparators {
    u8 init = 0;     // "00"
    u8 ad = 1;       // "01"
    u8 payload = 2;  // "10", shared by encryption and decryption
    u8 final = 3;    // "11"

    bool operator==(const DomainSeparators&) const = default;
};

/// Every constant the two ciphers are parameterized by.  The compiled-in
/// defaults are placeholders generated from documented seeds (see
/// docs/config_format.md); the real submission tables drop in via a config
/// file without code changes.
struct CipherConfig {
    // --- ACE ---
    std::array<unsigned, 3> simeck_rotations{5, 0, 1};
    u32 simeck_const_template = 0xfffffffe; // rc bit ORed into the low bit
    u64 ace_step_const_template = 0xffffffffffffff00ull; // sc ORed into low byte
    std::array<unsigned, 5> ace_register_permutation{3, 2, 1, 4, 0}; // new[i] = old[p[i]]
    unsigned ace_rounds_per_step = 8;
    unsigned ace_steps = 16;
    LfsrSpec ace_const_lfsr;
    std::vector<AceMixEntry> ace_step_mix; // default E<-A(sc0), B<-C(sc1), D<-E(sc2)
    std::vector<BitPos> ace_domain_sep_positions;
    std::vector<ScheduleAction> init_schedule;  // after loading, before AD
    std::vector<ScheduleAction> final_schedule; // before tag extraction
    std::vector<BitPos> rate_bytes_ace; // (register, byte) pairs, 8 entries
    std::vector<HashIvByte> hash_iv_bytes;

    // --- WAGE ---
    u32 wage_field_poly = 0x83; // bit i = coefficient of x^i; default x^7+x+1
    std::array<u8, 128> wage_wgp_table{};
    std::array<u8, 128> wage_sb_table{};
    std::array<u8, 128> wage_sb_core_table{}; // SB = core applied 5 times
    std::vector<WageUpdateEntry> wage_nonlinear_update_map;
    std::vector<unsigned> wage_feedback_taps; // stage indices XORed into feedback
    bool wage_feedback_omega_s0 = true;       // include omega*S0 term
    LfsrSpec wage_const_lfsr;
    unsigned wage_rounds = 111;
    std::vector<RateStage> wage_rate_stages;
    std::vector<LoadRegion> wage_load_regions;
    std::vector<BitPos> wage_domain_sep_positions;

    // --- shared mode parameters ---
    DomainSeparators domain_separators;

    // Derived at validation time.
    std::array<u8, 128> wage_wgp_inverse{};
    std::array<u8, 128> wage_omega_inverse{};

    bool operator==(const CipherConfig& o) const;
};

/// The documented default configuration (placeholder tables, x^7+x+1 field).
CipherConfig default_config();

/// Structural checks for every documented invariant.  Empty result means the
/// config is usable; entries name the failing field.
std::vector<std::string> validate_config(const CipherConfig& cfg);

/// Recomputes the derived inverse tables.  Throws ConfigError if the config
/// does not validate.
void finalize_config(CipherConfig& cfg);

/// Parses the key/value config format (see docs/config_format.md).  Missing
/// keys keep their defaults.  Throws ConfigError on parse failure or
/// invariant violation.
CipherConfig load_config(std::istream& in);
CipherConfig load_config_text(const std::string& text);
CipherConfig load_config_file(const std::string& path);

/// Emits the full config in the same format load_config reads.
std::string serialize_config(const CipherConfig& cfg);

/// FNV-1a hash of the serialized config; embedded in KAT files so vectors
/// are bound to the table set that produced them.
u64 config_fingerprint(const CipherConfig& cfg);

}  // namespace aw
