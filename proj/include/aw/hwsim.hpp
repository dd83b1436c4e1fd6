#pragma once

#include <optional>

#include "aw/sponge.hpp"

namespace aw {

/// Environment-driven signals for one clock cycle.  `padding_len_bits` is
/// the byte-boundary sideband accompanying i_padding: the number of data
/// bits in the final block (the environment owns padding, the core only
/// needs the boundary during decryption's rate replacement).
struct SimInput {
    bool reset = false;
    u8 i_mode = 0;       // 2 bits; bit 0 enc/dec (hash: absorb/squeeze), bit 1 hash
    u8 i_dom_sep = 0;    // 2 bits
    bool i_padding = false;
    bool i_valid = false;
    u64 i_data = 0;
    unsigned padding_len_bits = 64;
};

struct SimOutput {
    bool o_ready = false;
    bool o_valid = false;
    u64 o_data = 0;
    bool accepted = false; // i_data consumed this cycle (not a port signal)
    const char* note = nullptr; // protocol diagnostic, if any
};

enum class SimPhase { Load, Init, Body, Final, TagOut, HashBody, Done };

const char* phase_name(SimPhase ph);

/// Architectural state of the top-level module plus its FSM bookkeeping.
struct SimCore {
    Cipher cipher = Cipher::Ace;
    unsigned p = 1;
    CipherConfig cfg;
    RateView rate;
    SpongeState state;
    SimPhase phase = SimPhase::Load;
    unsigned pcount = 0;
    u64 cycle_total = 0;

    unsigned load_count = 0;
    std::array<u64, 4> load_words{};
    unsigned load_busy = 0;   // extra shift-in cycles (WAGE)
    unsigned sched_index = 0; // position in the init/final schedule
    unsigned tag_index = 0;
    unsigned squeeze_count = 0;
    Bytes tag;

    std::optional<AcePermutationRunner> ace_run;
    std::optional<WagePermutationRunner> wage_run;

    bool running() const;
};

SimCore sim_reset(Cipher cipher, unsigned p, const CipherConfig& cfg);

/// One clock cycle.  Outputs respond in the same cycle as the inputs
/// (valid-bit protocol); o_ready is low on every cycle the core is loading,
/// permuting, accepting, or emitting.
SimOutput sim_step(SimCore& core, const SimInput& in);

/// ACE: 128/p; WAGE: ceil(112/p), the data I/O slot included.
unsigned cycles_per_permutation(Cipher cipher, unsigned p, const CipherConfig& cfg);
unsigned cycles_per_permutation(Cipher cipher, unsigned p);

struct TraceRecord {
    u64 cycle = 0;
    SimInput in;
    SimOutput out;
    unsigned pcount = 0;
    SimPhase phase = SimPhase::Load;
    std::string note; // protocol diagnostics, empty when clean
};

struct ProtocolTrace {
    std::vector<TraceRecord> records;
};

/// o_data words in emission order (cycles with o_valid).
std::vector<u64> trace_outputs(const ProtocolTrace& t);

struct ScriptItem {
    enum Kind { Reset, Idle, Input, Drain } kind = Idle;
    unsigned count = 1; // Idle repetition
    SimInput in;
};

struct Script {
    Cipher cipher = Cipher::Ace;
    unsigned p = 1;
    std::vector<ScriptItem> items;
};

/// Runs a script.  Input items are held on the port until the cycle the
/// core consumes them; Drain steps with idle inputs until the core reaches
/// the done phase (bounded).
ProtocolTrace sim_run(SimCore& core, const Script& script);

/// Line format: `cipher = ...`, `p = ...`, then one of
///   reset | idle N | drain |
///   input mode=M ds=D data=HEX16 [pad=LENBITS]
/// per line; '#' comments.  Throws std::invalid_argument naming the line.
Script parse_script(const std::string& text);
std::string serialize_script(const Script& script);

std::string trace_to_text(const ProtocolTrace& t);
std::string trace_to_json(const ProtocolTrace& t);

/// Builds the full protocol script for a logical AEAD request.  `stalls[i]`
/// idle cycles are inserted before the i-th input word (wrapping over the
/// pattern; empty means back-to-back).
Script build_aead_script(const AeadRequest& req, Cipher cipher, const CipherConfig& cfg,
                         unsigned p, const std::vector<unsigned>& stalls = {});
Script build_hash_script(const Bytes& message, const CipherConfig& cfg, unsigned p,
                         const std::vector<unsigned>& stalls = {});

}  // namespace aw
