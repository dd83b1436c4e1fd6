#include "aw/config.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace aw {

const char* cipher_name(Cipher c) { return c == Cipher::Ace ? "ace" : "wage"; }

bool CipherConfig::operator==(const CipherConfig& o) const {
    return serialize_config(*this) == serialize_config(o);
}

// ---------------------------------------------------------------------------
// Defaults
// ---------------------------------------------------------------------------

// Placeholder-table seeds.  The shipped WGP/SB tables are NOT the submission
// tables; they are reproducible bijections so the whole pipeline is testable
// without redistribution concerns.  Replace via a config file for
// conformance against external vectors.
static constexpr u64 kWgpSeed = 0x00575047u;    // "WGP"
static constexpr u64 kSbCoreSeed = 0x00534243u; // "SBC"

static std::array<u8, 128> random_bijection(u64 seed) {
    std::array<u8, 128> t{};
    std::iota(t.begin(), t.end(), u8{0});
    SplitMix64 rng(seed);
    for (int i = 127; i > 0; --i) {
        int j = static_cast<int>(rng.next() % static_cast<u64>(i + 1));
        std::swap(t[i], t[j]);
    }
    return t;
}

static std::array<u8, 128> compose5(const std::array<u8, 128>& core) {
    std::array<u8, 128> t{};
    for (int x = 0; x < 128; ++x) {
        u8 v = static_cast<u8>(x);
        for (int i = 0; i < 5; ++i) v = core[v];
        t[x] = v;
    }
    return t;
}

CipherConfig default_config() {
    CipherConfig c;

    c.ace_const_lfsr = LfsrSpec{7, {1, 0}, 0x55, 3};
    c.ace_step_mix = {{4, 0, 0}, {1, 2, 1}, {3, 4, 2}};
    c.ace_domain_sep_positions = {{4, 1}, {4, 0}};
    c.init_schedule = {{ScheduleAction::Permute},
                       {ScheduleAction::AbsorbKey0},
                       {ScheduleAction::Permute},
                       {ScheduleAction::AbsorbKey1},
                       {ScheduleAction::Permute}};
    c.final_schedule = {{ScheduleAction::AbsorbKey0},
                        {ScheduleAction::Permute},
                        {ScheduleAction::AbsorbKey1},
                        {ScheduleAction::Permute}};
    c.rate_bytes_ace = {{0, 7}, {0, 6}, {0, 5}, {0, 4}, {2, 7}, {2, 6}, {2, 5}, {2, 4}};
    c.hash_iv_bytes = {{1, 7, 0x80}, {1, 6, 0x40}, {1, 5, 0x40}};

    c.wage_wgp_table = random_bijection(kWgpSeed);
    c.wage_sb_core_table = random_bijection(kSbCoreSeed);
    c.wage_sb_table = compose5(c.wage_sb_core_table);
    c.wage_nonlinear_update_map = {
        {5, false, 8, -1},  {11, false, 15, -1}, {19, true, 18, 0},
        {24, false, 27, -1}, {30, false, 34, -1}, {37, true, 36, 1}};
    c.wage_feedback_taps = {31, 30, 26, 24, 19, 13, 12, 8, 6};
    c.wage_const_lfsr = LfsrSpec{7, {1, 0}, 0x3f, 2};
    c.wage_rate_stages = {{36, 1}, {35, 7}, {34, 7}, {28, 7}, {27, 7},
                          {18, 7}, {16, 7}, {15, 7}, {9, 7},  {8, 7}};
    c.wage_load_regions = {{0, 8, 9}, {3, 16, 8}, {4, 18, 2}, {5, 27, 9}, {9, 36, 9}};
    c.wage_domain_sep_positions = {{0, 1}, {0, 0}};

    finalize_config(c);
    return c;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

static bool is_bijection(const std::array<u8, 128>& t) {
    std::array<bool, 128> seen{};
    for (u8 v : t) {
        if (v >= 128 || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

static void check_lfsr(const LfsrSpec& s, const char* name,
                       std::vector<std::string>& out) {
    if (s.width < 1 || s.width > 31)
        out.push_back(std::string(name) + ": width out of range");
    if (s.taps.empty())
        out.push_back(std::string(name) + ": taps empty");
    for (unsigned t : s.taps)
        if (t >= s.width) out.push_back(std::string(name) + ": tap >= width");
    if (s.parallel_degree < 1)
        out.push_back(std::string(name) + ": parallel_degree < 1");
}

std::vector<std::string> validate_config(const CipherConfig& cfg) {
    std::vector<std::string> v;

    for (unsigned r : cfg.simeck_rotations)
        if (r >= 32) v.push_back("simeck_rotations: rotation >= 32");

    {
        std::array<bool, 5> seen{};
        bool ok = true;
        for (unsigned p : cfg.ace_register_permutation) {
            if (p >= 5 || seen[p]) { ok = false; break; }
            seen[p] = true;
        }
        if (!ok) v.push_back("ace_register_permutation: not a permutation of 5 labels");
    }
    if (cfg.ace_rounds_per_step == 0) v.push_back("ace_rounds_per_step: zero");
    if (cfg.ace_steps == 0) v.push_back("ace_steps: zero");
    check_lfsr(cfg.ace_const_lfsr, "ace_const_lfsr", v);
    check_lfsr(cfg.wage_const_lfsr, "wage_const_lfsr", v);
    for (const auto& m : cfg.ace_step_mix)
        if (m.dest >= 5 || m.src >= 5 || m.sc_index >= 3)
            v.push_back("ace_step_mix: index out of range");
    for (const auto& p : cfg.ace_domain_sep_positions)
        if (p.word >= 5 || p.bit >= 64)
            v.push_back("ace_domain_sep_positions: out of range");
    if (cfg.ace_domain_sep_positions.size() != 2)
        v.push_back("ace_domain_sep_positions: expected 2 positions");
    if (cfg.init_schedule.empty()) v.push_back("init_schedule: empty");
    if (cfg.final_schedule.empty()) v.push_back("final_schedule: empty");

    if (cfg.rate_bytes_ace.size() != 8)
        v.push_back("rate_bytes_ace: expected exactly 8 entries");
    for (const auto& p : cfg.rate_bytes_ace)
        if (p.word >= 5 || p.bit >= 8) v.push_back("rate_bytes_ace: out of range");
    for (const auto& h : cfg.hash_iv_bytes)
        if (h.reg >= 5 || h.byte >= 8) v.push_back("hash_iv_bytes: out of range");

    if ((cfg.wage_field_poly >> 7) != 1)
        v.push_back("wage_field_poly: degree is not exactly 7");
    if ((cfg.wage_field_poly & 1) == 0)
        v.push_back("wage_field_poly: zero constant term");

    if (!is_bijection(cfg.wage_wgp_table))
        v.push_back("wage_wgp_table: not a bijection on [0,128)");
    if (!is_bijection(cfg.wage_sb_table))
        v.push_back("wage_sb_table: not a bijection on [0,128)");
    if (!is_bijection(cfg.wage_sb_core_table))
        v.push_back("wage_sb_core_table: not a bijection on [0,128)");
    else if (compose5(cfg.wage_sb_core_table) != cfg.wage_sb_table)
        v.push_back("wage_sb_table: does not equal 5 iterations of wage_sb_core_table");

    {
        std::array<bool, 38> dest_seen{};
        for (const auto& e : cfg.wage_nonlinear_update_map) {
            if (e.dest > 37 || e.src >= 37 || e.src == 0 || e.rc_index < -1 ||
                e.rc_index > 1) {
                v.push_back("wage_nonlinear_update_map: index out of range");
                continue;
            }
            if (dest_seen[e.dest])
                v.push_back("wage_nonlinear_update_map: duplicate destination");
            dest_seen[e.dest] = true;
        }
        // Sources must not be stage destinations, otherwise the round is not
        // invertible in one pass.
        for (const auto& e : cfg.wage_nonlinear_update_map)
            if (e.src < 37 && dest_seen[e.src])
                v.push_back("wage_nonlinear_update_map: source is also a destination");
        int rc0 = 0, rc1 = 0;
        for (const auto& e : cfg.wage_nonlinear_update_map) {
            if (e.rc_index == 0) ++rc0;
            if (e.rc_index == 1) ++rc1;
        }
        if (rc0 != 1 || rc1 != 1)
            v.push_back("wage_nonlinear_update_map: each round constant must be used exactly once");
        for (unsigned t : cfg.wage_feedback_taps)
            if (t >= 37) v.push_back("wage_feedback_taps: stage out of range");
    }
    if (cfg.wage_rounds == 0) v.push_back("wage_rounds: zero");

    {
        unsigned total = 0;
        std::array<bool, 37> seen{};
        for (const auto& r : cfg.wage_rate_stages) {
            if (r.stage >= 37 || r.bits < 1 || r.bits > 7) {
                v.push_back("wage_rate_stages: out of range");
                continue;
            }
            if (seen[r.stage]) v.push_back("wage_rate_stages: duplicate stage");
            seen[r.stage] = true;
            total += r.bits;
        }
        if (total != 64)
            v.push_back("wage_rate_stages: rate totals " + std::to_string(total) +
                        " bits, expected 64");
    }

    {
        std::array<int, 37> cover{};
        unsigned longest = 0;
        bool range_ok = true;
        for (const auto& r : cfg.wage_load_regions) {
            if (r.entry_stage >= 37 || r.length == 0 || r.length > r.entry_stage + 1) {
                v.push_back("wage_load_regions: region out of range");
                range_ok = false;
                continue;
            }
            longest = std::max(longest, r.length);
            for (unsigned s = r.entry_stage + 1 - r.length; s <= r.entry_stage; ++s)
                ++cover[s];
        }
        if (range_ok) {
            for (int s = 0; s < 37; ++s)
                if (cover[s] != 1) {
                    v.push_back("wage_load_regions: regions do not cover all 37 stages exactly once");
                    break;
                }
            if (longest != 9)
                v.push_back("wage_load_regions: longest region length is " +
                            std::to_string(longest) + ", expected 9");
        }
    }
    for (const auto& p : cfg.wage_domain_sep_positions)
        if (p.word >= 37 || p.bit >= 7)
            v.push_back("wage_domain_sep_positions: out of range");
    if (cfg.wage_domain_sep_positions.size() != 2)
        v.push_back("wage_domain_sep_positions: expected 2 positions");

    const DomainSeparators& d = cfg.domain_separators;
    if (d.init > 3 || d.ad > 3 || d.payload > 3 || d.final > 3)
        v.push_back("domain_separators: values must be 2-bit");

    return v;
}

static u8 gf7_mul_x(u8 x, u32 poly) {
    u32 y = static_cast<u32>(x) << 1;
    if (y & 0x80) y ^= poly;
    return static_cast<u8>(y & 0x7f);
}

void finalize_config(CipherConfig& cfg) {
    auto violations = validate_config(cfg);
    if (!violations.empty()) throw ConfigError("invalid config: " + violations.front());

    for (int x = 0; x < 128; ++x) cfg.wage_wgp_inverse[cfg.wage_wgp_table[x]] = static_cast<u8>(x);
    for (int x = 0; x < 128; ++x)
        cfg.wage_omega_inverse[gf7_mul_x(static_cast<u8>(x), cfg.wage_field_poly)] =
            static_cast<u8>(x);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

static std::string lfsr_str(const LfsrSpec& s) {
    std::ostringstream o;
    o << "width=" << s.width << " taps=";
    for (size_t i = 0; i < s.taps.size(); ++i) o << (i ? "," : "") << s.taps[i];
    o << " seed=0x" << std::hex << s.initial_state << std::dec
      << " par=" << s.parallel_degree;
    return o.str();
}

static std::string schedule_str(const std::vector<ScheduleAction>& s) {
    std::ostringstream o;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) o << ' ';
        switch (s[i].kind) {
            case ScheduleAction::Permute: o << 'P'; break;
            case ScheduleAction::AbsorbKey0: o << "K0"; break;
            case ScheduleAction::AbsorbKey1: o << "K1"; break;
        }
    }
    return o.str();
}

static std::string table_str(const std::array<u8, 128>& t) {
    std::ostringstream o;
    o << std::hex;
    for (int i = 0; i < 128; ++i) {
        if (i) o << ' ';
        o.width(2);
        o.fill('0');
        o << static_cast<int>(t[i]);
    }
    return o.str();
}

std::string serialize_config(const CipherConfig& c) {
    std::ostringstream o;
    o << "simeck_rotations = " << c.simeck_rotations[0] << ' '
      << c.simeck_rotations[1] << ' ' << c.simeck_rotations[2] << '\n';
    o << "simeck_const_template = 0x" << std::hex << c.simeck_const_template
      << std::dec << '\n';
    o << "ace_step_const_template = 0x" << std::hex << c.ace_step_const_template
      << std::dec << '\n';
    o << "ace_register_permutation =";
    for (unsigned p : c.ace_register_permutation) o << ' ' << p;
    o << '\n';
    o << "ace_rounds_per_step = " << c.ace_rounds_per_step << '\n';
    o << "ace_steps = " << c.ace_steps << '\n';
    o << "ace_const_lfsr = " << lfsr_str(c.ace_const_lfsr) << '\n';
    o << "ace_step_mix =";
    for (const auto& m : c.ace_step_mix)
        o << ' ' << m.dest << '<' << m.src << ':' << m.sc_index;
    o << '\n';
    o << "ace_domain_sep_positions =";
    for (const auto& p : c.ace_domain_sep_positions) o << ' ' << p.word << ':' << p.bit;
    o << '\n';
    o << "ace_init_schedule = " << schedule_str(c.init_schedule) << '\n';
    o << "ace_final_schedule = " << schedule_str(c.final_schedule) << '\n';
    o << "rate_bytes_ace =";
    for (const auto& p : c.rate_bytes_ace) o << ' ' << p.word << ':' << p.bit;
    o << '\n';
    o << "hash_iv_bytes =";
    o << std::hex;
    for (const auto& h : c.hash_iv_bytes)
        o << ' ' << std::dec << h.reg << ':' << h.byte << ":0x" << std::hex
          << static_cast<int>(h.value);
    o << std::dec << '\n';
    o << "wage_field_poly = 0x" << std::hex << c.wage_field_poly << std::dec << '\n';
    o << "wage_wgp_table = " << table_str(c.wage_wgp_table) << '\n';
    o << "wage_sb_core_table = " << table_str(c.wage_sb_core_table) << '\n';
    o << "wage_sb_table = " << table_str(c.wage_sb_table) << '\n';
    o << "wage_nonlinear_update_map =";
    for (const auto& e : c.wage_nonlinear_update_map) {
        o << ' ' << e.dest << '<' << (e.use_wgp ? "wgp" : "sb") << ':' << e.src;
        if (e.rc_index >= 0) o << ":rc" << e.rc_index;
    }
    o << '\n';
    o << "wage_feedback_taps =";
    for (unsigned t : c.wage_feedback_taps) o << ' ' << t;
    o << '\n';
    o << "wage_feedback_omega = " << (c.wage_feedback_omega_s0 ? 1 : 0) << '\n';
    o << "wage_const_lfsr = " << lfsr_str(c.wage_const_lfsr) << '\n';
    o << "wage_rounds = " << c.wage_rounds << '\n';
    o << "wage_rate_stages =";
    for (const auto& r : c.wage_rate_stages) o << ' ' << r.stage << ':' << r.bits;
    o << '\n';
    o << "wage_load_regions =";
    for (const auto& r : c.wage_load_regions)
        o << ' ' << r.port << ':' << r.entry_stage << ':' << r.length;
    o << '\n';
    o << "wage_domain_sep_positions =";
    for (const auto& p : c.wage_domain_sep_positions) o << ' ' << p.word << ':' << p.bit;
    o << '\n';
    o << "domain_separators = init=" << int(c.domain_separators.init)
      << " ad=" << int(c.domain_separators.ad)
      << " payload=" << int(c.domain_separators.payload)
      << " final=" << int(c.domain_separators.final) << '\n';
    return o.str();
}

u64 config_fingerprint(const CipherConfig& cfg) {
    std::string s = serialize_config(cfg);
    u64 h = 0xcbf29ce484222325ull;
    for (char ch : s) {
        h ^= static_cast<u8>(ch);
        h *= 0x100000001b3ull;
    }
    return h;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

unsigned long parse_num(const std::string& tok, const std::string& key) {
    try {
        size_t pos = 0;
        unsigned long v = std::stoul(tok, &pos, 0);
        if (pos != tok.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + ": cannot parse number '" + tok + "'");
    }
}

std::vector<unsigned long> parse_sep(const std::string& tok, char sep,
                                     const std::string& key) {
    std::vector<unsigned long> out;
    std::string cur;
    std::istringstream in(tok);
    while (std::getline(in, cur, sep)) out.push_back(parse_num(cur, key));
    return out;
}

LfsrSpec parse_lfsr(const std::string& val, const std::string& key) {
    LfsrSpec s;
    s.taps.clear();
    for (const auto& tok : split_ws(val)) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ConfigError(key + ": expected k=v, got '" + tok + "'");
        std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
        if (k == "width") s.width = static_cast<unsigned>(parse_num(v, key));
        else if (k == "seed") s.initial_state = static_cast<u32>(parse_num(v, key));
        else if (k == "par") s.parallel_degree = static_cast<unsigned>(parse_num(v, key));
        else if (k == "taps") {
            for (auto t : parse_sep(v, ',', key)) s.taps.push_back(static_cast<unsigned>(t));
        } else throw ConfigError(key + ": unknown subkey '" + k + "'");
    }
    return s;
}

std::vector<ScheduleAction> parse_schedule(const std::string& val, const std::string& key) {
    std::vector<ScheduleAction> s;
    for (const auto& tok : split_ws(val)) {
        if (tok == "P") s.push_back({ScheduleAction::Permute});
        else if (tok == "K0") s.push_back({ScheduleAction::AbsorbKey0});
        else if (tok == "K1") s.push_back({ScheduleAction::AbsorbKey1});
        else throw ConfigError(key + ": unknown action '" + tok + "'");
    }
    return s;
}

std::array<u8, 128> parse_table(const std::string& val, const std::string& key) {
    auto toks = split_ws(val);
    if (toks.size() != 128)
        throw ConfigError(key + ": expected 128 hex bytes, got " +
                          std::to_string(toks.size()));
    std::array<u8, 128> t{};
    for (size_t i = 0; i < 128; ++i) {
        unsigned long v;
        try {
            size_t pos = 0;
            v = std::stoul(toks[i], &pos, 16);
            if (pos != toks[i].size() || v > 0xff) throw std::invalid_argument("range");
        } catch (const std::exception&) {
            throw ConfigError(key + ": bad hex byte '" + toks[i] + "'");
        }
        t[i] = static_cast<u8>(v);
    }
    return t;
}

std::vector<BitPos> parse_positions(const std::string& val, const std::string& key) {
    std::vector<BitPos> out;
    for (const auto& tok : split_ws(val)) {
        auto nums = parse_sep(tok, ':', key);
        if (nums.size() != 2) throw ConfigError(key + ": expected word:bit pairs");
        out.push_back({static_cast<unsigned>(nums[0]), static_cast<unsigned>(nums[1])});
    }
    return out;
}

}  // namespace

CipherConfig load_config(std::istream& in) {
    CipherConfig c = default_config();
    bool sb_table_given = false, sb_core_given = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));

        if (key == "simeck_rotations") {
            auto t = split_ws(val);
            if (t.size() != 3) throw ConfigError(key + ": expected 3 values");
            for (int i = 0; i < 3; ++i)
                c.simeck_rotations[i] = static_cast<unsigned>(parse_num(t[i], key));
        } else if (key == "simeck_const_template") {
            c.simeck_const_template = static_cast<u32>(parse_num(val, key));
        } else if (key == "ace_step_const_template") {
            try {
                size_t pos = 0;
                c.ace_step_const_template = std::stoull(val, &pos, 0);
                if (pos != val.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ConfigError(key + ": cannot parse number");
            }
        } else if (key == "ace_register_permutation") {
            auto t = split_ws(val);
            if (t.size() != 5) throw ConfigError(key + ": expected 5 values");
            for (int i = 0; i < 5; ++i)
                c.ace_register_permutation[i] = static_cast<unsigned>(parse_num(t[i], key));
        } else if (key == "ace_rounds_per_step") {
            c.ace_rounds_per_step = static_cast<unsigned>(parse_num(val, key));
        } else if (key == "ace_steps") {
            c.ace_steps = static_cast<unsigned>(parse_num(val, key));
        } else if (key == "ace_const_lfsr") {
            c.ace_const_lfsr = parse_lfsr(val, key);
        } else if (key == "ace_step_mix") {
            c.ace_step_mix.clear();
            for (const auto& tok : split_ws(val)) {
                auto lt = tok.find('<');
                auto co = tok.find(':', lt);
                if (lt == std::string::npos || co == std::string::npos)
                    throw ConfigError(key + ": expected dest<src:sc");
                c.ace_step_mix.push_back(
                    {static_cast<unsigned>(parse_num(tok.substr(0, lt), key)),
                     static_cast<unsigned>(parse_num(tok.substr(lt + 1, co - lt - 1), key)),
                     static_cast<unsigned>(parse_num(tok.substr(co + 1), key))});
            }
        } else if (key == "ace_domain_sep_positions") {
            c.ace_domain_sep_positions = parse_positions(val, key);
        } else if (key == "ace_init_schedule") {
            c.init_schedule = parse_schedule(val, key);
        } else if (key == "ace_final_schedule") {
            c.final_schedule = parse_schedule(val, key);
        } else if (key == "rate_bytes_ace") {
            c.rate_bytes_ace = parse_positions(val, key);
        } else if (key == "hash_iv_bytes") {
            c.hash_iv_bytes.clear();
            for (const auto& tok : split_ws(val)) {
                auto nums = parse_sep(tok, ':', key);
                if (nums.size() != 3) throw ConfigError(key + ": expected reg:byte:value");
                c.hash_iv_bytes.push_back({static_cast<unsigned>(nums[0]),
                                           static_cast<unsigned>(nums[1]),
                                           static_cast<u8>(nums[2])});
            }
        } else if (key == "wage_field_poly") {
            c.wage_field_poly = static_cast<u32>(parse_num(val, key));
        } else if (key == "wage_wgp_table") {
            c.wage_wgp_table = parse_table(val, key);
        } else if (key == "wage_sb_table") {
            c.wage_sb_table = parse_table(val, key);
            sb_table_given = true;
        } else if (key == "wage_sb_core_table") {
            c.wage_sb_core_table = parse_table(val, key);
            sb_core_given = true;
        } else if (key == "wage_nonlinear_update_map") {
            c.wage_nonlinear_update_map.clear();
            for (const auto& tok : split_ws(val)) {
                auto lt = tok.find('<');
                if (lt == std::string::npos) throw ConfigError(key + ": expected dest<func:src[:rcN]");
                WageUpdateEntry e;
                e.dest = static_cast<unsigned>(parse_num(tok.substr(0, lt), key));
                std::string rest = tok.substr(lt + 1);
                std::istringstream rs(rest);
                std::string func, src, rc;
                std::getline(rs, func, ':');
                std::getline(rs, src, ':');
                std::getline(rs, rc, ':');
                if (func == "wgp") e.use_wgp = true;
                else if (func == "sb") e.use_wgp = false;
                else throw ConfigError(key + ": unknown function '" + func + "'");
                e.src = static_cast<unsigned>(parse_num(src, key));
                if (!rc.empty()) {
                    if (rc == "rc0") e.rc_index = 0;
                    else if (rc == "rc1") e.rc_index = 1;
                    else throw ConfigError(key + ": unknown constant tag '" + rc + "'");
                }
                c.wage_nonlinear_update_map.push_back(e);
            }
        } else if (key == "wage_feedback_taps") {
            c.wage_feedback_taps.clear();
            for (const auto& tok : split_ws(val))
                c.wage_feedback_taps.push_back(static_cast<unsigned>(parse_num(tok, key)));
        } else if (key == "wage_feedback_omega") {
            c.wage_feedback_omega_s0 = parse_num(val, key) != 0;
        } else if (key == "wage_const_lfsr") {
            c.wage_const_lfsr = parse_lfsr(val, key);
        } else if (key == "wage_rounds") {
            c.wage_rounds = static_cast<unsigned>(parse_num(val, key));
        } else if (key == "wage_rate_stages") {
            c.wage_rate_stages.clear();
            for (const auto& tok : split_ws(val)) {
                auto nums = parse_sep(tok, ':', key);
                if (nums.size() != 2) throw ConfigError(key + ": expected stage:bits");
                c.wage_rate_stages.push_back({static_cast<unsigned>(nums[0]),
                                              static_cast<unsigned>(nums[1])});
            }
        } else if (key == "wage_load_regions") {
            c.wage_load_regions.clear();
            for (const auto& tok : split_ws(val)) {
                auto nums = parse_sep(tok, ':', key);
                if (nums.size() != 3) throw ConfigError(key + ": expected port:entry:length");
                c.wage_load_regions.push_back({static_cast<unsigned>(nums[0]),
                                               static_cast<unsigned>(nums[1]),
                                               static_cast<unsigned>(nums[2])});
            }
        } else if (key == "wage_domain_sep_positions") {
            c.wage_domain_sep_positions = parse_positions(val, key);
        } else if (key == "domain_separators") {
            for (const auto& tok : split_ws(val)) {
                auto eq2 = tok.find('=');
                if (eq2 == std::string::npos) throw ConfigError(key + ": expected phase=value");
                std::string k = tok.substr(0, eq2);
                u8 v = static_cast<u8>(parse_num(tok.substr(eq2 + 1), key));
                if (k == "init") c.domain_separators.init = v;
                else if (k == "ad") c.domain_separators.ad = v;
                else if (k == "payload") c.domain_separators.payload = v;
                else if (k == "final") c.domain_separators.final = v;
                else throw ConfigError(key + ": unknown phase '" + k + "'");
            }
        } else {
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }

    // A core table without an explicit SB table regenerates it.
    if (sb_core_given && !sb_table_given)
        c.wage_sb_table = compose5(c.wage_sb_core_table);

    finalize_config(c);
    return c;
}

CipherConfig load_config_text(const std::string& text) {
    std::istringstream in(text);
    return load_config(in);
}

CipherConfig load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file: " + path);
    return load_config(f);
}

}  // namespace aw
