#include "aw/hwsim.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace aw {

const char* phase_name(SimPhase ph) {
    switch (ph) {
        case SimPhase::Load: return "load";
        case SimPhase::Init: return "init";
        case SimPhase::Body: return "body";
        case SimPhase::Final: return "final";
        case SimPhase::TagOut: return "tag";
        case SimPhase::HashBody: return "hash";
        case SimPhase::Done: return "done";
    }
    return "?";
}

bool SimCore::running() const { return ace_run.has_value() || wage_run.has_value(); }

SimCore sim_reset(Cipher cipher, unsigned p, const CipherConfig& cfg) {
    if (!supported_parallelism(cipher, p))
        throw std::invalid_argument("unsupported parallel degree");
    SimCore c;
    c.cipher = cipher;
    c.p = p;
    c.cfg = cfg;
    c.rate = make_rate_view(cipher, cfg);
    c.state.cipher = cipher;
    return c;
}

unsigned cycles_per_permutation(Cipher cipher, unsigned p, const CipherConfig& cfg) {
    if (!supported_parallelism(cipher, p))
        throw std::invalid_argument("unsupported parallel degree");
    if (cipher == Cipher::Ace) return cfg.ace_steps * cfg.ace_rounds_per_step / p;
    return (cfg.wage_rounds + 1 + p - 1) / p;
}

unsigned cycles_per_permutation(Cipher cipher, unsigned p) {
    static const CipherConfig def = default_config();
    return cycles_per_permutation(cipher, p, def);
}

// Accept cycle = first permutation cycle: the domain separator lands on the
// state, then the first p rounds run.
static void start_perm(SimCore& c, u8 dsval) {
    c.state = apply_domain_separator(c.state, dsval, c.cfg);
    c.pcount = 0;
    if (c.cipher == Cipher::Ace) {
        c.ace_run.emplace(c.cfg, c.p);
        c.ace_run->cycle(c.state.ace, c.cfg);
        if (c.ace_run->done()) c.ace_run.reset();
    } else {
        c.wage_run.emplace(c.cfg, c.p);
        c.wage_run->cycle(c.state.wage, c.cfg);
        if (c.wage_run->done()) c.wage_run.reset();
    }
}

SimOutput sim_step(SimCore& c, const SimInput& in) {
    SimOutput out;
    ++c.cycle_total;

    if (in.reset) {
        u64 total = c.cycle_total;
        c = sim_reset(c.cipher, c.p, c.cfg);
        c.cycle_total = total;
        return out;
    }

    if (c.running()) {
        if (c.cipher == Cipher::Ace) {
            c.pcount = c.ace_run->cycles_done();
            c.ace_run->cycle(c.state.ace, c.cfg);
            if (c.ace_run->done()) c.ace_run.reset();
        } else {
            c.pcount = c.wage_run->cycles_done();
            c.wage_run->cycle(c.state.wage, c.cfg);
            if (c.wage_run->done()) c.wage_run.reset();
        }
        return out;
    }

    if (c.load_busy > 0) {
        --c.load_busy;
        c.pcount = 0;
        return out;
    }

    c.pcount = 0;
    const auto& ds = c.cfg.domain_separators;
    for (;;) {
        switch (c.phase) {
            case SimPhase::Load: {
                if (c.cipher == Cipher::Ace && in.i_valid && (in.i_mode & 2)) {
                    c.state.ace = load_hash_iv(c.cfg);
                    c.phase = SimPhase::HashBody;
                    continue;
                }
                if (!in.i_valid) {
                    out.o_ready = true;
                    return out;
                }
                out.accepted = true;
                c.load_words[c.load_count++] = in.i_data;
                if (c.load_count == 4) {
                    Bytes key(16), nonce(16);
                    store_be64(c.load_words[0], key.data());
                    store_be64(c.load_words[1], key.data() + 8);
                    store_be64(c.load_words[2], nonce.data());
                    store_be64(c.load_words[3], nonce.data() + 8);
                    c.state = load_ae(key, nonce, c.cipher, c.cfg);
                    if (c.cipher == Cipher::Wage) {
                        unsigned longest = 0;
                        for (const auto& r : c.cfg.wage_load_regions)
                            longest = std::max(longest, r.length);
                        c.load_busy = longest > 4 ? longest - 4 : 0;
                    }
                    c.phase = SimPhase::Init;
                    c.sched_index = 0;
                }
                return out;
            }
            case SimPhase::Init:
            case SimPhase::Final: {
                const auto& sched = c.phase == SimPhase::Init ? c.cfg.init_schedule
                                                              : c.cfg.final_schedule;
                if (c.sched_index >= sched.size()) {
                    if (c.phase == SimPhase::Init) {
                        c.phase = SimPhase::Body;
                        continue;
                    }
                    c.tag = tag_extract(c.state, c.cfg);
                    c.phase = SimPhase::TagOut;
                    c.tag_index = 0;
                    continue;
                }
                if (sched[c.sched_index].kind == ScheduleAction::Permute) {
                    ++c.sched_index;
                    start_perm(c, in.i_dom_sep);
                    return out;
                }
                if (!in.i_valid) {
                    out.o_ready = true;
                    return out;
                }
                // Key reabsorption: the environment resends the key words.
                out.accepted = true;
                c.state = inject_rate(c.state, c.rate, in.i_data, InjectMode::Absorb);
                ++c.sched_index;
                if (c.sched_index < sched.size() &&
                    sched[c.sched_index].kind == ScheduleAction::Permute) {
                    ++c.sched_index;
                    start_perm(c, in.i_dom_sep);
                }
                return out;
            }
            case SimPhase::Body: {
                if (!in.i_valid) {
                    out.o_ready = true;
                    return out;
                }
                if (in.i_dom_sep == ds.final) {
                    c.phase = SimPhase::Final;
                    c.sched_index = 0;
                    continue;
                }
                out.accepted = true;
                if (in.i_dom_sep == ds.payload) {
                    out.o_valid = true;
                    out.o_data = extract_rate(c.state, c.rate) ^ in.i_data;
                    if (in.i_mode & 1)
                        c.state = in.i_padding
                                      ? replace_rate_padded(c.state, c.rate, in.i_data,
                                                            in.padding_len_bits)
                                      : inject_rate(c.state, c.rate, in.i_data,
                                                    InjectMode::Replace);
                    else
                        c.state = inject_rate(c.state, c.rate, in.i_data, InjectMode::Absorb);
                } else {
                    if (in.i_dom_sep != ds.ad) out.note = "unexpected i_dom_sep, absorbing";
                    c.state = inject_rate(c.state, c.rate, in.i_data, InjectMode::Absorb);
                }
                start_perm(c, in.i_dom_sep);
                return out;
            }
            case SimPhase::TagOut: {
                out.o_valid = true;
                out.o_data = load_be64(c.tag.data() + 8 * c.tag_index);
                if (++c.tag_index == 2) c.phase = SimPhase::Done;
                return out;
            }
            case SimPhase::HashBody: {
                if (!in.i_valid) {
                    out.o_ready = true;
                    return out;
                }
                out.accepted = true;
                if (in.i_mode & 1) { // squeeze read
                    out.o_valid = true;
                    out.o_data = extract_rate(c.state, c.rate);
                    if (++c.squeeze_count == 4) {
                        c.phase = SimPhase::Done;
                        return out;
                    }
                    start_perm(c, in.i_dom_sep);
                } else {
                    c.state = inject_rate(c.state, c.rate, in.i_data, InjectMode::Absorb);
                    start_perm(c, in.i_dom_sep);
                }
                return out;
            }
            case SimPhase::Done:
                return out;
        }
    }
}

std::vector<u64> trace_outputs(const ProtocolTrace& t) {
    std::vector<u64> out;
    for (const auto& r : t.records)
        if (r.out.o_valid) out.push_back(r.out.o_data);
    return out;
}

ProtocolTrace sim_run(SimCore& core, const Script& script) {
    constexpr unsigned kGuard = 1u << 20;
    ProtocolTrace t;
    u64 cycle = 0;
    auto step_rec = [&](const SimInput& in) {
        SimOutput out = sim_step(core, in);
        t.records.push_back({cycle++, in, out, core.pcount, core.phase,
                             out.note ? out.note : ""});
        return out;
    };
    for (const auto& item : script.items) {
        switch (item.kind) {
            case ScriptItem::Reset: {
                SimInput r;
                r.reset = true;
                step_rec(r);
                break;
            }
            case ScriptItem::Idle:
                for (unsigned i = 0; i < item.count; ++i) step_rec(item.in);
                break;
            case ScriptItem::Input: {
                unsigned guard = 0;
                while (!step_rec(item.in).accepted)
                    if (++guard > kGuard)
                        throw std::runtime_error("script input never accepted");
                break;
            }
            case ScriptItem::Drain: {
                unsigned guard = 0;
                SimInput idle;
                while (core.phase != SimPhase::Done) {
                    if (step_rec(idle).o_ready) break;
                    if (++guard > kGuard) throw std::runtime_error("drain never settled");
                }
                break;
            }
        }
    }
    return t;
}

static void push_input(Script& s, const std::vector<unsigned>& stalls, size_t& idx,
                       SimInput in) {
    in.i_valid = true;
    if (!stalls.empty()) {
        unsigned k = stalls[idx++ % stalls.size()];
        if (k) {
            ScriptItem idle;
            idle.kind = ScriptItem::Idle;
            idle.count = k;
            idle.in = in;
            idle.in.i_valid = false;
            s.items.push_back(idle);
        }
    }
    ScriptItem it;
    it.kind = ScriptItem::Input;
    it.in = in;
    s.items.push_back(it);
}

Script build_aead_script(const AeadRequest& req, Cipher cipher, const CipherConfig& cfg,
                         unsigned p, const std::vector<unsigned>& stalls) {
    Script s;
    s.cipher = cipher;
    s.p = p;
    s.items.push_back({ScriptItem::Reset, 1, {}});

    const auto& ds = cfg.domain_separators;
    u8 mode = req.direction == Direction::Decrypt ? 1 : 0;
    size_t idx = 0;
    auto word = [&](u8 dsv, u64 data) {
        SimInput in;
        in.i_mode = mode;
        in.i_dom_sep = dsv;
        in.i_data = data;
        return in;
    };
    u64 k0 = load_be64(req.key.data());
    u64 k1 = load_be64(req.key.data() + 8);
    push_input(s, stalls, idx, word(ds.init, k0));
    push_input(s, stalls, idx, word(ds.init, k1));
    push_input(s, stalls, idx, word(ds.init, load_be64(req.nonce.data())));
    push_input(s, stalls, idx, word(ds.init, load_be64(req.nonce.data() + 8)));
    for (const auto& action : cfg.init_schedule) {
        if (action.kind == ScheduleAction::AbsorbKey0)
            push_input(s, stalls, idx, word(ds.init, k0));
        if (action.kind == ScheduleAction::AbsorbKey1)
            push_input(s, stalls, idx, word(ds.init, k1));
    }
    for (const auto& b : pad_blocks(req.associated_data)) {
        SimInput in = word(ds.ad, b.bits);
        in.i_padding = b.padded;
        in.padding_len_bits = b.len_bits;
        push_input(s, stalls, idx, in);
    }
    auto blocks = req.direction == Direction::Encrypt ? pad_blocks(req.payload)
                                                      : split_blocks(req.payload);
    for (const auto& b : blocks) {
        SimInput in = word(ds.payload, b.bits);
        in.i_padding = b.len_bits < 64;
        in.padding_len_bits = b.len_bits;
        push_input(s, stalls, idx, in);
    }
    for (const auto& action : cfg.final_schedule) {
        if (action.kind == ScheduleAction::AbsorbKey0)
            push_input(s, stalls, idx, word(ds.final, k0));
        if (action.kind == ScheduleAction::AbsorbKey1)
            push_input(s, stalls, idx, word(ds.final, k1));
    }
    s.items.push_back({ScriptItem::Drain, 1, {}});
    return s;
}

Script build_hash_script(const Bytes& message, const CipherConfig& cfg, unsigned p,
                         const std::vector<unsigned>& stalls) {
    (void)cfg;
    Script s;
    s.cipher = Cipher::Ace;
    s.p = p;
    s.items.push_back({ScriptItem::Reset, 1, {}});
    size_t idx = 0;
    for (const auto& b : pad_blocks(message)) {
        SimInput in;
        in.i_mode = 2;
        in.i_data = b.bits;
        in.i_padding = b.padded;
        in.padding_len_bits = b.len_bits;
        push_input(s, stalls, idx, in);
    }
    for (int i = 0; i < 4; ++i) {
        SimInput in;
        in.i_mode = 3;
        push_input(s, stalls, idx, in);
    }
    s.items.push_back({ScriptItem::Drain, 1, {}});
    return s;
}

Script parse_script(const std::string& text) {
    Script s;
    std::istringstream in(text);
    std::string line;
    unsigned lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("script line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "cipher") {
            std::string eq, v;
            if (!(ls >> eq >> v) || eq != "=") fail("expected cipher = ace|wage");
            if (v == "ace")
                s.cipher = Cipher::Ace;
            else if (v == "wage")
                s.cipher = Cipher::Wage;
            else
                fail("unknown cipher " + v);
        } else if (tok == "p") {
            std::string eq;
            unsigned v = 0;
            if (!(ls >> eq >> v) || eq != "=") fail("expected p = N");
            s.p = v;
        } else if (tok == "reset") {
            s.items.push_back({ScriptItem::Reset, 1, {}});
        } else if (tok == "drain") {
            s.items.push_back({ScriptItem::Drain, 1, {}});
        } else if (tok == "idle") {
            unsigned n = 1;
            ls >> n;
            s.items.push_back({ScriptItem::Idle, n, {}});
        } else if (tok == "input") {
            ScriptItem it;
            it.kind = ScriptItem::Input;
            it.in.i_valid = true;
            std::string kv;
            bool have_data = false;
            while (ls >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) fail("expected key=value, got " + kv);
                std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
                try {
                    if (k == "mode")
                        it.in.i_mode = static_cast<u8>(std::stoul(v) & 3);
                    else if (k == "ds")
                        it.in.i_dom_sep = static_cast<u8>(std::stoul(v) & 3);
                    else if (k == "data") {
                        Bytes raw = from_hex(v);
                        if (raw.size() != 8) fail("data needs 16 hex digits");
                        it.in.i_data = load_be64(raw.data());
                        have_data = true;
                    } else if (k == "pad") {
                        it.in.i_padding = true;
                        it.in.padding_len_bits = static_cast<unsigned>(std::stoul(v));
                    } else {
                        fail("unknown field " + k);
                    }
                } catch (const std::invalid_argument&) {
                    fail("bad value for " + k);
                }
            }
            if (!have_data && it.in.i_mode != 3) fail("input needs data=");
            s.items.push_back(it);
        } else {
            fail("unknown directive " + tok);
        }
    }
    return s;
}

std::string serialize_script(const Script& script) {
    std::ostringstream out;
    out << "cipher = " << cipher_name(script.cipher) << "\n";
    out << "p = " << script.p << "\n";
    for (const auto& it : script.items) {
        switch (it.kind) {
            case ScriptItem::Reset: out << "reset\n"; break;
            case ScriptItem::Drain: out << "drain\n"; break;
            case ScriptItem::Idle: out << "idle " << it.count << "\n"; break;
            case ScriptItem::Input:
                out << "input mode=" << unsigned(it.in.i_mode)
                    << " ds=" << unsigned(it.in.i_dom_sep)
                    << " data=" << to_hex64(it.in.i_data);
                if (it.in.i_padding) out << " pad=" << it.in.padding_len_bits;
                out << "\n";
                break;
        }
    }
    return out.str();
}

std::string trace_to_text(const ProtocolTrace& t) {
    std::ostringstream out;
    out << "cycle reset i_mode i_dom_sep i_padding i_valid i_data"
           " o_ready o_valid o_data pcount phase\n";
    for (const auto& r : t.records) {
        out << r.cycle << ' ' << r.in.reset << ' ' << unsigned(r.in.i_mode) << ' '
            << unsigned(r.in.i_dom_sep) << ' ' << r.in.i_padding << ' ' << r.in.i_valid
            << ' ' << to_hex64(r.in.i_valid ? r.in.i_data : 0) << ' ' << r.out.o_ready
            << ' ' << r.out.o_valid << ' ' << to_hex64(r.out.o_valid ? r.out.o_data : 0)
            << ' ' << r.pcount << ' ' << phase_name(r.phase);
        if (!r.note.empty()) out << " # " << r.note;
        out << '\n';
    }
    return out.str();
}

std::string trace_to_json(const ProtocolTrace& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : t.records) {
        nlohmann::json rec{{"cycle", r.cycle},
                           {"reset", r.in.reset},
                           {"i_mode", r.in.i_mode},
                           {"i_dom_sep", r.in.i_dom_sep},
                           {"i_padding", r.in.i_padding},
                           {"i_valid", r.in.i_valid},
                           {"i_data", to_hex64(r.in.i_valid ? r.in.i_data : 0)},
                           {"o_ready", r.out.o_ready},
                           {"o_valid", r.out.o_valid},
                           {"o_data", to_hex64(r.out.o_valid ? r.out.o_data : 0)},
                           {"pcount", r.pcount},
                           {"phase", phase_name(r.phase)}};
        if (!r.note.empty()) rec["note"] = r.note;
        arr.push_back(rec);
    }
    return arr.dump(2);
}

}  // namespace aw
