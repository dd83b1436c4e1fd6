#include "aw/cost.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "aw/hwsim.hpp"
#include "json.hpp"

namespace aw {

const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::And2: return "and2";
        case GateKind::Or2: return "or2";
        case GateKind::Xor2: return "xor2";
        case GateKind::Not: return "not";
        case GateKind::Mux2: return "mux2";
        case GateKind::Dff: return "dff";
    }
    return "?";
}

void GateInventory::add(GateKind kind, unsigned width, unsigned count) {
    if (count == 0 || width == 0) return;
    items.push_back({kind, width, count});
}

unsigned GateInventory::bits(GateKind kind) const {
    unsigned n = 0;
    for (const auto& it : items)
        if (it.kind == kind) n += it.width * it.count;
    return n;
}

GateInventory& GateInventory::operator+=(const GateInventory& o) {
    items.insert(items.end(), o.items.begin(), o.items.end());
    return *this;
}

GateInventory operator+(GateInventory a, const GateInventory& b) {
    a += b;
    return a;
}

double GeCostTable::ge(GateKind k) const {
    switch (k) {
        case GateKind::And2: return and2;
        case GateKind::Or2: return or2;
        case GateKind::Xor2: return xor2;
        case GateKind::Not: return inv;
        case GateKind::Mux2: return mux2;
        case GateKind::Dff: return dff;
    }
    return 0;
}

double area_ge(const GateInventory& inv, const GeCostTable& ge) {
    double total = 0;
    for (const auto& it : inv.items) total += ge.ge(it.kind) * it.width * it.count;
    return total;
}

AreaEstimate estimate_area(const std::vector<ComponentInventory>& parts,
                           const GeCostTable& ge) {
    AreaEstimate est;
    for (const auto& part : parts) {
        double a = area_ge(part.gates, ge);
        est.components.emplace_back(part.name, a);
        est.total += a;
    }
    return est;
}

GateInventory wage_sponge_support_inventory(const CipherConfig& cfg) {
    GateInventory inv;
    const unsigned stage_w = cfg.wage_const_lfsr.width; // 7-bit stages

    // Data ports sit at the rate stages, numbered in ascending stage order.
    auto ports = cfg.wage_rate_stages;
    std::sort(ports.begin(), ports.end(),
              [](const RateStage& a, const RateStage& b) { return a.stage < b.stage; });

    // Absorb xor + absorb mux per rate stage, full stage width each.
    inv.add(GateKind::Xor2, stage_w, static_cast<unsigned>(ports.size()));
    inv.add(GateKind::Mux2, stage_w, static_cast<unsigned>(ports.size()));
    // Replace/load mux per rate stage (the region-entry ones are shared
    // with loading, so loading adds no gates of its own).
    inv.add(GateKind::Mux2, stage_w, static_cast<unsigned>(ports.size()));
    // Domain separator: one xor and one mux at its configured width.
    unsigned ds_w = static_cast<unsigned>(cfg.wage_domain_sep_positions.size());
    inv.add(GateKind::Xor2, ds_w, 1);
    inv.add(GateKind::Mux2, ds_w, 1);
    // One bypass mux per SB feeding a stage, to disable the nonlinear path
    // while a region shifts through it.
    unsigned sb = 0;
    for (const auto& e : cfg.wage_nonlinear_update_map)
        if (!e.use_wgp) ++sb;
    inv.add(GateKind::Mux2, stage_w, sb);
    // Ports that must be gated off while other regions load: a port at a
    // region-bottom stage, or a full-width entry port whose region bottoms
    // out on another port (narrow ports are masked anyway).
    std::vector<unsigned> bottoms;
    for (const auto& r : cfg.wage_load_regions)
        bottoms.push_back(r.entry_stage - r.length + 1);
    auto is_port_stage = [&](unsigned s) {
        return std::any_of(ports.begin(), ports.end(),
                           [&](const RateStage& rs) { return rs.stage == s; });
    };
    unsigned gated = 0;
    for (const auto& rs : ports) {
        bool bottom = std::find(bottoms.begin(), bottoms.end(), rs.stage) != bottoms.end();
        bool entry_onto_port = false;
        for (const auto& r : cfg.wage_load_regions)
            if (r.entry_stage == rs.stage && rs.bits == stage_w &&
                is_port_stage(r.entry_stage - r.length + 1))
                entry_onto_port = true;
        if (bottom || entry_onto_port) ++gated;
    }
    inv.add(GateKind::And2, stage_w, gated);
    return inv;
}

// Gate counts for one unrolled instance of each nonlinear block.  These are
// per-output-bit heuristics for synthesized combinational nets; like the GE
// table they are calibration data, not measurements.
namespace {
constexpr unsigned kWgpAndPerBit = 16, kWgpOrPerBit = 8, kWgpNotPerBit = 4;
constexpr unsigned kSbAndPerBit = 5, kSbOrPerBit = 2, kSbNotPerBit = 2;
}  // namespace

std::vector<ComponentInventory> permutation_components(Cipher cipher, unsigned p,
                                                       const CipherConfig& cfg) {
    if (!supported_parallelism(cipher, p))
        throw std::invalid_argument("unsupported parallel degree");
    std::vector<ComponentInventory> parts;
    if (cipher == Cipher::Ace) {
        // One 32-bit Simeck round circuit per 64-bit word and round level.
        GateInventory simeck;
        unsigned copies = 3 * p;
        simeck.add(GateKind::And2, 32, copies);
        simeck.add(GateKind::Xor2, 65, copies); // two 32-bit layers + rc bit
        simeck.add(GateKind::Not, 31, copies);  // constant template high bits
        parts.push_back({"simeck", simeck});

        GateInventory step;
        unsigned mixes = static_cast<unsigned>(cfg.ace_step_mix.size());
        step.add(GateKind::Xor2, 72, mixes); // source word + constant low byte
        step.add(GateKind::Not, 56, mixes);  // constant template high bits
        parts.push_back({"step", step});

        GateInventory mux; // round-input / step-output selection per word
        mux.add(GateKind::Mux2, 64, mixes);
        parts.push_back({"mode muxes", mux});

        GateInventory lfsr;
        lfsr.add(GateKind::Dff, cfg.ace_const_lfsr.width, 1);
        unsigned taps = static_cast<unsigned>(cfg.ace_const_lfsr.taps.size());
        lfsr.add(GateKind::Xor2, taps - 1, 3 * p); // 3 constant bits per round
        parts.push_back({"lfsr_c", lfsr});
    } else {
        unsigned stage_w = cfg.wage_const_lfsr.width;
        GateInventory fb;
        fb.add(GateKind::Xor2, stage_w,
               static_cast<unsigned>(cfg.wage_feedback_taps.size()) * p);
        if (cfg.wage_feedback_omega_s0) {
            unsigned poly_lo = static_cast<unsigned>(
                std::popcount(cfg.wage_field_poly & ((1u << stage_w) - 1)));
            fb.add(GateKind::Xor2, 1, poly_lo * p);
        }
        parts.push_back({"feedback", fb});

        unsigned wgp = 0, sb = 0;
        for (const auto& e : cfg.wage_nonlinear_update_map) (e.use_wgp ? wgp : sb)++;
        GateInventory wgpinv;
        wgpinv.add(GateKind::And2, kWgpAndPerBit * stage_w, wgp * p);
        wgpinv.add(GateKind::Or2, kWgpOrPerBit * stage_w, wgp * p);
        wgpinv.add(GateKind::Not, kWgpNotPerBit * stage_w, wgp * p);
        parts.push_back({"wgp", wgpinv});

        GateInventory sbinv;
        sbinv.add(GateKind::And2, kSbAndPerBit * stage_w, sb * p);
        sbinv.add(GateKind::Or2, kSbOrPerBit * stage_w, sb * p);
        sbinv.add(GateKind::Not, kSbNotPerBit * stage_w, sb * p);
        parts.push_back({"sb", sbinv});

        GateInventory lfsr;
        lfsr.add(GateKind::Dff, cfg.wage_const_lfsr.width, 1);
        unsigned taps = static_cast<unsigned>(cfg.wage_const_lfsr.taps.size());
        lfsr.add(GateKind::Xor2, taps - 1, 2 * p); // rc pair per round
        parts.push_back({"lfsr_c", lfsr});

        parts.push_back({"sponge support", wage_sponge_support_inventory(cfg)});
    }
    return parts;
}

GateInventory permutation_inventory(Cipher cipher, unsigned p, const CipherConfig& cfg) {
    GateInventory inv;
    for (const auto& part : permutation_components(cipher, p, cfg)) inv += part.gates;
    return inv;
}

std::vector<ComponentInventory> module_components(Cipher cipher, unsigned p,
                                                  const CipherConfig& cfg) {
    auto parts = permutation_components(cipher, p, cfg);
    GateInventory fixed;
    if (cipher == Cipher::Ace) {
        fixed.add(GateKind::Dff, 64, 5);   // state registers
        fixed.add(GateKind::Mux2, 64, 5);  // loading path per register
        fixed.add(GateKind::Mux2, 64, 2);  // output word selection
        fixed.add(GateKind::And2, 64, 1);  // output forcing to zero
        fixed.add(GateKind::Xor2, 64, 1);  // rate input xor
    } else {
        unsigned stage_w = cfg.wage_const_lfsr.width;
        fixed.add(GateKind::Dff, stage_w, 37); // state stages
        fixed.add(GateKind::Mux2, 64, 1);      // output word selection
        fixed.add(GateKind::And2, 64, 1);      // output forcing to zero
    }
    fixed.add(GateKind::Dff, 12, 1); // pcount + phase FSM
    parts.push_back({"module", fixed});
    return parts;
}

double throughput_bpc(Cipher cipher, unsigned p) {
    return 64.0 / cycles_per_permutation(cipher, p);
}

double optimality(double tput_bpc, double area) {
    if (!(area > 0)) throw std::invalid_argument("optimality needs a positive area");
    return tput_bpc / (area * area);
}

const std::map<unsigned, double>& st65_reference_areas(Cipher cipher) {
    static const std::map<unsigned, double> ace{
        {1, 4250}, {2, 4780}, {4, 5760}, {8, 7240}};
    static const std::map<unsigned, double> wage{
        {1, 2900}, {2, 4960}, {3, 5480}, {4, 6780}, {8, 12150}};
    return cipher == Cipher::Ace ? ace : wage;
}

ScalingReport scaling_report(Cipher cipher, const CipherConfig& cfg,
                             const GeCostTable& ge) {
    ScalingReport rep;
    rep.cipher = cipher;
    const auto& refs = st65_reference_areas(cipher);
    for (unsigned p : supported_degrees(cipher)) {
        ScalingRow row;
        row.p = p;
        row.area_ge = estimate_area(module_components(cipher, p, cfg), ge).total;
        row.bpc = throughput_bpc(cipher, p);
        row.opt = optimality(row.bpc, row.area_ge);
        if (auto it = refs.find(p); it != refs.end()) {
            row.reference_area = it->second;
            row.reference_opt = optimality(row.bpc, row.reference_area);
        }
        rep.rows.push_back(row);
    }
    return rep;
}

std::string report_to_text(const ScalingReport& r) {
    std::ostringstream out;
    out << "cipher: " << cipher_name(r.cipher) << "\n";
    out << "  p   est[GE]    bpc    opt[1/GE^2]   ref[GE]  ref_opt[1/GE^2]\n";
    char buf[128];
    for (const auto& row : r.rows) {
        std::snprintf(buf, sizeof buf, "%3u %9.1f %6.2f %13.3e", row.p, row.area_ge,
                      row.bpc, row.opt);
        out << buf;
        if (row.reference_area > 0) {
            std::snprintf(buf, sizeof buf, " %9.0f %16.3e", row.reference_area,
                          row.reference_opt);
            out << buf;
        } else {
            out << "         -                -";
        }
        out << "\n";
    }
    return out.str();
}

std::string report_to_json(const ScalingReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json j{{"p", row.p},
                         {"estimate_ge", row.area_ge},
                         {"bpc", row.bpc},
                         {"optimality", row.opt}};
        if (row.reference_area > 0) {
            j["reference_ge"] = row.reference_area;
            j["reference_optimality"] = row.reference_opt;
        }
        rows.push_back(j);
    }
    return nlohmann::json{{"cipher", cipher_name(r.cipher)}, {"rows", rows}}.dump(2);
}

}  // namespace aw
