#pragma once

#include <map>

#include "aw/config.hpp"

namespace aw {

enum class GateKind { And2, Or2, Xor2, Not, Mux2, Dff };

const char* gate_name(GateKind k);

/// One line item: `count` gates, each `width` bits wide.
struct GateItem {
    GateKind kind = GateKind::And2;
    unsigned width = 1;
    unsigned count = 1;

    bool operator==(const GateItem&) const = default;
};

struct GateInventory {
    std::vector<GateItem> items;

    void add(GateKind kind, unsigned width, unsigned count = 1);
    /// Total single-bit gate count for a kind (sum of width*count).
    unsigned bits(GateKind kind) const;
    GateInventory& operator+=(const GateInventory& o);
};

GateInventory operator+(GateInventory a, const GateInventory& b);

/// Gate-equivalent weight per single-bit gate.  The defaults are typical
/// standard-cell ratios relative to a 2-input NAND; they are calibration
/// data, overridable per target library.
struct GeCostTable {
    double and2 = 1.5;
    double or2 = 1.5;
    double xor2 = 2.5;
    double inv = 0.67;
    double mux2 = 2.25;
    double dff = 4.5;
    double nand2 = 1.0; // the reference unit

    double ge(GateKind k) const;
};

struct ComponentInventory {
    std::string name;
    GateInventory gates;
};

struct AreaEstimate {
    std::vector<std::pair<std::string, double>> components;
    double total = 0.0;
};

double area_ge(const GateInventory& inv, const GeCostTable& ge);
AreaEstimate estimate_area(const std::vector<ComponentInventory>& parts,
                           const GeCostTable& ge);

/// Extra gates the WAGE register file needs for absorbing, replacing,
/// loading, tag extraction and the domain separator, derived from the
/// configured rate stages and load regions.
GateInventory wage_sponge_support_inventory(const CipherConfig& cfg);

/// Gate inventory of the p-way unrolled permutation datapath together with
/// its mode multiplexers, broken down by component.
std::vector<ComponentInventory> permutation_components(Cipher cipher, unsigned p,
                                                       const CipherConfig& cfg);
GateInventory permutation_inventory(Cipher cipher, unsigned p, const CipherConfig& cfg);

/// Adds the parts that do not scale with p: state registers, loading and
/// output multiplexers, output forcing, and the FSM.
std::vector<ComponentInventory> module_components(Cipher cipher, unsigned p,
                                                  const CipherConfig& cfg);

double throughput_bpc(Cipher cipher, unsigned p);

/// Tput / area^2.  Throws std::invalid_argument unless area > 0.
double optimality(double tput_bpc, double area);

/// Published post-synthesis module areas (GE) for an ST 65 nm library,
/// keyed by parallel degree; used as a comparison column.
const std::map<unsigned, double>& st65_reference_areas(Cipher cipher);

struct ScalingRow {
    unsigned p = 1;
    double area_ge = 0;       // this model's module estimate
    double bpc = 0;
    double opt = 0;           // optimality from the model estimate
    double reference_area = 0; // 0 = no published figure for this p
    double reference_opt = 0;
};

struct ScalingReport {
    Cipher cipher = Cipher::Ace;
    std::vector<ScalingRow> rows;
};

ScalingReport scaling_report(Cipher cipher, const CipherConfig& cfg,
                             const GeCostTable& ge);

std::string report_to_text(const ScalingReport& r);
std::string report_to_json(const ScalingReport& r);

}  // namespace aw
