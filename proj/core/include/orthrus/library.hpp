#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "orthrus/netlist.hpp"

namespace orthrus {

/// Per-cell-type PPA record. Delay is a single worst input->output arc value.
struct CellPpa {
    double delay_ns = 0.0;
    double power_mw = 0.0;  // at the reference switching activity (0.2)
    double area_um2 = 0.0;
    int num_rows = 1;
};

/// A fused standard cell: a mined multi-cell pattern promoted to a cell. The
/// fragment is a standalone netlist whose Input/Output nets are the ports,
/// bound to pins I0..In / O0..Om in the listed order.
struct FusedCellDef {
    std::string name;
    std::string canonical_key;
    std::string fragment_json;              // orthrus-netlist-1 document
    std::vector<std::string> input_nets;    // fragment net names, pin order
    std::vector<std::string> output_nets;

    NetGraph fragment() const;
};

/// Constants of the analytic technology factor model. All exactly neutral at
/// the Table-defaults operating point.
struct TechFactorConstants {
    double alpha_n = 40.0;  // 1/eV, NMOS workfunction sensitivity of delay
    double alpha_p = 40.0;
    double beta_n = 60.0;  // 1/eV, workfunction sensitivity of power
    double beta_p = 60.0;
    double gamma_l = 0.8;  // gate-length exponent (delay)
    double gamma_h = 1.0;  // fin-height exponent (delay)
    double gamma_t = 0.3;  // fin-thickness exponent (delay)
    double delta_h = 1.0;  // fin-height exponent (power)
    double delta_t = 0.5;  // fin-thickness exponent (power)
    double delta_c = 0.2;  // contact-length exponent (power)
    std::array<double, 3> rho_d = {1.0, 0.93, 0.88};  // num_rows delay factor
    std::array<double, 3> rho_p = {1.0, 1.03, 1.07};  // num_rows power factor
    double fusion_delay_discount = 0.9;
    double fusion_power_discount = 0.95;
    double cpp_target_nm = 54.0;
};

/// Standard cell library: base PPA per type, fused-cell definitions, and the
/// factor-model constants. Serializes to a versioned JSON document.
struct CellLibrary {
    std::map<std::string, CellPpa> cells;
    std::vector<FusedCellDef> fused;
    TechFactorConstants factors;

    const CellPpa& at(const std::string& type) const;
    bool has(const std::string& type) const { return cells.count(type) > 0; }
    const FusedCellDef* find_fused(const std::string& type) const;

    std::string to_json() const;
    static CellLibrary from_json(const std::string& text);
};

/// The adopted 6T base library plus the pipeline register, with the synthetic
/// PPA numbers this artifact ships as its characterization stand-in.
CellLibrary default_library();

}  // namespace orthrus
