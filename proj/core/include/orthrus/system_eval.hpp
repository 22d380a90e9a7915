#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>

#include "orthrus/library.hpp"
#include "orthrus/macgen.hpp"
#include "orthrus/objective.hpp"
#include "orthrus/sta.hpp"
#include "orthrus/system_config.hpp"

namespace orthrus {

/// Effort/utilization factor tables of the synthetic evaluation backend.
/// Each entry is a (delay multiplier, power multiplier) pair within
/// (0.8, 1.25]; delay multipliers are monotone non-increasing with effort.
/// These stand in for the synthesis / place-and-route tool response and are
/// plain data, serializable with the campaign configuration.
struct BackendFactors {
    std::array<std::array<double, 2>, 3> syn_generic = {{{1.05, 0.97}, {1.0, 1.0}, {0.97, 1.03}}};
    std::array<std::array<double, 2>, 3> syn_map = {{{1.04, 0.98}, {1.0, 1.0}, {0.96, 1.04}}};
    std::array<std::array<double, 2>, 4> syn_opt = {
        {{1.0, 1.0}, {0.98, 1.02}, {0.95, 1.05}, {0.92, 1.08}}};
    std::array<std::array<double, 2>, 4> place_cong = {
        {{1.0, 1.0}, {1.02, 0.98}, {0.99, 1.01}, {0.97, 1.03}}};
    std::array<std::array<double, 2>, 2> place_timing = {{{1.0, 1.0}, {0.96, 1.05}}};
    std::array<std::array<double, 2>, 2> clk_power_driven = {{{1.02, 0.95}, {1.0, 1.0}}};
    double util_delay_slope = 0.15;   // delay_mult = 1 + slope * (util - 0.5)
    double clock_penalty_coef = 1.0;  // power/area inflation per unit of relative violation

    std::string to_json() const;
    static BackendFactors from_json(const std::string& text);
};

struct BackendConfig {
    int rows = 8;
    int cols = 8;
    int width = 8;
    BackendFactors factors;
};

/// Deterministic gate-level evaluation backend standing in for the RTL
/// generator + synthesis + place-and-route toolchain. Netlists and their
/// timing are cached per (ct, cpa) since the library is fixed for the
/// backend's lifetime.
class SystemBackend {
public:
    SystemBackend(CellLibrary lib, BackendConfig cfg);

    /// delay = critical delay x effort multipliers; power = cell power x
    /// activity multipliers; area = cell area / utilization. Missing the
    /// target clock inflates power and area by the feasibility penalty.
    ObjectiveVector evaluate(const ParameterConfig& p) const;

    /// The evaluated netlist (fused when the library defines fused cells)
    /// and its timing, as cached for the architecture segment.
    struct Design {
        NetGraph netlist;
        StaResult sta;
        double total_power = 0.0;
        double total_area = 0.0;
    };
    const Design& design_for(const ParameterConfig& p) const;

    const CellLibrary& library() const { return lib_; }
    const BackendConfig& config() const { return cfg_; }

    /// Number of fusion rewrites performed while building cached designs.
    std::size_t fusion_applications() const { return fusion_applications_; }

private:
    CellLibrary lib_;
    BackendConfig cfg_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<Design>> cache_;
    mutable std::size_t fusion_applications_ = 0;
};

}  // namespace orthrus
