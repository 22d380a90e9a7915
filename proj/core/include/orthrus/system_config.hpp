#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthrus/encoding.hpp"
#include "orthrus/macgen.hpp"

namespace orthrus {

enum class Effort3 { Low, Medium, High };
enum class Effort4 { None, Low, Medium, High };
enum class CongEffort { Auto, Low, Medium, High };
enum class TimingEffort { Medium, High };

/// One point in the system-level design space: architecture, logic-synthesis
/// and physical-design segments. Technology parameters are owned by the
/// technology loop.
struct ParameterConfig {
    CtType ct_type = CtType::WT;
    CpaType cpa_type = CpaType::SK;

    double clock_period_ns = 0.5;
    Effort3 syn_generic_effort = Effort3::Medium;
    Effort3 syn_map_effort = Effort3::High;
    Effort4 syn_opt_effort = Effort4::None;

    double place_utilization = 0.8;
    CongEffort place_glb_cong_effort = CongEffort::Auto;
    TimingEffort place_glb_timing_effort = TimingEffort::Medium;
    bool place_glb_clk_power_driven = true;

    bool operator==(const ParameterConfig&) const = default;

    std::string to_json() const;
    static ParameterConfig from_json(const std::string& text);
};

/// The system segment of the cross-layer design space: field domains, uniform
/// sampling, and the fixed feature encoding used by the surrogate.
class SystemSpace {
public:
    SystemSpace();

    const EncodingSchema& schema() const { return schema_; }

    /// Raw field values of a config in schema order (categoricals as level
    /// indices).
    std::vector<double> raw_values(const ParameterConfig& p) const;

    /// Min-max scaled continuous features plus one-hot categoricals.
    std::vector<double> encode(const ParameterConfig& p) const;

    /// Uniform independent draws per field; deterministic under the seed.
    std::vector<ParameterConfig> random_sample(std::size_t n, std::uint64_t seed) const;

private:
    EncodingSchema schema_;
};

const char* to_string(Effort3 e);
const char* to_string(Effort4 e);
const char* to_string(CongEffort e);
const char* to_string(TimingEffort e);

}  // namespace orthrus
