#include "orthrus/system_config.hpp"

#include <nlohmann/json.hpp>

#include "orthrus/errors.hpp"
#include "orthrus/rng.hpp"

namespace orthrus {

const char* to_string(Effort3 e) {
    switch (e) {
        case Effort3::Low: return "low";
        case Effort3::Medium: return "medium";
        case Effort3::High: return "high";
    }
    return "medium";
}
const char* to_string(Effort4 e) {
    switch (e) {
        case Effort4::None: return "none";
        case Effort4::Low: return "low";
        case Effort4::Medium: return "medium";
        case Effort4::High: return "high";
    }
    return "none";
}
const char* to_string(CongEffort e) {
    switch (e) {
        case CongEffort::Auto: return "auto";
        case CongEffort::Low: return "low";
        case CongEffort::Medium: return "medium";
        case CongEffort::High: return "high";
    }
    return "auto";
}
const char* to_string(TimingEffort e) {
    return e == TimingEffort::Medium ? "medium" : "high";
}

namespace {

template <typename E>
E enum_from_index(std::size_t i) {
    return static_cast<E>(i);
}

int index_of(const std::vector<std::string>& levels, const std::string& v,
             const char* field) {
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] == v) return static_cast<int>(i);
    }
    throw InvalidInputError(std::string("field '") + field + "' has no level '" + v + "'");
}

}  // namespace

SystemSpace::SystemSpace() {
    std::vector<FieldSpec> fields;
    fields.push_back(FieldSpec::categorical("ct_type", {"wt", "dt"}));
    fields.push_back(FieldSpec::categorical("cpa_type", {"sk", "ks", "bk"}));
    fields.push_back(FieldSpec::continuous("clock_period_ns", 0.4, 1.0));
    fields.push_back(FieldSpec::categorical("syn_generic_effort", {"low", "medium", "high"}));
    fields.push_back(FieldSpec::categorical("syn_map_effort", {"low", "medium", "high"}));
    fields.push_back(
        FieldSpec::categorical("syn_opt_effort", {"none", "low", "medium", "high"}));
    fields.push_back(FieldSpec::continuous("place_utilization", 0.5, 0.9));
    fields.push_back(
        FieldSpec::categorical("place_glb_cong_effort", {"auto", "low", "medium", "high"}));
    fields.push_back(FieldSpec::categorical("place_glb_timing_effort", {"medium", "high"}));
    fields.push_back(FieldSpec::categorical("place_glb_clk_power_driven", {"true", "false"}));
    schema_ = EncodingSchema(std::move(fields));
}

std::vector<double> SystemSpace::raw_values(const ParameterConfig& p) const {
    return {
        static_cast<double>(static_cast<int>(p.ct_type)),
        static_cast<double>(static_cast<int>(p.cpa_type)),
        p.clock_period_ns,
        static_cast<double>(static_cast<int>(p.syn_generic_effort)),
        static_cast<double>(static_cast<int>(p.syn_map_effort)),
        static_cast<double>(static_cast<int>(p.syn_opt_effort)),
        p.place_utilization,
        static_cast<double>(static_cast<int>(p.place_glb_cong_effort)),
        static_cast<double>(static_cast<int>(p.place_glb_timing_effort)),
        p.place_glb_clk_power_driven ? 0.0 : 1.0,
    };
}

std::vector<double> SystemSpace::encode(const ParameterConfig& p) const {
    return schema_.encode(raw_values(p));
}

std::vector<ParameterConfig> SystemSpace::random_sample(std::size_t n,
                                                        std::uint64_t seed) const {
    Rng rng(seed);
    std::vector<ParameterConfig> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ParameterConfig p;
        p.ct_type = enum_from_index<CtType>(rng.uniform_index(2));
        p.cpa_type = enum_from_index<CpaType>(rng.uniform_index(3));
        p.clock_period_ns = rng.uniform(0.4, 1.0);
        p.syn_generic_effort = enum_from_index<Effort3>(rng.uniform_index(3));
        p.syn_map_effort = enum_from_index<Effort3>(rng.uniform_index(3));
        p.syn_opt_effort = enum_from_index<Effort4>(rng.uniform_index(4));
        p.place_utilization = rng.uniform(0.5, 0.9);
        p.place_glb_cong_effort = enum_from_index<CongEffort>(rng.uniform_index(4));
        p.place_glb_timing_effort = enum_from_index<TimingEffort>(rng.uniform_index(2));
        p.place_glb_clk_power_driven = rng.uniform_index(2) == 0;
        out.push_back(p);
    }
    return out;
}

std::string ParameterConfig::to_json() const {
    nlohmann::ordered_json j;
    j["ct_type"] = orthrus::to_string(ct_type);
    j["cpa_type"] = orthrus::to_string(cpa_type);
    j["clock_period_ns"] = clock_period_ns;
    j["syn_generic_effort"] = orthrus::to_string(syn_generic_effort);
    j["syn_map_effort"] = orthrus::to_string(syn_map_effort);
    j["syn_opt_effort"] = orthrus::to_string(syn_opt_effort);
    j["place_utilization"] = place_utilization;
    j["place_glb_cong_effort"] = orthrus::to_string(place_glb_cong_effort);
    j["place_glb_timing_effort"] = orthrus::to_string(place_glb_timing_effort);
    j["place_glb_clk_power_driven"] = place_glb_clk_power_driven;
    return j.dump();
}

ParameterConfig ParameterConfig::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("ParameterConfig: invalid JSON");
    ParameterConfig p;
    p.ct_type = ct_type_from_string(j.at("ct_type").get<std::string>());
    p.cpa_type = cpa_type_from_string(j.at("cpa_type").get<std::string>());
    p.clock_period_ns = j.at("clock_period_ns").get<double>();
    p.syn_generic_effort = static_cast<Effort3>(index_of(
        {"low", "medium", "high"}, j.at("syn_generic_effort").get<std::string>(),
        "syn_generic_effort"));
    p.syn_map_effort = static_cast<Effort3>(index_of(
        {"low", "medium", "high"}, j.at("syn_map_effort").get<std::string>(), "syn_map_effort"));
    p.syn_opt_effort = static_cast<Effort4>(
        index_of({"none", "low", "medium", "high"}, j.at("syn_opt_effort").get<std::string>(),
                 "syn_opt_effort"));
    p.place_utilization = j.at("place_utilization").get<double>();
    p.place_glb_cong_effort = static_cast<CongEffort>(
        index_of({"auto", "low", "medium", "high"},
                 j.at("place_glb_cong_effort").get<std::string>(), "place_glb_cong_effort"));
    p.place_glb_timing_effort = static_cast<TimingEffort>(
        index_of({"medium", "high"}, j.at("place_glb_timing_effort").get<std::string>(),
                 "place_glb_timing_effort"));
    p.place_glb_clk_power_driven = j.at("place_glb_clk_power_driven").get<bool>();
    return p;
}

}  // namespace orthrus
