#include "orthrus/library.hpp"

#include <nlohmann/json.hpp>

#include "orthrus/errors.hpp"

namespace orthrus {

NetGraph FusedCellDef::fragment() const { return parse_netlist(fragment_json); }

const CellPpa& CellLibrary::at(const std::string& type) const {
    auto it = cells.find(type);
    if (it == cells.end()) {
        throw LibraryMismatchError("library has no cell type '" + type + "'");
    }
    return it->second;
}

const FusedCellDef* CellLibrary::find_fused(const std::string& type) const {
    for (const auto& f : fused) {
        if (f.name == type) return &f;
    }
    return nullptr;
}

std::string CellLibrary::to_json() const {
    nlohmann::ordered_json doc;
    doc["version"] = "orthrus-celllib-1";
    auto& jc = doc["cells"];
    jc = nlohmann::ordered_json::object();
    for (const auto& [name, ppa] : cells) {
        jc[name] = {{"delay_ns", ppa.delay_ns},
                    {"power_mw", ppa.power_mw},
                    {"area_um2", ppa.area_um2},
                    {"num_rows", ppa.num_rows}};
    }
    auto& jf = doc["fused"];
    jf = nlohmann::ordered_json::array();
    for (const auto& f : fused) {
        jf.push_back({{"name", f.name},
                      {"canonical_key", f.canonical_key},
                      {"fragment", nlohmann::json::parse(f.fragment_json)},
                      {"input_nets", f.input_nets},
                      {"output_nets", f.output_nets}});
    }
    const auto& k = factors;
    doc["factors"] = {{"alpha_n", k.alpha_n},   {"alpha_p", k.alpha_p},
                      {"beta_n", k.beta_n},     {"beta_p", k.beta_p},
                      {"gamma_l", k.gamma_l},   {"gamma_h", k.gamma_h},
                      {"gamma_t", k.gamma_t},   {"delta_h", k.delta_h},
                      {"delta_t", k.delta_t},   {"delta_c", k.delta_c},
                      {"rho_d", k.rho_d},       {"rho_p", k.rho_p},
                      {"fusion_delay_discount", k.fusion_delay_discount},
                      {"fusion_power_discount", k.fusion_power_discount},
                      {"cpp_target_nm", k.cpp_target_nm}};
    return doc.dump(2);
}

CellLibrary CellLibrary::from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || doc.value("version", "") != std::string("orthrus-celllib-1")) {
        throw ParseError("not an orthrus-celllib-1 document");
    }
    CellLibrary lib;
    for (const auto& [name, jp] : doc.at("cells").items()) {
        CellPpa ppa;
        ppa.delay_ns = jp.at("delay_ns").get<double>();
        ppa.power_mw = jp.at("power_mw").get<double>();
        ppa.area_um2 = jp.at("area_um2").get<double>();
        ppa.num_rows = jp.value("num_rows", 1);
        if (ppa.power_mw <= 0.0 || ppa.area_um2 <= 0.0 || ppa.delay_ns < 0.0) {
            throw ParseError("cell '" + name + "' has non-positive PPA values");
        }
        lib.cells[name] = ppa;
    }
    if (doc.contains("fused")) {
        for (const auto& jf : doc["fused"]) {
            FusedCellDef def;
            def.name = jf.at("name").get<std::string>();
            def.canonical_key = jf.at("canonical_key").get<std::string>();
            def.fragment_json = jf.at("fragment").dump();
            def.input_nets = jf.at("input_nets").get<std::vector<std::string>>();
            def.output_nets = jf.at("output_nets").get<std::vector<std::string>>();
            lib.fused.push_back(std::move(def));
        }
    }
    if (doc.contains("factors")) {
        const auto& jk = doc["factors"];
        auto& k = lib.factors;
        k.alpha_n = jk.value("alpha_n", k.alpha_n);
        k.alpha_p = jk.value("alpha_p", k.alpha_p);
        k.beta_n = jk.value("beta_n", k.beta_n);
        k.beta_p = jk.value("beta_p", k.beta_p);
        k.gamma_l = jk.value("gamma_l", k.gamma_l);
        k.gamma_h = jk.value("gamma_h", k.gamma_h);
        k.gamma_t = jk.value("gamma_t", k.gamma_t);
        k.delta_h = jk.value("delta_h", k.delta_h);
        k.delta_t = jk.value("delta_t", k.delta_t);
        k.delta_c = jk.value("delta_c", k.delta_c);
        if (jk.contains("rho_d")) k.rho_d = jk["rho_d"].get<std::array<double, 3>>();
        if (jk.contains("rho_p")) k.rho_p = jk["rho_p"].get<std::array<double, 3>>();
        k.fusion_delay_discount = jk.value("fusion_delay_discount", k.fusion_delay_discount);
        k.fusion_power_discount = jk.value("fusion_power_discount", k.fusion_power_discount);
        k.cpp_target_nm = jk.value("cpp_target_nm", k.cpp_target_nm);
    }
    return lib;
}

CellLibrary default_library() {
    CellLibrary lib;
    auto add = [&](const char* name, double d, double p, double a) {
        lib.cells[name] = CellPpa{d, p, a, 1};
    };
    add("INVx1", 0.008, 1.6e-4, 0.020);
    add("INVx2", 0.006, 2.6e-4, 0.027);
    add("INVx4", 0.005, 4.4e-4, 0.041);
    add("INVx8", 0.004, 8.0e-4, 0.068);
    add("BUFx2", 0.011, 2.9e-4, 0.034);
    add("BUFx4", 0.009, 4.8e-4, 0.048);
    add("BUFx8", 0.008, 8.6e-4, 0.075);
    add("NAND2x1", 0.010, 2.0e-4, 0.027);
    add("NAND2x2", 0.008, 3.4e-4, 0.041);
    add("NAND3x1", 0.013, 2.6e-4, 0.034);
    add("NOR2x1", 0.011, 2.1e-4, 0.027);
    add("AND2x2", 0.014, 3.1e-4, 0.034);
    add("AND2x4", 0.012, 5.0e-4, 0.048);
    add("AND3x1", 0.016, 3.0e-4, 0.041);
    add("OR2x2", 0.015, 3.2e-4, 0.034);
    add("OR2x4", 0.013, 5.2e-4, 0.048);
    add("OR3x1", 0.018, 3.3e-4, 0.041);
    add("XOR2x2", 0.020, 4.6e-4, 0.055);
    add("XNOR2x2", 0.020, 4.5e-4, 0.055);
    add("MAJx1", 0.022, 4.2e-4, 0.062);
    add("MAJx2", 0.019, 6.4e-4, 0.075);
    add("AOI21x1", 0.012, 2.5e-4, 0.034);
    add("AO21x1", 0.015, 3.3e-4, 0.041);
    add("AO22x1", 0.017, 3.8e-4, 0.048);
    add("OA21x1", 0.015, 3.2e-4, 0.041);
    add("OA22x1", 0.017, 3.7e-4, 0.048);
    // Ideal register: zero arc delay, it only marks timing boundaries.
    add("DFFx1", 0.0, 5.5e-4, 0.082);
    return lib;
}

}  // namespace orthrus
