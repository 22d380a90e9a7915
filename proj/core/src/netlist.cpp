#include "orthrus/netlist.hpp"

#include <algorithm>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "orthrus/errors.hpp"

namespace orthrus {

const char* to_string(NetKind kind) {
    switch (kind) {
        case NetKind::Input: return "input";
        case NetKind::Output: return "output";
        case NetKind::Internal: return "internal";
    }
    return "internal";
}

NetKind net_kind_from_string(const std::string& s) {
    if (s == "input") return NetKind::Input;
    if (s == "output") return NetKind::Output;
    if (s == "internal") return NetKind::Internal;
    throw ParseError("unknown net kind '" + s + "'");
}

bool is_output_pin(const std::string& pin_name) {
    if (pin_name == "Y" || pin_name == "Q") return true;
    return pin_name.size() >= 2 && pin_name[0] == 'O' && std::isdigit(pin_name[1]);
}

bool is_register_type(const std::string& cell_type) { return cell_type == "DFFx1"; }

int CellInst::pin(const std::string& pin_name) const {
    for (const auto& [p, n] : pins) {
        if (p == pin_name) return n;
    }
    return -1;
}

std::vector<int> NetGraph::cell_inputs(int cell) const {
    std::vector<int> in;
    for (const auto& [p, n] : cells_[static_cast<std::size_t>(cell)].pins) {
        if (!is_output_pin(p)) in.push_back(n);
    }
    return in;
}

std::vector<int> NetGraph::cell_outputs(int cell) const {
    std::vector<int> out;
    for (const auto& [p, n] : cells_[static_cast<std::size_t>(cell)].pins) {
        if (is_output_pin(p)) out.push_back(n);
    }
    return out;
}

int NetGraph::find_net(const std::string& name) const {
    for (std::size_t i = 0; i < nets_.size(); ++i) {
        if (nets_[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

std::size_t NetGraph::register_count() const {
    std::size_t n = 0;
    for (const auto& c : cells_) {
        if (is_register_type(c.type)) ++n;
    }
    return n;
}

int NetGraphBuilder::add_net(std::string name, NetKind kind) {
    nets_.push_back(Net{std::move(name), kind});
    return static_cast<int>(nets_.size() - 1);
}

int NetGraphBuilder::add_cell(std::string name, std::string type,
                              std::vector<std::pair<std::string, int>> pins) {
    std::sort(pins.begin(), pins.end());
    cells_.push_back(CellInst{std::move(name), std::move(type), std::move(pins)});
    return static_cast<int>(cells_.size() - 1);
}

NetGraph NetGraphBuilder::build() && {
    NetGraph g;
    g.nets_ = std::move(nets_);
    g.cells_ = std::move(cells_);
    g.driver_.assign(g.nets_.size(), -1);
    g.consumers_.assign(g.nets_.size(), {});

    for (std::size_t ci = 0; ci < g.cells_.size(); ++ci) {
        const auto& cell = g.cells_[ci];
        for (const auto& [pin, net] : cell.pins) {
            if (net < 0 || net >= static_cast<int>(g.nets_.size())) {
                throw MalformedNetlistError("cell '" + cell.name + "' pin '" + pin +
                                            "' references an unknown net");
            }
            if (is_output_pin(pin)) {
                if (g.driver_[static_cast<std::size_t>(net)] >= 0) {
                    throw MalformedNetlistError("net '" +
                                                g.nets_[static_cast<std::size_t>(net)].name +
                                                "' has more than one driver");
                }
                g.driver_[static_cast<std::size_t>(net)] = static_cast<int>(ci);
            } else {
                g.consumers_[static_cast<std::size_t>(net)].push_back(static_cast<int>(ci));
            }
        }
    }
    for (std::size_t ni = 0; ni < g.nets_.size(); ++ni) {
        const bool driven = g.driver_[ni] >= 0;
        switch (g.nets_[ni].kind) {
            case NetKind::Input:
                if (driven) {
                    throw MalformedNetlistError("input net '" + g.nets_[ni].name +
                                                "' must not have a driver");
                }
                break;
            case NetKind::Output:
            case NetKind::Internal:
                if (!driven) {
                    throw MalformedNetlistError("net '" + g.nets_[ni].name + "' has no driver");
                }
                break;
        }
    }
    return g;
}

std::string write_netlist(const NetGraph& g) {
    nlohmann::ordered_json doc;
    doc["version"] = "orthrus-netlist-1";
    auto& nets = doc["nets"];
    nets = nlohmann::ordered_json::array();
    for (const auto& n : g.nets()) {
        nets.push_back({{"id", n.name}, {"kind", to_string(n.kind)}});
    }
    auto& cells = doc["cells"];
    cells = nlohmann::ordered_json::array();
    for (const auto& c : g.cells()) {
        nlohmann::ordered_json pins = nlohmann::ordered_json::object();
        for (const auto& [pin, net] : c.pins) {
            pins[pin] = g.nets()[static_cast<std::size_t>(net)].name;
        }
        cells.push_back({{"id", c.name}, {"type", c.type}, {"pins", std::move(pins)}});
    }
    return doc.dump(2);
}

NetGraph parse_netlist(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw ParseError("netlist document is not valid JSON");
    }
    if (doc.value("version", "") != std::string("orthrus-netlist-1")) {
        throw ParseError("netlist document is not versioned orthrus-netlist-1");
    }
    NetGraphBuilder b;
    std::unordered_map<std::string, int> net_index;
    if (!doc.contains("nets") || !doc["nets"].is_array()) {
        throw ParseError("netlist document has no nets array");
    }
    for (const auto& jn : doc["nets"]) {
        const auto id = jn.at("id").get<std::string>();
        if (net_index.count(id)) {
            throw ParseError("duplicate net id '" + id + "'");
        }
        net_index[id] = b.add_net(id, net_kind_from_string(jn.at("kind").get<std::string>()));
    }
    if (!doc.contains("cells") || !doc["cells"].is_array()) {
        throw ParseError("netlist document has no cells array");
    }
    for (const auto& jc : doc["cells"]) {
        const auto id = jc.at("id").get<std::string>();
        std::vector<std::pair<std::string, int>> pins;
        for (const auto& [pin, jnet] : jc.at("pins").items()) {
            const auto net_name = jnet.get<std::string>();
            auto it = net_index.find(net_name);
            if (it == net_index.end()) {
                throw ParseError("cell '" + id + "' pin '" + pin +
                                 "' references undeclared net '" + net_name + "'");
            }
            pins.emplace_back(pin, it->second);
        }
        b.add_cell(id, jc.at("type").get<std::string>(), std::move(pins));
    }
    return std::move(b).build();
}

}  // namespace orthrus
