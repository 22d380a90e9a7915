#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orthrus {

enum class NetKind { Input, Output, Internal };

const char* to_string(NetKind kind);
NetKind net_kind_from_string(const std::string& s);

struct Net {
    std::string name;
    NetKind kind = NetKind::Internal;
};

/// One cell instance. Pins map pin name -> net index and are kept sorted by
/// pin name. Output pins are "Y", "Q", or "O<digit>" by convention; everything
/// else is an input.
struct CellInst {
    std::string name;
    std::string type;
    std::vector<std::pair<std::string, int>> pins;

    int pin(const std::string& pin_name) const;
};

bool is_output_pin(const std::string& pin_name);
bool is_register_type(const std::string& cell_type);

/// Net-centric DAG of a standard-cell netlist: nets are vertices, cell
/// instances are typed hyper-edges oriented input-pins -> output-pin(s).
/// Instances are immutable after build(); structural edits go through a fresh
/// NetGraphBuilder.
class NetGraph {
public:
    const std::vector<Net>& nets() const { return nets_; }
    const std::vector<CellInst>& cells() const { return cells_; }

    int driver(int net) const { return driver_[static_cast<std::size_t>(net)]; }
    const std::vector<int>& consumers(int net) const {
        return consumers_[static_cast<std::size_t>(net)];
    }

    /// Input net indices of a cell, in pin order.
    std::vector<int> cell_inputs(int cell) const;
    /// Output net indices of a cell, in pin order.
    std::vector<int> cell_outputs(int cell) const;

    int find_net(const std::string& name) const;

    std::size_t register_count() const;

private:
    friend class NetGraphBuilder;

    std::vector<Net> nets_;
    std::vector<CellInst> cells_;
    std::vector<int> driver_;                    // net -> cell or -1
    std::vector<std::vector<int>> consumers_;    // net -> cells
};

class NetGraphBuilder {
public:
    /// Returns the index of the new net. Names must be unique.
    int add_net(std::string name, NetKind kind);

    /// Pins as (pin name, net index). Returns the cell index.
    int add_cell(std::string name, std::string type,
                 std::vector<std::pair<std::string, int>> pins);

    int net_count() const { return static_cast<int>(nets_.size()); }

    /// Validates structural invariants (every pin bound, Input nets undriven,
    /// Internal/Output nets driven exactly once) and freezes the graph.
    /// Throws MalformedNetlistError on violations.
    NetGraph build() &&;

private:
    std::vector<Net> nets_;
    std::vector<CellInst> cells_;
};

/// JSON document round-trip, schema "orthrus-netlist-1":
///   {"version":..., "nets":[{"id","kind"}], "cells":[{"id","type","pins":{pin:net_id}}]}
/// Parse errors name the offending net/cell/pin.
std::string write_netlist(const NetGraph& g);
NetGraph parse_netlist(const std::string& text);

}  // namespace orthrus
