#include "orthrus/simulate.hpp"

#include <algorithm>
#include <optional>

#include "orthrus/cells.hpp"
#include "orthrus/errors.hpp"

namespace orthrus {

namespace {

// Pre-resolved evaluation plan for one cell type.
struct TypePlan {
    BasicFn fn = BasicFn::Buf;
    bool is_register = false;
    bool is_fused = false;
    // Fused: a topological program over the fragment.
    struct FragStep {
        BasicFn fn;
        std::vector<int> inputs;  // fragment net ids
        int output;
    };
    std::vector<FragStep> frag_steps;
    std::vector<int> frag_inputs;   // fragment net ids in pin order I0..
    std::vector<int> frag_outputs;  // pin order O0..
    std::size_t frag_net_count = 0;
    std::vector<std::string> input_pins;   // instance pin names in eval order
    std::vector<std::string> output_pins;
};

std::vector<int> topo_comb_order(const NetGraph& g) {
    const auto& cells = g.cells();
    std::vector<int> indegree(cells.size(), 0);
    std::vector<std::vector<int>> out_edges(cells.size());
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        if (is_register_type(cells[ci].type)) continue;
        for (int n : g.cell_inputs(static_cast<int>(ci))) {
            const int d = g.driver(n);
            if (d >= 0 && !is_register_type(cells[static_cast<std::size_t>(d)].type)) {
                out_edges[static_cast<std::size_t>(d)].push_back(static_cast<int>(ci));
                ++indegree[ci];
            }
        }
    }
    std::vector<int> order;
    std::vector<int> ready;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        if (!is_register_type(cells[ci].type) && indegree[ci] == 0) {
            ready.push_back(static_cast<int>(ci));
        }
    }
    std::size_t head = 0;
    order = std::move(ready);
    while (head < order.size()) {
        const int c = order[head++];
        for (int succ : out_edges[static_cast<std::size_t>(c)]) {
            if (--indegree[static_cast<std::size_t>(succ)] == 0) order.push_back(succ);
        }
    }
    std::size_t comb_count = 0;
    for (const auto& c : cells) {
        if (!is_register_type(c.type)) ++comb_count;
    }
    if (order.size() != comb_count) {
        throw MalformedNetlistError("combinational cycle detected");
    }
    return order;
}

TypePlan make_plan(const std::string& type, const CellLibrary* lib) {
    TypePlan plan;
    if (const CellTypeInfo* info = find_basic_cell(type)) {
        plan.fn = info->fn;
        plan.is_register = info->is_register;
        plan.input_pins = info->input_pins;
        plan.output_pins = info->output_pins;
        return plan;
    }
    const FusedCellDef* def = lib ? lib->find_fused(type) : nullptr;
    if (!def) {
        throw LibraryMismatchError("no semantics for cell type '" + type + "'");
    }
    plan.is_fused = true;
    const NetGraph frag = def->fragment();
    plan.frag_net_count = frag.nets().size();
    for (const auto& name : def->input_nets) {
        const int n = frag.find_net(name);
        if (n < 0) throw ParseError("fused cell '" + type + "' lists unknown input net");
        plan.frag_inputs.push_back(n);
        plan.input_pins.push_back("I" + std::to_string(plan.input_pins.size()));
    }
    for (const auto& name : def->output_nets) {
        const int n = frag.find_net(name);
        if (n < 0) throw ParseError("fused cell '" + type + "' lists unknown output net");
        plan.frag_outputs.push_back(n);
        plan.output_pins.push_back("O" + std::to_string(plan.output_pins.size()));
    }
    for (int ci : topo_comb_order(frag)) {
        const auto& cell = frag.cells()[static_cast<std::size_t>(ci)];
        const CellTypeInfo* info = find_basic_cell(cell.type);
        if (!info || info->is_register) {
            throw MalformedNetlistError("fused fragment of '" + type +
                                        "' must contain basic combinational cells only");
        }
        TypePlan::FragStep step;
        step.fn = info->fn;
        for (const auto& pin : info->input_pins) step.inputs.push_back(cell.pin(pin));
        step.output = cell.pin(info->output_pins[0]);
        plan.frag_steps.push_back(std::move(step));
    }
    return plan;
}

}  // namespace

BitAssignment simulate_sequence(const NetGraph& g,
                                const std::vector<BitAssignment>& inputs_per_cycle,
                                const CellLibrary* lib) {
    if (inputs_per_cycle.empty()) {
        throw InvalidInputError("simulate: need at least one cycle of inputs");
    }
    const auto& nets = g.nets();
    const auto& cells = g.cells();

    std::map<std::string, TypePlan> plans;
    for (const auto& c : cells) {
        if (!plans.count(c.type)) plans.emplace(c.type, make_plan(c.type, lib));
    }

    const std::vector<int> order = topo_comb_order(g);

    std::vector<char> value(nets.size(), 0);
    std::vector<char> frag_value;

    struct RegBinding {
        int d, q;
    };
    std::vector<RegBinding> regs;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        if (is_register_type(cells[ci].type)) {
            regs.push_back({cells[ci].pin("D"), cells[ci].pin("Q")});
        }
    }

    for (const auto& cycle_inputs : inputs_per_cycle) {
        for (std::size_t ni = 0; ni < nets.size(); ++ni) {
            if (nets[ni].kind != NetKind::Input) continue;
            auto it = cycle_inputs.find(nets[ni].name);
            if (it == cycle_inputs.end()) {
                throw InvalidInputError("simulate: input net '" + nets[ni].name +
                                        "' not assigned");
            }
            value[ni] = it->second ? 1 : 0;
        }
        for (int ci : order) {
            const auto& cell = cells[static_cast<std::size_t>(ci)];
            const TypePlan& plan = plans.at(cell.type);
            if (!plan.is_fused) {
                bool in_bits[4] = {false, false, false, false};
                std::size_t n_in = plan.input_pins.size();
                for (std::size_t k = 0; k < n_in; ++k) {
                    in_bits[k] = value[static_cast<std::size_t>(cell.pin(plan.input_pins[k]))];
                }
                value[static_cast<std::size_t>(cell.pin("Y"))] =
                    eval_basic_fn(plan.fn, std::span<const bool>(in_bits, n_in));
            } else {
                frag_value.assign(plan.frag_net_count, 0);
                for (std::size_t k = 0; k < plan.frag_inputs.size(); ++k) {
                    frag_value[static_cast<std::size_t>(plan.frag_inputs[k])] =
                        value[static_cast<std::size_t>(cell.pin(plan.input_pins[k]))];
                }
                for (const auto& step : plan.frag_steps) {
                    bool in_bits[4] = {false, false, false, false};
                    for (std::size_t k = 0; k < step.inputs.size(); ++k) {
                        in_bits[k] = frag_value[static_cast<std::size_t>(step.inputs[k])];
                    }
                    frag_value[static_cast<std::size_t>(step.output)] =
                        eval_basic_fn(step.fn, std::span<const bool>(in_bits, step.inputs.size()));
                }
                for (std::size_t k = 0; k < plan.frag_outputs.size(); ++k) {
                    value[static_cast<std::size_t>(cell.pin(plan.output_pins[k]))] =
                        frag_value[static_cast<std::size_t>(plan.frag_outputs[k])];
                }
            }
        }
        // Cycle boundary: registers latch D into Q.
        std::vector<char> latched(regs.size());
        for (std::size_t r = 0; r < regs.size(); ++r) {
            latched[r] = value[static_cast<std::size_t>(regs[r].d)];
        }
        for (std::size_t r = 0; r < regs.size(); ++r) {
            value[static_cast<std::size_t>(regs[r].q)] = latched[r];
        }
    }

    BitAssignment out;
    for (std::size_t ni = 0; ni < nets.size(); ++ni) {
        if (nets[ni].kind == NetKind::Output) {
            out[nets[ni].name] = value[ni] != 0;
        }
    }
    return out;
}

BitAssignment simulate(const NetGraph& g, const BitAssignment& inputs, int cycles,
                       const CellLibrary* lib) {
    if (cycles < 1) throw InvalidInputError("simulate: cycles must be >= 1");
    std::vector<BitAssignment> seq(static_cast<std::size_t>(cycles), inputs);
    return simulate_sequence(g, seq, lib);
}

void assign_bits(BitAssignment& a, const std::string& base, int width,
                 unsigned long long value) {
    for (int k = 0; k < width; ++k) {
        a[base + "_" + std::to_string(k)] = ((value >> k) & 1ULL) != 0;
    }
}

unsigned long long read_bits(const BitAssignment& a, const std::string& base, int width) {
    unsigned long long v = 0;
    for (int k = 0; k < width; ++k) {
        auto it = a.find(base + "_" + std::to_string(k));
        if (it == a.end()) {
            throw InvalidInputError("read_bits: missing net '" + base + "_" +
                                    std::to_string(k) + "'");
        }
        if (it->second) v |= 1ULL << k;
    }
    return v;
}

}  // namespace orthrus
