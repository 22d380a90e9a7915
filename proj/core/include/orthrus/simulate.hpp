#pragma once

#include <map>
#include <string>
#include <vector>

#include "orthrus/library.hpp"
#include "orthrus/netlist.hpp"

namespace orthrus {

using BitAssignment = std::map<std::string, bool>;

/// Cycle-based functional simulation: per cycle the Input nets are assigned,
/// combinational cells evaluate in topological order, and registers latch on
/// the cycle boundary. Registers power up holding 0. Returns the net values
/// after the final cycle's latch. The library supplies semantics for fused
/// cell types; pass nullptr for purely basic netlists.
/// Throws MalformedNetlistError on a combinational cycle and
/// InvalidInputError when an Input net is left unassigned.
BitAssignment simulate_sequence(const NetGraph& g,
                                const std::vector<BitAssignment>& inputs_per_cycle,
                                const CellLibrary* lib = nullptr);

/// Same input assignment repeated for `cycles` cycles.
BitAssignment simulate(const NetGraph& g, const BitAssignment& inputs, int cycles = 1,
                       const CellLibrary* lib = nullptr);

/// Helpers for driving bit-vector ports named <base>_<bit>.
void assign_bits(BitAssignment& a, const std::string& base, int width, unsigned long long value);
unsigned long long read_bits(const BitAssignment& a, const std::string& base, int width);

}  // namespace orthrus
