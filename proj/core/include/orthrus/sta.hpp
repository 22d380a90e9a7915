#pragma once

#include <vector>

#include "orthrus/library.hpp"
#include "orthrus/netlist.hpp"

namespace orthrus {

/// One launch-to-capture signal route: an ordered list of combinational cell
/// instances. Launch points are Input nets and register outputs; capture
/// points are Output nets and register data inputs.
struct TimingPath {
    int launch_net = -1;
    int capture_net = -1;
    std::vector<int> cells;
    double delay = 0.0;
};

struct StaResult {
    /// Per cell instance: the maximum delay over all launch-to-capture paths
    /// through it (0 for registers and for cells on no complete path).
    std::vector<double> through_delay;
    std::vector<TimingPath> top_paths;  // up to top_k distinct worst paths
    double critical_delay = 0.0;
};

/// Longest-path static timing over the combinational cells, registers acting
/// as ideal boundaries (zero setup / clock-to-q). Per-instance maxima come
/// from a forward/backward DP, not from the reported path list; the top_k
/// worst paths are enumerated best-first.
/// Throws LibraryMismatchError for cell types missing from the library and
/// MalformedNetlistError on a combinational cycle.
StaResult static_timing(const NetGraph& g, const CellLibrary& lib, std::size_t top_k = 1000);

/// Splits the netlist at register boundaries into its combinational islands.
/// Register boundaries become Input/Output nets of the islands; every
/// combinational cell lands in exactly one island.
std::vector<NetGraph> partition_combinational(const NetGraph& g);

}  // namespace orthrus
