#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orthrus/netlist.hpp"

namespace orthrus {

/// Size bounds on mined subcircuits: external input nets, escaping output
/// nets, and logic depth in cell levels.
struct MiningBounds {
    int i_max = 4;
    int o_max = 2;
    int d_max = 3;
    std::size_t max_cells = 32;  // hard safety cap on occurrence size
};

/// One frequent subcircuit pattern: its canonical key, a representative
/// fragment (standalone netlist whose Input/Output nets are the pattern
/// ports), the occurrence count, and the I/O profile (inputs, outputs, depth).
struct SubcircuitPattern {
    std::string canonical_key;
    std::string example_fragment_json;
    std::size_t count = 0;
    int num_inputs = 0;
    int num_outputs = 0;
    int depth = 0;
    std::size_t cell_count = 0;
};

/// Extracts the cell subset as a standalone fragment: nets consumed from
/// outside become Input, nets escaping to the rest of the graph (or primary
/// outputs) become Output, the rest Internal.
NetGraph extract_fragment(const NetGraph& g, const std::vector<int>& cell_set);

/// Canonical string key of a fragment. Isomorphic fragments (net relabelings
/// preserving cell types, pin roles, and net kinds) map to equal keys and
/// non-isomorphic fragments to distinct keys: the key is a full canonical
/// serialization found by color refinement with individualization, not a
/// lossy hash.
std::string canonical_repr(const NetGraph& fragment);

/// Canonical key plus the fragment rewritten with canonical net/cell names
/// (nets n0..nk in canonical order, cells g0..gm in serialization order).
std::pair<std::string, NetGraph> canonicalize_fragment(const NetGraph& fragment);

/// Enumerates every connected cell subset satisfying the bounds, counting
/// each occurrence toward its canonical pattern exactly once. The graph must
/// be combinational (run after partition_combinational).
/// Patterns are returned sorted by count desc, then cell count asc, then key.
std::vector<SubcircuitPattern> mine_subcircuits(const NetGraph& g, const MiningBounds& bounds);

/// Picks the top n_ext fusion candidates by occurrence count with ties broken
/// by (smaller cell count, lexicographic key). Only patterns that are
/// meaningful as fused cells compete: at least two cells, and every external
/// input shared by at least two member cells (an input used once would give
/// the fused layout no shared routing over simple abutment).
std::vector<SubcircuitPattern> select_fusion_candidates(
    const std::vector<SubcircuitPattern>& patterns, std::size_t n_ext);

}  // namespace orthrus
