#pragma once

#include <string>

#include "orthrus/netlist.hpp"

namespace orthrus {

enum class CtType { WT, DT };       // Wallace / Dadda compressor tree
enum class CpaType { SK, KS, BK };  // Sklansky / Kogge-Stone / Brent-Kung adder

const char* to_string(CtType t);
const char* to_string(CpaType t);
CtType ct_type_from_string(const std::string& s);
CpaType cpa_type_from_string(const std::string& s);

/// Builds a rows x cols systolic array of width-bit MAC units interconnected
/// via pipeline registers. Each unit multiplies its operands (partial-product
/// AND grid, selected compressor tree, selected carry-propagate adder) and
/// accumulates modulo 2^(2*width) into a register bank. Built exclusively
/// from the adopted basic cells plus registers; full adders appear as
/// XOR/XOR/MAJ triples and half adders as XOR/AND pairs so that subcircuit
/// mining can rediscover them. Deterministic for fixed arguments.
///
/// Primary inputs: a<r>_<bit> per row, b<c>_<bit> per column.
/// Primary outputs: out<r>_<c>_<bit>, the accumulator state of each unit.
NetGraph generate_mac_array(CtType ct, CpaType cpa, int rows, int cols, int width);

}  // namespace orthrus
