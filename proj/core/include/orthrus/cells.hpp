#pragma once

#include <span>
#include <string>
#include <vector>

namespace orthrus {

/// Boolean function of a basic combinational cell.
enum class BasicFn {
    And,
    Nand,
    Or,
    Nor,
    Xor,
    Xnor,
    Inv,
    Buf,
    Maj,
    Aoi21,  // !(A&B | C)
    Ao21,   // A&B | C
    Ao22,   // A&B | C&D
    Oa21,   // (A|B) & C
    Oa22,   // (A|B) & (C|D)
    Dff,
};

struct CellTypeInfo {
    std::string name;
    BasicFn fn;
    std::vector<std::string> input_pins;
    std::vector<std::string> output_pins;
    bool is_register = false;
};

/// Registry of the adopted basic cells (drive variants share a function) plus
/// the pipeline register. Returns nullptr for unknown (e.g. fused) types.
const CellTypeInfo* find_basic_cell(const std::string& type);

const std::vector<CellTypeInfo>& basic_cells();

/// Evaluates a basic combinational function. Input order follows input_pins.
bool eval_basic_fn(BasicFn fn, std::span<const bool> inputs);

}  // namespace orthrus
