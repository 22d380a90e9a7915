#include "orthrus/cells.hpp"

#include <unordered_map>

#include "orthrus/errors.hpp"

namespace orthrus {

namespace {

std::vector<CellTypeInfo> make_basic_cells() {
    const std::vector<std::string> ab = {"A", "B"};
    const std::vector<std::string> abc = {"A", "B", "C"};
    const std::vector<std::string> abcd = {"A", "B", "C", "D"};
    const std::vector<std::string> a = {"A"};
    const std::vector<std::string> y = {"Y"};

    std::vector<CellTypeInfo> cells;
    auto add = [&](std::string name, BasicFn fn, std::vector<std::string> in) {
        cells.push_back(CellTypeInfo{std::move(name), fn, std::move(in), y, false});
    };
    add("AND2x2", BasicFn::And, ab);
    add("AND2x4", BasicFn::And, ab);
    add("AND3x1", BasicFn::And, abc);
    add("NAND2x1", BasicFn::Nand, ab);
    add("NAND2x2", BasicFn::Nand, ab);
    add("NAND3x1", BasicFn::Nand, abc);
    add("OR2x2", BasicFn::Or, ab);
    add("OR2x4", BasicFn::Or, ab);
    add("OR3x1", BasicFn::Or, abc);
    add("NOR2x1", BasicFn::Nor, ab);
    add("XNOR2x2", BasicFn::Xnor, ab);
    add("XOR2x2", BasicFn::Xor, ab);
    add("INVx1", BasicFn::Inv, a);
    add("INVx2", BasicFn::Inv, a);
    add("INVx4", BasicFn::Inv, a);
    add("INVx8", BasicFn::Inv, a);
    add("BUFx2", BasicFn::Buf, a);
    add("BUFx4", BasicFn::Buf, a);
    add("BUFx8", BasicFn::Buf, a);
    add("MAJx1", BasicFn::Maj, abc);
    add("MAJx2", BasicFn::Maj, abc);
    add("AOI21x1", BasicFn::Aoi21, abc);
    add("AO21x1", BasicFn::Ao21, abc);
    add("AO22x1", BasicFn::Ao22, abcd);
    add("OA21x1", BasicFn::Oa21, abc);
    add("OA22x1", BasicFn::Oa22, abcd);
    cells.push_back(CellTypeInfo{"DFFx1", BasicFn::Dff, {"D"}, {"Q"}, true});
    return cells;
}

}  // namespace

const std::vector<CellTypeInfo>& basic_cells() {
    static const std::vector<CellTypeInfo> cells = make_basic_cells();
    return cells;
}

const CellTypeInfo* find_basic_cell(const std::string& type) {
    static const std::unordered_map<std::string, const CellTypeInfo*> index = [] {
        std::unordered_map<std::string, const CellTypeInfo*> m;
        for (const auto& c : basic_cells()) m[c.name] = &c;
        return m;
    }();
    auto it = index.find(type);
    return it == index.end() ? nullptr : it->second;
}

bool eval_basic_fn(BasicFn fn, std::span<const bool> in) {
    switch (fn) {
        case BasicFn::And: {
            for (bool v : in)
                if (!v) return false;
            return true;
        }
        case BasicFn::Nand: {
            for (bool v : in)
                if (!v) return true;
            return false;
        }
        case BasicFn::Or: {
            for (bool v : in)
                if (v) return true;
            return false;
        }
        case BasicFn::Nor: {
            for (bool v : in)
                if (v) return false;
            return true;
        }
        case BasicFn::Xor: {
            bool acc = false;
            for (bool v : in) acc ^= v;
            return acc;
        }
        case BasicFn::Xnor: {
            bool acc = true;
            for (bool v : in) acc ^= v;
            return acc;
        }
        case BasicFn::Inv:
            return !in[0];
        case BasicFn::Buf:
            return in[0];
        case BasicFn::Maj:
            return (in[0] && in[1]) || (in[0] && in[2]) || (in[1] && in[2]);
        case BasicFn::Aoi21:
            return !((in[0] && in[1]) || in[2]);
        case BasicFn::Ao21:
            return (in[0] && in[1]) || in[2];
        case BasicFn::Ao22:
            return (in[0] && in[1]) || (in[2] && in[3]);
        case BasicFn::Oa21:
            return (in[0] || in[1]) && in[2];
        case BasicFn::Oa22:
            return (in[0] || in[1]) && (in[2] || in[3]);
        case BasicFn::Dff:
            throw InvalidInputError("eval_basic_fn: registers are not combinational");
    }
    throw InvalidInputError("eval_basic_fn: unknown function");
}

}  // namespace orthrus
