#include "orthrus/macgen.hpp"

#include <algorithm>
#include <vector>

#include "orthrus/errors.hpp"

namespace orthrus {

const char* to_string(CtType t) { return t == CtType::WT ? "wt" : "dt"; }
const char* to_string(CpaType t) {
    switch (t) {
        case CpaType::SK: return "sk";
        case CpaType::KS: return "ks";
        case CpaType::BK: return "bk";
    }
    return "sk";
}

CtType ct_type_from_string(const std::string& s) {
    if (s == "wt" || s == "WT") return CtType::WT;
    if (s == "dt" || s == "DT") return CtType::DT;
    throw InvalidInputError("unknown compressor tree type '" + s + "' (expected wt or dt)");
}

CpaType cpa_type_from_string(const std::string& s) {
    if (s == "sk" || s == "SK") return CpaType::SK;
    if (s == "ks" || s == "KS") return CpaType::KS;
    if (s == "bk" || s == "BK") return CpaType::BK;
    throw InvalidInputError("unknown carry-propagate adder type '" + s +
                            "' (expected sk, ks or bk)");
}

namespace {

// Generate/propagate pair of a prefix-adder group. g < 0 encodes a group whose
// generate is structurally zero (absorbed constant), e.g. a bit position with
// a single operand.
struct PrefixSignal {
    int g = -1;
    int p = -1;
    int span = 0;  // number of低 bits covered; span == pos+1 means complete
};

class UnitBuilder {
public:
    UnitBuilder(NetGraphBuilder& b, std::string prefix) : b_(b), prefix_(std::move(prefix)) {}

    int net(const std::string& name) {
        return b_.add_net(prefix_ + name, NetKind::Internal);
    }

    int cell1(const std::string& name, const std::string& type, int a, int y) {
        b_.add_cell(prefix_ + name, type, {{"A", a}, {"Y", y}});
        return y;
    }
    int cell2(const std::string& name, const std::string& type, int a, int bnet, int y) {
        b_.add_cell(prefix_ + name, type, {{"A", a}, {"B", bnet}, {"Y", y}});
        return y;
    }
    int cell3(const std::string& name, const std::string& type, int a, int bnet, int c, int y) {
        b_.add_cell(prefix_ + name, type, {{"A", a}, {"B", bnet}, {"C", c}, {"Y", y}});
        return y;
    }

    // sum = a ^ b, carry = a & b
    std::pair<int, int> half_adder(const std::string& name, int a, int bnet) {
        const int sum = net(name + "_s");
        const int carry = net(name + "_c");
        cell2(name + "_sx", "XOR2x2", a, bnet, sum);
        cell2(name + "_ca", "AND2x2", a, bnet, carry);
        return {sum, carry};
    }

    // sum = a ^ b ^ c via two XORs, carry = MAJ(a, b, c)
    std::pair<int, int> full_adder(const std::string& name, int a, int bnet, int c) {
        const int t = net(name + "_t");
        const int sum = net(name + "_s");
        const int carry = net(name + "_c");
        cell2(name + "_x0", "XOR2x2", a, bnet, t);
        cell2(name + "_x1", "XOR2x2", t, c, sum);
        cell3(name + "_mj", "MAJx1", a, bnet, c, carry);
        return {sum, carry};
    }

    // Combines a higher prefix group with the adjacent lower one:
    // G = g_hi | (p_hi & g_lo), P = p_hi & p_lo (built only while incomplete).
    PrefixSignal combine(const std::string& name, const PrefixSignal& hi,
                         const PrefixSignal& lo, int pos) {
        PrefixSignal out;
        out.span = hi.span + lo.span;
        if (lo.g < 0) {
            out.g = hi.g;
        } else if (hi.g < 0) {
            out.g = cell2(name + "_ga", "AND2x2", hi.p, lo.g, net(name + "_g"));
        } else {
            out.g = cell3(name + "_go", "AO21x1", hi.p, lo.g, hi.g, net(name + "_g"));
        }
        const bool complete = out.span >= pos + 1;
        if (!complete) {
            out.p = cell2(name + "_pa", "AND2x2", hi.p, lo.p, net(name + "_p"));
        }
        return out;
    }

    NetGraphBuilder& b_;
    std::string prefix_;
};

// Carry-propagate addition of two bit vectors given as net ids (-1 = no bit).
// Returns width sum bits plus the final carry appended when it exists
// structurally (caller decides whether to keep it).
std::vector<int> prefix_add(UnitBuilder& u, CpaType cpa, const std::string& name,
                            const std::vector<int>& x, const std::vector<int>& y,
                            bool keep_carry_out) {
    const int w = static_cast<int>(std::max(x.size(), y.size()));
    auto bit = [](const std::vector<int>& v, int i) {
        return i < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(i)] : -1;
    };

    std::vector<PrefixSignal> sig(static_cast<std::size_t>(w));
    std::vector<int> p_leaf(static_cast<std::size_t>(w), -1);
    for (int i = 0; i < w; ++i) {
        const int xi = bit(x, i), yi = bit(y, i);
        auto& s = sig[static_cast<std::size_t>(i)];
        s.span = 1;
        const std::string bn = name + "_b" + std::to_string(i);
        if (xi >= 0 && yi >= 0) {
            s.p = u.cell2(bn + "_px", "XOR2x2", xi, yi, u.net(bn + "_p"));
            s.g = u.cell2(bn + "_ga", "AND2x2", xi, yi, u.net(bn + "_g"));
        } else if (xi >= 0 || yi >= 0) {
            s.p = xi >= 0 ? xi : yi;  // propagate is the lone bit, generate is 0
            s.g = -1;
        } else {
            throw InvalidInputError("prefix_add: empty bit column");
        }
        p_leaf[static_cast<std::size_t>(i)] = s.p;
    }

    auto node_name = [&](int level, int i) {
        return name + "_n" + std::to_string(level) + "_" + std::to_string(i);
    };

    if (cpa == CpaType::KS) {
        int level = 0;
        for (int d = 1; d < w; d <<= 1, ++level) {
            std::vector<PrefixSignal> next = sig;
            for (int i = w - 1; i >= d; --i) {
                auto& s = sig[static_cast<std::size_t>(i)];
                if (s.span >= i + 1) continue;
                next[static_cast<std::size_t>(i)] =
                    u.combine(node_name(level, i), s, sig[static_cast<std::size_t>(i - d)], i);
            }
            sig = std::move(next);
        }
    } else if (cpa == CpaType::SK) {
        int level = 0;
        for (int blk = 1; blk < w; blk <<= 1, ++level) {
            for (int i = 0; i < w; ++i) {
                if ((i & blk) == 0) continue;
                const int j = (i & ~(blk - 1)) - 1;
                auto& s = sig[static_cast<std::size_t>(i)];
                if (s.span >= i + 1) continue;
                s = u.combine(node_name(level, i), s, sig[static_cast<std::size_t>(j)], i);
            }
        }
    } else {  // Brent-Kung
        int level = 0;
        for (int d = 1; d < w; d <<= 1, ++level) {
            for (int i = 2 * d - 1; i < w; i += 2 * d) {
                auto& s = sig[static_cast<std::size_t>(i)];
                if (s.span >= i + 1) continue;
                s = u.combine(node_name(level, i), s, sig[static_cast<std::size_t>(i - d)], i);
            }
        }
        int d0 = 1;
        while (2 * d0 < w) d0 <<= 1;
        for (int d = d0 / 2; d >= 1; d /= 2, ++level) {
            for (int i = 3 * d - 1; i < w; i += 2 * d) {
                auto& s = sig[static_cast<std::size_t>(i)];
                if (s.span >= i + 1) continue;
                s = u.combine(node_name(level, i), s, sig[static_cast<std::size_t>(i - d)], i);
            }
        }
    }

    // sum_i = p_i ^ carry_{i-1}; carry_{i-1} is the complete group G[i-1:0].
    std::vector<int> sums;
    sums.reserve(static_cast<std::size_t>(w) + 1);
    for (int i = 0; i < w; ++i) {
        const int carry_in = i == 0 ? -1 : sig[static_cast<std::size_t>(i - 1)].g;
        const int pi = p_leaf[static_cast<std::size_t>(i)];
        if (carry_in < 0) {
            sums.push_back(pi);
        } else {
            const std::string bn = name + "_s" + std::to_string(i);
            sums.push_back(u.cell2(bn + "_x", "XOR2x2", pi, carry_in, u.net(bn)));
        }
    }
    if (keep_carry_out) {
        const int cout = sig[static_cast<std::size_t>(w - 1)].g;
        if (cout >= 0) sums.push_back(cout);
    }
    return sums;
}

// Reduces partial-product columns to height <= 2. Wallace compresses every
// column as aggressively as possible each stage; Dadda only reduces down to
// the next element of the 2,3,4,6,9,... target chain.
std::vector<std::vector<int>> reduce_columns(UnitBuilder& u, CtType ct,
                                             std::vector<std::vector<int>> cols) {
    auto max_height = [&]() {
        std::size_t h = 0;
        for (const auto& c : cols) h = std::max(h, c.size());
        return h;
    };

    int stage = 0;
    while (max_height() > 2) {
        const std::size_t ncols = cols.size();
        std::vector<std::vector<int>> next(ncols + 1);
        std::size_t target = 2;
        if (ct == CtType::DT) {
            std::size_t t = 2;
            while (static_cast<std::size_t>(t * 3 / 2) < max_height()) t = t * 3 / 2;
            target = t;
        }
        int k = 0;
        for (std::size_t c = 0; c < ncols; ++c) {
            // Dadda lets same-stage carries from column c-1 count toward the
            // target; Wallace compresses each column independently per stage.
            std::vector<int>& work = cols[c];
            if (ct == CtType::DT) {
                work.insert(work.begin(), next[c].begin(), next[c].end());
                next[c].clear();
            }
            std::vector<int> out;
            if (ct == CtType::WT) {
                std::size_t i = 0;
                while (work.size() - i >= 3) {
                    const auto nm = "t" + std::to_string(stage) + "_fa" + std::to_string(k++);
                    auto [s, cy] = u.full_adder(nm, work[i], work[i + 1], work[i + 2]);
                    out.push_back(s);
                    next[c + 1].push_back(cy);
                    i += 3;
                }
                if (work.size() - i == 2) {
                    const auto nm = "t" + std::to_string(stage) + "_ha" + std::to_string(k++);
                    auto [s, cy] = u.half_adder(nm, work[i], work[i + 1]);
                    out.push_back(s);
                    next[c + 1].push_back(cy);
                    i += 2;
                }
                for (; i < work.size(); ++i) out.push_back(work[i]);
            } else {
                std::size_t remaining = work.size();
                std::size_t i = 0;
                while (remaining > target) {
                    if (remaining == target + 1) {
                        const auto nm =
                            "t" + std::to_string(stage) + "_ha" + std::to_string(k++);
                        auto [s, cy] = u.half_adder(nm, work[i], work[i + 1]);
                        out.push_back(s);
                        next[c + 1].push_back(cy);
                        i += 2;
                        remaining -= 1;
                    } else {
                        const auto nm =
                            "t" + std::to_string(stage) + "_fa" + std::to_string(k++);
                        auto [s, cy] = u.full_adder(nm, work[i], work[i + 1], work[i + 2]);
                        out.push_back(s);
                        next[c + 1].push_back(cy);
                        i += 3;
                        remaining -= 2;
                    }
                }
                for (; i < work.size(); ++i) out.push_back(work[i]);
            }
            next[c].insert(next[c].begin(), out.begin(), out.end());
        }
        while (!next.empty() && next.back().empty()) next.pop_back();
        cols = std::move(next);
        ++stage;
    }
    return cols;
}

// One MAC unit: product = a*b via PP grid + tree + CPA, then acc' = acc +
// product modulo 2^(2w) through a second CPA into the accumulator registers.
void build_mac_unit(NetGraphBuilder& b, const std::string& prefix, CtType ct, CpaType cpa,
                    int width, const std::vector<int>& a_bits, const std::vector<int>& b_bits,
                    const std::vector<int>& acc_q) {
    UnitBuilder u(b, prefix);
    const int pw = 2 * width;

    std::vector<std::vector<int>> cols(static_cast<std::size_t>(pw - 1));
    for (int i = 0; i < width; ++i) {
        for (int j = 0; j < width; ++j) {
            const auto nm = "pp" + std::to_string(i) + "_" + std::to_string(j);
            const int pp = u.cell2(nm, "AND2x2", a_bits[static_cast<std::size_t>(i)],
                                   b_bits[static_cast<std::size_t>(j)], u.net(nm + "_y"));
            cols[static_cast<std::size_t>(i + j)].push_back(pp);
        }
    }

    cols = reduce_columns(u, ct, cols);

    std::vector<int> row_x, row_y;
    for (const auto& col : cols) {
        row_x.push_back(col.empty() ? -1 : col[0]);
        row_y.push_back(col.size() > 1 ? col[1] : -1);
    }
    std::vector<int> product = width == 1 ? row_x
                                          : prefix_add(u, cpa, "cpa", row_x, row_y, true);
    product.resize(static_cast<std::size_t>(pw), -1);

    // Accumulate modulo 2^(2w); the adder carry-out is dropped.
    std::vector<int> acc_d = prefix_add(u, cpa, "acc", product, acc_q, false);

    for (int k = 0; k < pw; ++k) {
        b.add_cell(prefix + "accreg" + std::to_string(k), "DFFx1",
                   {{"D", acc_d[static_cast<std::size_t>(k)]},
                    {"Q", acc_q[static_cast<std::size_t>(k)]}});
    }
}

}  // namespace

NetGraph generate_mac_array(CtType ct, CpaType cpa, int rows, int cols, int width) {
    if (rows < 1 || cols < 1) {
        throw InvalidInputError("generate_mac_array: rows and cols must be >= 1");
    }
    if (width < 2) {
        throw InvalidInputError("generate_mac_array: width must be >= 2");
    }

    NetGraphBuilder b;
    const int pw = 2 * width;

    std::vector<std::vector<int>> a_in(static_cast<std::size_t>(rows));
    std::vector<std::vector<int>> b_in(static_cast<std::size_t>(cols));
    for (int r = 0; r < rows; ++r) {
        for (int k = 0; k < width; ++k) {
            a_in[static_cast<std::size_t>(r)].push_back(
                b.add_net("a" + std::to_string(r) + "_" + std::to_string(k), NetKind::Input));
        }
    }
    for (int c = 0; c < cols; ++c) {
        for (int k = 0; k < width; ++k) {
            b_in[static_cast<std::size_t>(c)].push_back(
                b.add_net("b" + std::to_string(c) + "_" + std::to_string(k), NetKind::Input));
        }
    }

    // Operands flow through pipeline registers: a to the right, b downward.
    std::vector<std::vector<std::vector<int>>> a_net(
        static_cast<std::size_t>(rows), std::vector<std::vector<int>>(static_cast<std::size_t>(cols)));
    std::vector<std::vector<std::vector<int>>> b_net = a_net;

    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const std::string prefix = "u" + std::to_string(r) + "_" + std::to_string(c) + "/";
            const auto& a_here = c == 0 ? a_in[static_cast<std::size_t>(r)]
                                        : a_net[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            const auto& b_here = r == 0 ? b_in[static_cast<std::size_t>(c)]
                                        : b_net[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];

            std::vector<int> acc_q;
            for (int k = 0; k < pw; ++k) {
                acc_q.push_back(b.add_net("out" + std::to_string(r) + "_" + std::to_string(c) +
                                              "_" + std::to_string(k),
                                          NetKind::Output));
            }
            build_mac_unit(b, prefix, ct, cpa, width, a_here, b_here, acc_q);

            if (c + 1 < cols) {
                auto& dst = a_net[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)];
                for (int k = 0; k < width; ++k) {
                    const int q = b.add_net(prefix + "apipe" + std::to_string(k) + "_q",
                                            NetKind::Internal);
                    b.add_cell(prefix + "apipe" + std::to_string(k), "DFFx1",
                               {{"D", a_here[static_cast<std::size_t>(k)]}, {"Q", q}});
                    dst.push_back(q);
                }
            }
            if (r + 1 < rows) {
                auto& dst = b_net[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(c)];
                for (int k = 0; k < width; ++k) {
                    const int q = b.add_net(prefix + "bpipe" + std::to_string(k) + "_q",
                                            NetKind::Internal);
                    b.add_cell(prefix + "bpipe" + std::to_string(k), "DFFx1",
                               {{"D", b_here[static_cast<std::size_t>(k)]}, {"Q", q}});
                    dst.push_back(q);
                }
            }
        }
    }
    return std::move(b).build();
}

}  // namespace orthrus
