#include "orthrus/sta.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "orthrus/errors.hpp"

namespace orthrus {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Prepared {
    std::vector<int> comb_order;        // topological
    std::vector<double> arc;            // per cell; 0 for registers
    std::vector<char> is_reg;           // per cell
    std::vector<char> is_launch;        // per net
    std::vector<char> is_capture;       // per net
};

Prepared prepare(const NetGraph& g, const CellLibrary& lib) {
    Prepared pre;
    const auto& cells = g.cells();
    const auto& nets = g.nets();
    pre.arc.resize(cells.size(), 0.0);
    pre.is_reg.resize(cells.size(), 0);
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        pre.is_reg[ci] = is_register_type(cells[ci].type) ? 1 : 0;
        pre.arc[ci] = lib.at(cells[ci].type).delay_ns;
    }

    pre.is_launch.resize(nets.size(), 0);
    pre.is_capture.resize(nets.size(), 0);
    for (std::size_t ni = 0; ni < nets.size(); ++ni) {
        const int d = g.driver(static_cast<int>(ni));
        const bool reg_driven = d >= 0 && pre.is_reg[static_cast<std::size_t>(d)];
        if (nets[ni].kind == NetKind::Input || reg_driven) pre.is_launch[ni] = 1;
        if (nets[ni].kind == NetKind::Output) pre.is_capture[ni] = 1;
        for (int c : g.consumers(static_cast<int>(ni))) {
            if (pre.is_reg[static_cast<std::size_t>(c)]) pre.is_capture[ni] = 1;
        }
    }

    // Kahn order over comb->comb dependencies.
    std::vector<int> indegree(cells.size(), 0);
    std::vector<std::vector<int>> succ(cells.size());
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        if (pre.is_reg[ci]) continue;
        for (int n : g.cell_inputs(static_cast<int>(ci))) {
            const int d = g.driver(n);
            if (d >= 0 && !pre.is_reg[static_cast<std::size_t>(d)]) {
                succ[static_cast<std::size_t>(d)].push_back(static_cast<int>(ci));
                ++indegree[ci];
            }
        }
    }
    std::size_t comb_count = 0;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        if (!pre.is_reg[ci]) {
            ++comb_count;
            if (indegree[ci] == 0) pre.comb_order.push_back(static_cast<int>(ci));
        }
    }
    std::size_t head = 0;
    while (head < pre.comb_order.size()) {
        const int c = pre.comb_order[head++];
        for (int s : succ[static_cast<std::size_t>(c)]) {
            if (--indegree[static_cast<std::size_t>(s)] == 0) pre.comb_order.push_back(s);
        }
    }
    if (pre.comb_order.size() != comb_count) {
        throw MalformedNetlistError("static_timing: combinational cycle detected");
    }
    return pre;
}

}  // namespace

StaResult static_timing(const NetGraph& g, const CellLibrary& lib, std::size_t top_k) {
    const Prepared pre = prepare(g, lib);
    const auto& nets = g.nets();
    const auto& cells = g.cells();

    // Forward: worst arrival at each net, 0 at launch points.
    std::vector<double> arrival(nets.size(), kNegInf);
    for (std::size_t ni = 0; ni < nets.size(); ++ni) {
        if (pre.is_launch[ni]) arrival[ni] = 0.0;
    }
    for (int ci : pre.comb_order) {
        double in_arr = kNegInf;
        for (int n : g.cell_inputs(ci)) in_arr = std::max(in_arr, arrival[static_cast<std::size_t>(n)]);
        const double out_arr = in_arr + pre.arc[static_cast<std::size_t>(ci)];
        for (int n : g.cell_outputs(ci)) {
            arrival[static_cast<std::size_t>(n)] = std::max(arrival[static_cast<std::size_t>(n)], out_arr);
        }
    }

    // Backward: longest remaining combinational delay from a net to a capture.
    std::vector<double> downstream(nets.size(), kNegInf);
    for (std::size_t ni = 0; ni < nets.size(); ++ni) {
        if (pre.is_capture[ni]) downstream[ni] = 0.0;
    }
    for (auto it = pre.comb_order.rbegin(); it != pre.comb_order.rend(); ++it) {
        const int ci = *it;
        double out_down = kNegInf;
        for (int n : g.cell_outputs(ci)) {
            out_down = std::max(out_down, downstream[static_cast<std::size_t>(n)]);
        }
        if (out_down == kNegInf) continue;
        const double need = out_down + pre.arc[static_cast<std::size_t>(ci)];
        for (int n : g.cell_inputs(ci)) {
            downstream[static_cast<std::size_t>(n)] = std::max(downstream[static_cast<std::size_t>(n)], need);
        }
    }

    StaResult res;
    res.through_delay.assign(cells.size(), 0.0);
    for (int ci : pre.comb_order) {
        double in_arr = kNegInf;
        for (int n : g.cell_inputs(ci)) in_arr = std::max(in_arr, arrival[static_cast<std::size_t>(n)]);
        double out_down = kNegInf;
        for (int n : g.cell_outputs(ci)) {
            out_down = std::max(out_down, downstream[static_cast<std::size_t>(n)]);
        }
        if (in_arr == kNegInf || out_down == kNegInf) continue;  // no complete path
        res.through_delay[static_cast<std::size_t>(ci)] =
            in_arr + pre.arc[static_cast<std::size_t>(ci)] + out_down;
    }

    for (std::size_t ni = 0; ni < nets.size(); ++ni) {
        if (pre.is_capture[ni] && arrival[ni] != kNegInf) {
            res.critical_delay = std::max(res.critical_delay, arrival[ni]);
        }
    }

    // Best-first enumeration of the top_k worst launch-to-capture paths. A
    // state's bound (delay so far + downstream) is exact, so states pop in
    // non-increasing final-delay order.
    if (top_k > 0) {
        struct State {
            double bound;
            double delay;
            int net;
            int launch;
            std::vector<int> path;
        };
        auto cmp = [](const State& a, const State& b) { return a.bound < b.bound; };
        std::priority_queue<State, std::vector<State>, decltype(cmp)> pq(cmp);
        for (std::size_t ni = 0; ni < nets.size(); ++ni) {
            if (pre.is_launch[ni] && downstream[ni] != kNegInf) {
                pq.push(State{downstream[ni], 0.0, static_cast<int>(ni), static_cast<int>(ni), {}});
            }
        }
        while (!pq.empty() && res.top_paths.size() < top_k) {
            State st = pq.top();
            pq.pop();
            if (pre.is_capture[static_cast<std::size_t>(st.net)] && !st.path.empty()) {
                res.top_paths.push_back(TimingPath{st.launch, st.net, st.path, st.delay});
            }
            for (int c : g.consumers(st.net)) {
                if (pre.is_reg[static_cast<std::size_t>(c)]) continue;
                const double d = st.delay + pre.arc[static_cast<std::size_t>(c)];
                for (int out : g.cell_outputs(c)) {
                    if (downstream[static_cast<std::size_t>(out)] == kNegInf) continue;
                    State next;
                    next.delay = d;
                    next.bound = d + downstream[static_cast<std::size_t>(out)];
                    next.net = out;
                    next.launch = st.launch;
                    next.path = st.path;
                    next.path.push_back(c);
                    pq.push(std::move(next));
                }
            }
        }
    }
    return res;
}

std::vector<NetGraph> partition_combinational(const NetGraph& g) {
    const auto& cells = g.cells();
    const auto& nets = g.nets();

    // Union combinational cells sharing a net.
    std::vector<int> parent(cells.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> rank_(cells.size(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return;
        if (rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        if (rank_[static_cast<std::size_t>(a)] == rank_[static_cast<std::size_t>(b)]) {
            ++rank_[static_cast<std::size_t>(a)];
        }
    };

    auto is_reg = [&](int ci) { return is_register_type(cells[static_cast<std::size_t>(ci)].type); };

    for (std::size_t ni = 0; ni < nets.size(); ++ni) {
        int first = -1;
        const int d = g.driver(static_cast<int>(ni));
        if (d >= 0 && !is_reg(d)) first = d;
        for (int c : g.consumers(static_cast<int>(ni))) {
            if (is_reg(c)) continue;
            if (first < 0) {
                first = c;
            } else {
                unite(first, c);
            }
        }
    }

    // Collect islands in order of their first cell.
    std::vector<int> island_of(cells.size(), -1);
    std::vector<std::vector<int>> islands;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        if (is_reg(static_cast<int>(ci))) continue;
        const int root = find(static_cast<int>(ci));
        if (island_of[static_cast<std::size_t>(root)] < 0) {
            island_of[static_cast<std::size_t>(root)] = static_cast<int>(islands.size());
            islands.emplace_back();
        }
        islands[static_cast<std::size_t>(island_of[static_cast<std::size_t>(root)])].push_back(
            static_cast<int>(ci));
    }

    std::vector<NetGraph> out;
    out.reserve(islands.size());
    for (const auto& island : islands) {
        std::vector<char> in_island(cells.size(), 0);
        for (int ci : island) in_island[static_cast<std::size_t>(ci)] = 1;

        // Nets referenced by the island, in original order.
        std::vector<int> net_ids;
        std::vector<char> seen(nets.size(), 0);
        for (int ci : island) {
            for (const auto& [pin, n] : cells[static_cast<std::size_t>(ci)].pins) {
                if (!seen[static_cast<std::size_t>(n)]) {
                    seen[static_cast<std::size_t>(n)] = 1;
                    net_ids.push_back(n);
                }
            }
        }
        std::sort(net_ids.begin(), net_ids.end());

        NetGraphBuilder b;
        std::vector<int> remap(nets.size(), -1);
        for (int n : net_ids) {
            const int d = g.driver(n);
            const bool driven_inside = d >= 0 && in_island[static_cast<std::size_t>(d)];
            NetKind kind;
            if (!driven_inside) {
                kind = NetKind::Input;  // launch boundary: primary input or register output
            } else {
                bool escapes = nets[static_cast<std::size_t>(n)].kind == NetKind::Output;
                for (int c : g.consumers(n)) {
                    if (!in_island[static_cast<std::size_t>(c)]) escapes = true;
                }
                kind = escapes ? NetKind::Output : NetKind::Internal;
            }
            remap[static_cast<std::size_t>(n)] = b.add_net(nets[static_cast<std::size_t>(n)].name, kind);
        }
        for (int ci : island) {
            const auto& cell = cells[static_cast<std::size_t>(ci)];
            std::vector<std::pair<std::string, int>> pins;
            for (const auto& [pin, n] : cell.pins) {
                pins.emplace_back(pin, remap[static_cast<std::size_t>(n)]);
            }
            b.add_cell(cell.name, cell.type, std::move(pins));
        }
        out.push_back(std::move(b).build());
    }
    return out;
}

}  // namespace orthrus
