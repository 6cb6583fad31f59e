#include "quadpreper/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "quadpreper/dynatomic.hpp"

namespace quadpreper {

std::string PointType::str() const {
    return std::to_string(period) + "_" + std::to_string(preperiod);
}

int PreperGraph::add_vertex(std::string label) {
    succ_.push_back(-1);
    labels_.push_back(std::move(label));
    return size() - 1;
}

void PreperGraph::set_successor(int v, int w) {
    if (v < 0 || v >= size() || w < 0 || w >= size())
        throw ConsistencyError("successor index out of range");
    succ_[v] = w;
}

void PreperGraph::validate() const {
    for (int v = 0; v < size(); ++v)
        if (succ_[v] < 0) throw ConsistencyError("vertex without successor");
}

std::vector<int> PreperGraph::in_degrees() const {
    std::vector<int> deg(size(), 0);
    for (int v = 0; v < size(); ++v) ++deg[succ_[v]];
    return deg;
}

PointType PreperGraph::vertex_type(int v) const {
    // walk until the path revisits: tortoise-free, graphs are tiny
    std::vector<int> seen_at(size(), -1);
    int cur = v, step = 0;
    while (seen_at[cur] < 0) {
        seen_at[cur] = step++;
        cur = succ_[cur];
    }
    int n = seen_at[cur];           // preperiod of v
    int m = step - seen_at[cur];    // cycle length
    return PointType{m, n};
}

std::string PreperGraph::dot() const {
    validate();
    std::ostringstream os;
    os << "digraph preper {\n";
    for (int v = 0; v < size(); ++v) {
        PointType t = vertex_type(v);
        std::string name = labels_[v].empty() ? "v" + std::to_string(v) : labels_[v];
        os << "  n" << v << " [label=\"" << name << "\\n" << t.str() << "\"];\n";
    }
    for (int v = 0; v < size(); ++v) os << "  n" << v << " -> n" << succ_[v] << ";\n";
    os << "}\n";
    return os.str();
}

std::string CycleStructure::str() const {
    std::string s = "(";
    for (size_t i = lengths.size(); i-- > 0;) {
        s += std::to_string(lengths[i]);
        if (i > 0) s += ",";
    }
    return s + ")";
}

std::vector<std::vector<int>> find_cycles(const PreperGraph& g) {
    g.validate();
    std::vector<int> state(g.size(), 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<std::vector<int>> cycles;
    for (int start = 0; start < g.size(); ++start) {
        if (state[start] != 0) continue;
        std::vector<int> path;
        int cur = start;
        while (state[cur] == 0) {
            state[cur] = 1;
            path.push_back(cur);
            cur = g.successor(cur);
        }
        if (state[cur] == 1) {
            // found a new cycle: the tail of path from cur
            auto it = std::find(path.begin(), path.end(), cur);
            cycles.emplace_back(it, path.end());
        }
        for (int v : path) state[v] = 2;
    }
    return cycles;
}

CycleStructure cycle_structure(const PreperGraph& g) {
    CycleStructure cs;
    for (const auto& c : find_cycles(g)) cs.lengths.push_back(static_cast<int>(c.size()));
    std::sort(cs.lengths.begin(), cs.lengths.end());
    return cs;
}

// ---- canonical form ---------------------------------------------------------

namespace {

// AHU-style encoding of the tree hanging off `root` through in-edges,
// excluding the in-cycle predecessor
std::string tree_code(const PreperGraph& g, const std::vector<std::vector<int>>& preimages,
                      const std::vector<bool>& on_cycle, int root) {
    std::vector<std::string> kids;
    for (int u : preimages[root])
        if (!on_cycle[u]) kids.push_back(tree_code(g, preimages, on_cycle, u));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
}

std::vector<std::string> min_rotation(std::vector<std::string> v) {
    std::vector<std::string> best = v;
    for (size_t r = 1; r < v.size(); ++r) {
        std::rotate(v.begin(), v.begin() + 1, v.end());
        if (v < best) best = v;
    }
    return best;
}

}  // namespace

std::string canonical_form(const PreperGraph& g) {
    if (g.size() == 0) return "empty";
    g.validate();
    std::vector<std::vector<int>> preimages(g.size());
    for (int v = 0; v < g.size(); ++v) preimages[g.successor(v)].push_back(v);
    std::vector<bool> on_cycle(g.size(), false);
    auto cycles = find_cycles(g);
    for (const auto& c : cycles)
        for (int v : c) on_cycle[v] = true;

    std::vector<std::string> comps;
    for (const auto& c : cycles) {
        std::vector<std::string> codes;
        codes.reserve(c.size());
        for (int v : c) codes.push_back(tree_code(g, preimages, on_cycle, v));
        codes = min_rotation(std::move(codes));
        std::string s = std::to_string(c.size()) + "[";
        for (size_t i = 0; i < codes.size(); ++i) {
            if (i) s += "|";
            s += codes[i];
        }
        comps.push_back(s + "]");
    }
    std::sort(comps.begin(), comps.end());
    std::string out;
    for (size_t i = 0; i < comps.size(); ++i) {
        if (i) out += ";";
        out += comps[i];
    }
    return out;
}

// ---- admissibility ------------------------------------------------------------

bool is_admissible(const PreperGraph& g) {
    g.validate();
    for (int d : g.in_degrees())
        if (d != 0 && d != 2) return false;
    std::map<int, int> count;
    for (const auto& c : find_cycles(g)) ++count[static_cast<int>(c.size())];
    for (const auto& [len, cnt] : count) {
        if (len < 2) continue;
        auto [d, r] = dnrn(len);
        if (cnt > r) return false;
    }
    return true;
}

bool is_strongly_admissible(const PreperGraph& g) {
    if (!is_admissible(g)) return false;
    int fixed = 0;
    for (const auto& c : find_cycles(g))
        if (c.size() == 1) ++fixed;
    return fixed == 0 || fixed == 2;
}

// ---- admissible closure --------------------------------------------------------

PreperGraph admissible_closure(const GeneratorSpec& spec) {
    // r(N) caps on the implied cycles
    std::map<int, int> cycles_needed;
    for (const auto& t : spec.generators) {
        if (t.period < 1 || t.preperiod < 0)
            throw ConsistencyError("malformed generator type");
        ++cycles_needed[t.period];
    }
    if (spec.share_cycles) {
        // same-period preperiodic generators share one cycle
        for (auto& [m, c] : cycles_needed) c = 1;
    }
    for (const auto& [m, c] : cycles_needed) {
        auto [d, r] = dnrn(m);
        if (c > r)
            throw ConsistencyError("generator spec exceeds the r(N) cycle cap for N = " +
                                   std::to_string(m));
    }

    PreperGraph g;
    // lay down cycles and tails
    struct CycleSlot {
        std::vector<int> vertices;
        size_t next_attach = 0;
    };
    std::map<int, std::vector<CycleSlot>> cycles_by_len;  // period -> cycles
    for (const auto& t : spec.generators) {
        CycleSlot* cycle = nullptr;
        if (spec.share_cycles && !cycles_by_len[t.period].empty()) {
            cycle = &cycles_by_len[t.period].front();
        } else {
            CycleSlot fresh;
            for (int i = 0; i < t.period; ++i) fresh.vertices.push_back(g.add_vertex());
            for (int i = 0; i < t.period; ++i)
                g.set_successor(fresh.vertices[i], fresh.vertices[(i + 1) % t.period]);
            cycles_by_len[t.period].push_back(std::move(fresh));
            cycle = &cycles_by_len[t.period].back();
        }
        if (t.preperiod > 0) {
            // tail of length n walking into the cycle
            size_t slot = cycle->next_attach++;
            if (slot >= cycle->vertices.size())
                throw ConsistencyError("too many tails attached to one cycle");
            int prev = cycle->vertices[slot];
            for (int i = 0; i < t.preperiod; ++i) {
                int v = g.add_vertex();
                g.set_successor(v, prev);
                prev = v;
            }
        }
    }
    // repeatedly give every in-degree-1 vertex a fresh in-degree-0 sibling
    bool changed = true;
    while (changed) {
        changed = false;
        auto deg = g.in_degrees();
        for (int v = 0; v < g.size(); ++v) {
            if (deg[v] == 1) {
                int s = g.add_vertex();
                g.set_successor(s, v);
                changed = true;
                break;  // degrees changed, recompute
            }
            if (deg[v] > 2) throw ConsistencyError("closure produced in-degree > 2");
        }
    }
    if (!is_admissible(g)) throw ConsistencyError("closure output not admissible");
    return g;
}

// ---- subgraph containment ------------------------------------------------------

namespace {

struct Embedder {
    const PreperGraph& g;
    const PreperGraph& h;
    std::vector<std::vector<int>> g_pre, h_pre;
    std::vector<bool> g_cyc, h_cyc;
    std::vector<int> used;  // g-vertex -> h-vertex or -1

    // try to embed the h-tree above hv into the g-tree above gv (hv already
    // mapped to gv); trees here exclude cycle vertices
    bool embed_tree(int hv, int gv) {
        std::vector<int> hk, gk;
        for (int u : h_pre[hv])
            if (!h_cyc[u]) hk.push_back(u);
        for (int u : g_pre[gv])
            if (!g_cyc[u]) gk.push_back(u);
        if (hk.empty()) return true;
        if (hk.size() > gk.size()) return false;
        // at most 2 children each side: try all injections
        std::sort(gk.begin(), gk.end());
        std::vector<int> idx(gk.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        do {
            bool ok = true;
            for (size_t i = 0; i < hk.size() && ok; ++i)
                ok = embed_tree(hk[i], gk[idx[i]]);
            if (ok) return true;
        } while (std::next_permutation(idx.begin(), idx.end()));
        return false;
    }
};

}  // namespace

bool subgraph_contains(const PreperGraph& g, const PreperGraph& h, bool proper) {
    if (h.size() > g.size()) return false;
    if (proper && h.size() == g.size()) {
        // same size: proper containment impossible unless non-isomorphic fails anyway
        return false;
    }
    if (h.size() == 0) return g.size() > 0 || !proper;

    auto g_cycles = find_cycles(g);
    auto h_cycles = find_cycles(h);

    Embedder e{g, h, {}, {}, {}, {}, {}};
    e.g_pre.assign(g.size(), {});
    for (int v = 0; v < g.size(); ++v) e.g_pre[g.successor(v)].push_back(v);
    e.h_pre.assign(h.size(), {});
    for (int v = 0; v < h.size(); ++v) e.h_pre[h.successor(v)].push_back(v);
    e.g_cyc.assign(g.size(), false);
    for (const auto& c : g_cycles)
        for (int v : c) e.g_cyc[v] = true;
    e.h_cyc.assign(h.size(), false);
    for (const auto& c : h_cycles)
        for (int v : c) e.h_cyc[v] = true;

    // match h-cycles to distinct g-cycles of equal length, over all
    // assignments and rotations
    std::vector<int> assignment(h_cycles.size(), -1);
    std::vector<bool> taken(g_cycles.size(), false);

    std::function<bool(size_t)> place = [&](size_t i) -> bool {
        if (i == h_cycles.size()) return true;
        const auto& hc = h_cycles[i];
        for (size_t j = 0; j < g_cycles.size(); ++j) {
            if (taken[j] || g_cycles[j].size() != hc.size()) continue;
            const auto& gc = g_cycles[j];
            for (size_t rot = 0; rot < gc.size(); ++rot) {
                bool ok = true;
                for (size_t k = 0; k < hc.size() && ok; ++k)
                    ok = e.embed_tree(hc[k], gc[(rot + k) % gc.size()]);
                if (ok) {
                    taken[j] = true;
                    if (place(i + 1)) return true;
                    taken[j] = false;
                }
            }
        }
        return false;
    };
    return place(0);
}

// ---- frozen screen shapes ------------------------------------------------------

namespace {

// small builder: mk(cycle_len) then attach pairs
struct ShapeBuilder {
    PreperGraph g;
    std::vector<int> cycle(int m) {
        std::vector<int> c;
        for (int i = 0; i < m; ++i) c.push_back(g.add_vertex());
        for (int i = 0; i < m; ++i) g.set_successor(c[i], c[(i + 1) % m]);
        return c;
    }
    // attach a single leaf edge u -> v, returning u
    int leaf(int v) {
        int u = g.add_vertex();
        g.set_successor(u, v);
        return u;
    }
    // attach a preimage pair to v, returning the two fresh vertices
    std::pair<int, int> pair(int v) { return {leaf(v), leaf(v)}; }
};

}  // namespace

// ten-vertex (1,1) graph with components of sizes 2 and 8, the 8-side a
// depth-4 chain
PreperGraph shape_10_11b() {
    ShapeBuilder b;
    auto f1 = b.cycle(1);
    b.leaf(f1[0]);
    auto f2 = b.cycle(1);
    int a = b.leaf(f2[0]);
    auto [c1, c2] = b.pair(a);
    auto [d1, d2] = b.pair(c1);
    b.pair(d1);
    (void)c2;
    (void)d2;
    return b.g;
}

// ten-vertex (2) graph: depth-4 chain on one side of the 2-cycle
PreperGraph shape_10_2() {
    ShapeBuilder b;
    auto c = b.cycle(2);
    int a1 = b.leaf(c[0]);
    b.leaf(c[1]);
    auto [x1, x2] = b.pair(a1);
    auto [y1, y2] = b.pair(x1);
    b.pair(y1);
    (void)x2;
    (void)y2;
    return b.g;
}

// ten-vertex (3) graphs, lettered in discovery order: (a) a depth-3 chain
// under one cycle-leaf, (b) pairs under two distinct cycle-leaves
PreperGraph shape_10_3a() {
    ShapeBuilder b;
    auto c = b.cycle(3);
    int a1 = b.leaf(c[0]);
    b.leaf(c[1]);
    b.leaf(c[2]);
    auto [x1, x2] = b.pair(a1);
    b.pair(x1);
    (void)x2;
    return b.g;
}

PreperGraph shape_10_3b() {
    ShapeBuilder b;
    auto c = b.cycle(3);
    int a1 = b.leaf(c[0]);
    int a2 = b.leaf(c[1]);
    b.leaf(c[2]);
    b.pair(a1);
    b.pair(a2);
    return b.g;
}

// twelve vertices, cycles (2,1,1): fixed-point components of size 2 and an
// eight-vertex 2-cycle component with pairs on both sides
PreperGraph shape_12_211b() {
    ShapeBuilder b;
    auto f1 = b.cycle(1);
    b.leaf(f1[0]);
    auto f2 = b.cycle(1);
    b.leaf(f2[0]);
    auto c = b.cycle(2);
    int a1 = b.leaf(c[0]);
    int a2 = b.leaf(c[1]);
    b.pair(a1);
    b.pair(a2);
    return b.g;
}

// twelve vertices, cycle (4), with depth-2 pairs over opposite cycle slots
// (the Galois-forced arrangement)
PreperGraph shape_12_4() {
    ShapeBuilder b;
    auto c = b.cycle(4);
    int a0 = b.leaf(c[0]);
    b.leaf(c[1]);
    int a2 = b.leaf(c[2]);
    b.leaf(c[3]);
    b.pair(a0);
    b.pair(a2);
    return b.g;
}

PreperGraph shape_12_42() {
    ShapeBuilder b;
    auto c4 = b.cycle(4);
    for (int v : c4) b.leaf(v);
    auto c2 = b.cycle(2);
    b.leaf(c2[0]);
    b.leaf(c2[1]);
    return b.g;
}

PreperGraph shape_G0() {
    return admissible_closure({{PointType{1, 0}, PointType{1, 0}, PointType{4, 0}}});
}

PreperGraph shape_G1() {
    return admissible_closure({{PointType{1, 3}, PointType{1, 2}}});
}

// ten vertices, cycle (2): pairs on both sides, one of them extended one level
PreperGraph shape_G2() {
    ShapeBuilder b;
    auto c = b.cycle(2);
    int a1 = b.leaf(c[0]);
    int a2 = b.leaf(c[1]);
    auto [x1, x2] = b.pair(a1);
    b.pair(a2);
    b.pair(x1);
    (void)x2;
    return b.g;
}

// ten vertices, cycle (2): full binary growth above one side
PreperGraph shape_G3() {
    ShapeBuilder b;
    auto c = b.cycle(2);
    int a1 = b.leaf(c[0]);
    b.leaf(c[1]);
    auto [x1, x2] = b.pair(a1);
    b.pair(x1);
    b.pair(x2);
    return b.g;
}

PreperGraph shape_G4() {
    return admissible_closure({{PointType{1, 0}, PointType{1, 0}, PointType{2, 3}}});
}

}  // namespace quadpreper
