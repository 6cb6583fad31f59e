#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadpreper/qfield.hpp"

namespace quadpreper {

// Preperiodic type m_n: eventual period m >= 1, preperiod n >= 0.
struct PointType {
    int period = 1;
    int preperiod = 0;
    bool periodic() const { return preperiod == 0; }
    bool operator==(const PointType&) const = default;
    std::string str() const;  // "m_n"
};

// Finite functional digraph: every vertex has out-degree exactly 1.
// Vertices are dense indices; an optional text label per vertex carries the
// element it came from (used by DOT export only).
class PreperGraph {
public:
    PreperGraph() = default;

    int add_vertex(std::string label = {});
    void set_successor(int v, int w);
    int size() const { return static_cast<int>(succ_.size()); }
    int successor(int v) const { return succ_.at(v); }
    const std::string& label(int v) const { return labels_.at(v); }
    void set_label(int v, std::string s) { labels_.at(v) = std::move(s); }

    // throws ConsistencyError when some vertex has no successor assigned
    void validate() const;

    std::vector<int> in_degrees() const;
    // structural type of a vertex: distance to its cycle and that cycle's length
    PointType vertex_type(int v) const;

    std::string dot() const;

private:
    std::vector<int> succ_;  // -1 until assigned
    std::vector<std::string> labels_;
};

// Nondecreasing list of cycle lengths.
struct CycleStructure {
    std::vector<int> lengths;
    bool operator==(const CycleStructure&) const = default;
    std::string str() const;  // "(2,1,1)" style, nonincreasing display order
};

// canonical encoding: equal strings iff isomorphic as directed graphs
std::string canonical_form(const PreperGraph& g);

CycleStructure cycle_structure(const PreperGraph& g);

// all disjoint cycles, each listed in successor order
std::vector<std::vector<int>> find_cycles(const PreperGraph& g);

// in-degrees in {0,2} and at most r(N) N-cycles for each N >= 2
bool is_admissible(const PreperGraph& g);
// admissible and fixed-point count in {0, 2}
bool is_strongly_admissible(const PreperGraph& g);

// Generating vertex descriptions for admissible closures.  Generators sit in
// pairwise distinct cycles unless `share_cycles` asks same-period preperiodic
// generators to attach to one shared cycle.
struct GeneratorSpec {
    std::vector<PointType> generators;
    bool share_cycles = false;
};

// Minimal admissible graph containing typed generator vertices: forward
// orbits laid down first, then every in-degree-1 vertex receives a fresh
// in-degree-0 sibling.
PreperGraph admissible_closure(const GeneratorSpec& spec);

// injective successor-commuting map H -> G; with proper set, also |H| < |G|
bool subgraph_contains(const PreperGraph& g, const PreperGraph& h, bool proper);

// ---- named abstract shapes used by the main-theorem screen -----------------

// Shapes pinned by representative-pair computation plus abstract closure
// reconstruction; see tests for the exhaustive-enumeration cross-checks.
PreperGraph shape_10_11b();
PreperGraph shape_10_2();
PreperGraph shape_10_3a();
PreperGraph shape_10_3b();
PreperGraph shape_12_211b();
PreperGraph shape_12_4();
PreperGraph shape_12_42();
PreperGraph shape_G0();
PreperGraph shape_G1();
PreperGraph shape_G2();
PreperGraph shape_G3();
PreperGraph shape_G4();

}  // namespace quadpreper
