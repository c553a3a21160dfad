#pragma once

#include <string>
#include <vector>

#include "core/metrics.hpp"

namespace ecoclust {

enum class TreeKind { mst, lmst, chain_uni, chain_bi };

struct TreeEdge {
    std::size_t a = 0, b = 0;
    double w = 0;
};

// Unrooted tree over the matrix labels. Chains are trees whose edges form a
// path; `edges` keeps construction order (sorted acceptance order for MST,
// attachment order for the sequential builds).
struct Tree {
    TreeKind kind = TreeKind::mst;
    std::vector<std::string> nodes;
    std::vector<TreeEdge> edges;
};

// Kruskal with union-find. Ties break on (weight, lexicographic sorted label
// pair), which pins the tree whenever weights repeat.
Tree build_mst(const LabeledMatrix& dist);

// Prim variant seeded at the minimum-distance pair; each step attaches the
// unlinked node closest to the tree. Same tie-break as build_mst.
Tree build_lmst(const LabeledMatrix& dist);

// Sequential chains. Unidirectional: grow from `root` (a label, or "min-pair"
// to seed with the closest pair), always appending the nearest unattached
// node to the current tail. Bidirectional: both chain ends compete, the end
// realizing the smaller distance wins.
Tree build_chain(const LabeledMatrix& dist, TreeKind kind, const std::string& root);

// Subdominant ultrametric distance: the maximum edge weight along the unique
// tree path between two nodes.
LabeledMatrix subdominant_ultrametric(const Tree& t);

// Connected components after removing edges heavier than d_star. Components
// are sorted internally and ordered by first member; singletons included.
std::vector<std::vector<std::string>> threshold_clusters(const Tree& t, double d_star);

// Graphviz text: nodes sorted, edges sorted with lexicographic endpoints,
// weights printed with 3 decimals. Byte-stable for a given tree.
std::string export_dot(const Tree& t);

} // namespace ecoclust
