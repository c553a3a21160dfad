#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/metrics.hpp"

namespace ecoclust {

// Bipartite graph: indicators are variable nodes, entities are function
// nodes. An entity attaches to an indicator when at least one off-diagonal
// |correlation| in that indicator's matrix reaches the threshold. Entities
// without any attachment are dropped from the graph but reported.
struct FactorGraph {
    double threshold = 0;
    std::vector<std::string> variables; // indicator labels, input order
    std::vector<std::string> entities;  // attached entities, sorted
    std::vector<std::uint32_t> edges;   // per entity, bit v set = attached to variables[v]
    std::vector<std::string> excluded;  // sorted

    std::size_t degree(std::size_t entity) const;
};

FactorGraph build_factor_graph(const std::vector<std::string>& indicator_labels,
                               const std::vector<LabeledMatrix>& correlations,
                               double threshold);

// -p ln p, zero at both endpoints.
double cluster_entropy(double p);

// Cluster for one variable subset: entities whose whole attachment set lies
// inside the subset. `links` counts full-graph degrees of the members, and
// `possible` is member count times the total variable count.
struct ClusterRow {
    std::vector<std::string> subset; // variable labels, input order
    std::vector<std::string> members;
    int links = 0;
    int possible = 0;
    double p = 0;       // undefined (NaN) when the cluster is empty
    double entropy = 0; // 0 for an empty cluster
};

std::vector<ClusterRow> enumerate_clusters(const FactorGraph& g,
                                           const std::vector<std::vector<std::string>>& subsets);

// Leave-one-out subsets in omission order: drop variables[0] first.
std::vector<std::vector<std::string>> leave_one_out_subsets(const FactorGraph& g);

} // namespace ecoclust
