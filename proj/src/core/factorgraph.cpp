#include "core/factorgraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace ecoclust {

std::size_t FactorGraph::degree(std::size_t entity) const {
    std::size_t d = 0;
    for (std::size_t v = 0; v < variables.size(); ++v)
        if (edges[entity] & (1u << v)) ++d;
    return d;
}

FactorGraph build_factor_graph(const std::vector<std::string>& indicator_labels,
                               const std::vector<LabeledMatrix>& correlations,
                               double threshold) {
    if (indicator_labels.size() != correlations.size() || correlations.empty())
        throw input_error("factor graph needs one correlation matrix per indicator");
    if (indicator_labels.size() > 32)
        throw input_error("factor graph supports at most 32 indicators");
    if (!(threshold >= 0.0))
        throw input_error("factor graph threshold must be non-negative");

    // Every indicator must cover the same entity set; order may differ.
    std::vector<std::string> codes = correlations[0].labels;
    std::sort(codes.begin(), codes.end());
    for (std::size_t k = 1; k < correlations.size(); ++k) {
        std::vector<std::string> other = correlations[k].labels;
        std::sort(other.begin(), other.end());
        if (other != codes)
            throw input_error("indicator '" + indicator_labels[k] +
                              "' covers a different entity set than '" +
                              indicator_labels[0] + "'");
    }

    FactorGraph g;
    g.threshold = threshold;
    g.variables = indicator_labels;
    for (const auto& code : codes) {
        std::uint32_t mask = 0;
        for (std::size_t k = 0; k < correlations.size(); ++k) {
            const auto& m = correlations[k];
            const auto i = static_cast<std::size_t>(m.index_of(code));
            for (std::size_t j = 0; j < m.n(); ++j) {
                if (j == i) continue;
                if (std::abs(m.at(i, j)) >= threshold) {
                    mask |= 1u << k;
                    break;
                }
            }
        }
        if (mask == 0) {
            g.excluded.push_back(code);
        } else {
            g.entities.push_back(code);
            g.edges.push_back(mask);
        }
    }
    if (g.entities.empty())
        throw degenerate_error("no entity reaches the threshold in any indicator");
    return g;
}

double cluster_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw input_error("connection probability " + std::to_string(p) +
                          " outside [0, 1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log(p);
}

std::vector<ClusterRow> enumerate_clusters(const FactorGraph& g,
                                           const std::vector<std::vector<std::string>>& subsets) {
    std::vector<ClusterRow> out;
    for (const auto& subset : subsets) {
        std::uint32_t smask = 0;
        for (const auto& label : subset) {
            const auto it = std::find(g.variables.begin(), g.variables.end(), label);
            if (it == g.variables.end())
                throw input_error("subset names unknown indicator '" + label + "'");
            smask |= 1u << static_cast<std::size_t>(it - g.variables.begin());
        }
        ClusterRow row;
        row.subset = subset;
        int links = 0;
        for (std::size_t e = 0; e < g.entities.size(); ++e) {
            if ((g.edges[e] & ~smask) == 0) {
                row.members.push_back(g.entities[e]);
                links += static_cast<int>(g.degree(e));
            }
        }
        row.links = links;
        row.possible = static_cast<int>(row.members.size() * g.variables.size());
        if (row.members.empty()) {
            row.p = std::numeric_limits<double>::quiet_NaN();
            row.entropy = 0.0;
        } else {
            row.p = static_cast<double>(links) / static_cast<double>(row.possible);
            row.entropy = cluster_entropy(row.p);
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<std::vector<std::string>> leave_one_out_subsets(const FactorGraph& g) {
    std::vector<std::vector<std::string>> out;
    for (std::size_t skip = 0; skip < g.variables.size(); ++skip) {
        std::vector<std::string> s;
        for (std::size_t v = 0; v < g.variables.size(); ++v)
            if (v != skip) s.push_back(g.variables[v]);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace ecoclust
