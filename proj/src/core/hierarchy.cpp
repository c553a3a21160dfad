#include "core/hierarchy.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "core/errors.hpp"

namespace ecoclust {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// Sorted label pair for tie-breaking; the matrix order is irrelevant.
std::pair<const std::string&, const std::string&>
label_pair(const LabeledMatrix& m, std::size_t i, std::size_t j) {
    if (m.labels[i] <= m.labels[j]) return {m.labels[i], m.labels[j]};
    return {m.labels[j], m.labels[i]};
}

bool edge_less(const LabeledMatrix& m, double wa, std::size_t ai, std::size_t aj,
               double wb, std::size_t bi, std::size_t bj) {
    if (wa != wb) return wa < wb;
    return label_pair(m, ai, aj) < label_pair(m, bi, bj);
}

void require_square(const LabeledMatrix& m) {
    if (m.n() < 2) throw insufficient_error("tree construction needs at least 2 nodes");
}

std::pair<std::size_t, std::size_t> min_pair(const LabeledMatrix& m) {
    std::size_t bi = 0, bj = 1;
    double bw = m.at(0, 1);
    for (std::size_t i = 0; i < m.n(); ++i)
        for (std::size_t j = i + 1; j < m.n(); ++j)
            if (edge_less(m, m.at(i, j), i, j, bw, bi, bj)) {
                bw = m.at(i, j);
                bi = i;
                bj = j;
            }
    return {bi, bj};
}

} // namespace

Tree build_mst(const LabeledMatrix& dist) {
    require_square(dist);
    const std::size_t n = dist.n();
    struct E {
        std::size_t i, j;
        double w;
    };
    std::vector<E> edges;
    edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j, dist.at(i, j)});
    std::sort(edges.begin(), edges.end(), [&](const E& a, const E& b) {
        return edge_less(dist, a.w, a.i, a.j, b.w, b.i, b.j);
    });

    Tree t;
    t.kind = TreeKind::mst;
    t.nodes = dist.labels;
    UnionFind uf(n);
    for (const E& e : edges) {
        if (uf.unite(e.i, e.j)) {
            t.edges.push_back({e.i, e.j, e.w});
            if (t.edges.size() == n - 1) break;
        }
    }
    return t;
}

Tree build_lmst(const LabeledMatrix& dist) {
    require_square(dist);
    const std::size_t n = dist.n();
    Tree t;
    t.kind = TreeKind::lmst;
    t.nodes = dist.labels;

    std::vector<bool> in(n, false);
    auto [a, b] = min_pair(dist);
    in[a] = in[b] = true;
    t.edges.push_back({a, b, dist.at(a, b)});

    while (t.edges.size() < n - 1) {
        bool found = false;
        std::size_t bi = 0, bk = 0;
        double bw = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (!in[i]) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (in[k]) continue;
                if (!found || edge_less(dist, dist.at(i, k), i, k, bw, bi, bk)) {
                    found = true;
                    bw = dist.at(i, k);
                    bi = i;
                    bk = k;
                }
            }
        }
        in[bk] = true;
        t.edges.push_back({bi, bk, bw});
    }
    return t;
}

Tree build_chain(const LabeledMatrix& dist, TreeKind kind, const std::string& root) {
    if (kind != TreeKind::chain_uni && kind != TreeKind::chain_bi)
        throw input_error("build_chain expects a chain kind");
    require_square(dist);
    const std::size_t n = dist.n();

    std::vector<bool> in(n, false);
    std::vector<std::size_t> chain; // head at front, tail at back

    if (root == "min-pair") {
        auto [a, b] = min_pair(dist);
        // Seed ordered lexicographically: head gets the smaller label.
        if (dist.labels[a] > dist.labels[b]) std::swap(a, b);
        chain = {a, b};
        in[a] = in[b] = true;
    } else {
        const int r = dist.index_of(root);
        if (r < 0) throw input_error("chain root '" + root + "' is not a matrix label");
        chain = {static_cast<std::size_t>(r)};
        in[chain[0]] = true;
        if (kind == TreeKind::chain_bi && n >= 2) {
            // A bidirectional chain needs a pair: attach the root's nearest.
            std::size_t bk = chain[0] == 0 ? 1 : 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (in[k]) continue;
                if (edge_less(dist, dist.at(chain[0], k), chain[0], k,
                              dist.at(chain[0], bk), chain[0], bk))
                    bk = k;
            }
            chain.push_back(bk);
            in[bk] = true;
        }
    }

    Tree t;
    t.kind = kind;
    t.nodes = dist.labels;
    for (std::size_t i = 1; i < chain.size(); ++i)
        t.edges.push_back({chain[i - 1], chain[i], dist.at(chain[i - 1], chain[i])});

    while (chain.size() < n) {
        if (kind == TreeKind::chain_uni) {
            const std::size_t tail = chain.back();
            bool found = false;
            std::size_t bk = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (in[k]) continue;
                if (!found || edge_less(dist, dist.at(tail, k), tail, k,
                                        dist.at(tail, bk), tail, bk)) {
                    found = true;
                    bk = k;
                }
            }
            t.edges.push_back({tail, bk, dist.at(tail, bk)});
            chain.push_back(bk);
            in[bk] = true;
        } else {
            const std::size_t head = chain.front(), tail = chain.back();
            bool found = false;
            bool at_tail = true;
            std::size_t bk = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (in[k]) continue;
                for (const std::size_t end : {head, tail}) {
                    if (!found || edge_less(dist, dist.at(end, k), end, k,
                                            dist.at(at_tail ? tail : head, bk),
                                            at_tail ? tail : head, bk)) {
                        found = true;
                        at_tail = (end == tail);
                        bk = k;
                    }
                }
            }
            const std::size_t end = at_tail ? tail : head;
            t.edges.push_back({end, bk, dist.at(end, bk)});
            if (at_tail)
                chain.push_back(bk);
            else
                chain.insert(chain.begin(), bk);
            in[bk] = true;
        }
    }
    return t;
}

LabeledMatrix subdominant_ultrametric(const Tree& t) {
    const std::size_t n = t.nodes.size();
    if (t.edges.size() + 1 != n)
        throw input_error("ultrametric needs a spanning tree; got " +
                          std::to_string(t.edges.size()) + " edges over " +
                          std::to_string(n) + " nodes");
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    for (const auto& e : t.edges) {
        adj[e.a].push_back({e.b, e.w});
        adj[e.b].push_back({e.a, e.w});
    }
    LabeledMatrix u = LabeledMatrix::zeros(t.nodes);
    std::vector<double> best(n);
    std::vector<bool> seen(n);
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(seen.begin(), seen.end(), false);
        best[s] = 0;
        seen[s] = true;
        stack.assign(1, s);
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (const auto& [y, w] : adj[x]) {
                if (seen[y]) continue;
                seen[y] = true;
                best[y] = std::max(best[x], w);
                stack.push_back(y);
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!seen[j])
                throw input_error("tree is disconnected at node '" + t.nodes[j] + "'");
            u.at(s, j) = best[j];
        }
    }
    return u;
}

std::vector<std::vector<std::string>> threshold_clusters(const Tree& t, double d_star) {
    const std::size_t n = t.nodes.size();
    UnionFind uf(n);
    for (const auto& e : t.edges)
        if (e.w <= d_star) uf.unite(e.a, e.b);

    std::vector<std::vector<std::string>> groups;
    std::vector<int> group_of(n, -1);
    // Scan nodes in sorted-label order so components come out ordered by
    // their first member.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return t.nodes[a] < t.nodes[b]; });
    for (std::size_t idx : order) {
        const std::size_t r = uf.find(idx);
        if (group_of[r] < 0) {
            group_of[r] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(group_of[r])].push_back(t.nodes[idx]);
    }
    return groups;
}

std::string export_dot(const Tree& t) {
    std::vector<std::string> nodes = t.nodes;
    std::sort(nodes.begin(), nodes.end());

    struct Line {
        std::string a, b;
        double w;
    };
    std::vector<Line> lines;
    for (const auto& e : t.edges) {
        std::string a = t.nodes[e.a], b = t.nodes[e.b];
        if (a > b) std::swap(a, b);
        lines.push_back({std::move(a), std::move(b), e.w});
    }
    std::sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });

    std::string out = "graph G {\n";
    for (const auto& nd : nodes) out += "  \"" + nd + "\";\n";
    char buf[64];
    for (const auto& ln : lines) {
        std::snprintf(buf, sizeof buf, "%.3f", ln.w);
        out += "  \"" + ln.a + "\" -- \"" + ln.b + "\" [label=\"" + buf + "\"];\n";
    }
    out += "}\n";
    return out;
}

} // namespace ecoclust
