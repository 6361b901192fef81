#pragma once

// Bipartite localization trees: black vertices map to the left vertex of the
// two-vertex geometry, white vertices to the right one, and each edge is a
// multiple cover of the compact line labelled by its degree.

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "rational.hpp"

namespace ogw {

enum class Color { Black, White };

struct TreeEdge {
    int u;
    int v;
    int d;
};

class LocalizationTree {
public:
    LocalizationTree() = default;
    LocalizationTree(std::vector<Color> colors, std::vector<TreeEdge> edges)
        : colors_(std::move(colors)), edges_(std::move(edges))
    {
        validate();
    }

    /// Single edge of degree d joining a black and a white vertex.
    static LocalizationTree single_edge(int d) { return LocalizationTree({Color::Black, Color::White}, {{0, 1, d}}); }

    const std::vector<Color>& colors() const { return colors_; }
    const std::vector<TreeEdge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(colors_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int total_degree() const
    {
        return std::accumulate(edges_.begin(), edges_.end(), 0, [](int s, const TreeEdge& e) { return s + e.d; });
    }
    int max_label() const
    {
        int m = 0;
        for (const auto& e : edges_)
            m = std::max(m, e.d);
        return m;
    }
    int max_valence() const
    {
        int m = 0;
        for (int v = 0; v < vertex_count(); ++v)
            m = std::max(m, static_cast<int>(incident(v).size()));
        return m;
    }

    /// Indices of the edges meeting v.
    std::vector<int> incident(int v) const
    {
        std::vector<int> r;
        for (int i = 0; i < edge_count(); ++i)
            if (edges_[i].u == v || edges_[i].v == v)
                r.push_back(i);
        return r;
    }

    /// Tree with a new leaf of the opposite color hung from v by an edge of degree d.
    LocalizationTree with_leaf(int v, int d) const
    {
        auto colors = colors_;
        auto edges = edges_;
        colors.push_back(colors_[v] == Color::Black ? Color::White : Color::Black);
        edges.push_back({v, vertex_count(), d});
        return LocalizationTree(std::move(colors), std::move(edges));
    }

    /// Isomorphism-invariant encoding: the least rooted encoding over all roots.
    std::string canonical() const
    {
        std::string best;
        for (int r = 0; r < vertex_count(); ++r) {
            std::string s = encode(r, -1);
            if (r == 0 || s < best)
                best = s;
        }
        return best;
    }

    /// Color- and label-preserving automorphisms, counted by brute force.
    long aut() const
    {
        std::vector<int> perm(vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::set<std::tuple<int, int, int>> edge_set;
        for (const auto& e : edges_)
            edge_set.insert({std::min(e.u, e.v), std::max(e.u, e.v), e.d});
        long count = 0;
        do {
            bool ok = true;
            for (int v = 0; v < vertex_count() && ok; ++v)
                ok = colors_[v] == colors_[perm[v]];
            for (const auto& e : edges_) {
                if (!ok)
                    break;
                int a = perm[e.u], b = perm[e.v];
                ok = edge_set.count({std::min(a, b), std::max(a, b), e.d}) > 0;
            }
            count += ok ? 1 : 0;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return count;
    }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto& e = edges_[i];
            s += (i ? " " : "") + vertex_name(e.u) + "-" + std::to_string(e.d) + "-" + vertex_name(e.v);
        }
        return s;
    }

private:
    std::string vertex_name(int v) const { return (colors_[v] == Color::Black ? "b" : "w") + std::to_string(v); }

    std::string encode(int v, int parent_edge) const
    {
        std::vector<std::string> children;
        for (int i : incident(v)) {
            if (i == parent_edge)
                continue;
            int w = edges_[i].u == v ? edges_[i].v : edges_[i].u;
            children.push_back(std::to_string(edges_[i].d) + ":" + encode(w, i));
        }
        std::sort(children.begin(), children.end());
        std::string s = colors_[v] == Color::Black ? "B(" : "W(";
        for (const auto& c : children)
            s += c + ",";
        return s + ")";
    }

    void validate() const
    {
        require(!edges_.empty(), "a localization tree has at least one edge");
        require(edges_.size() + 1 == colors_.size(), "a tree on n vertices has n - 1 edges");
        std::vector<int> root(colors_.size());
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](int x) {
            while (root[x] != x)
                x = root[x] = root[root[x]];
            return x;
        };
        for (const auto& e : edges_) {
            require(e.u >= 0 && e.v >= 0 && e.u < vertex_count() && e.v < vertex_count(), "edge endpoint out of range");
            require(e.d >= 1, "edge degrees are positive");
            require(colors_[e.u] != colors_[e.v], "edges join black to white");
            int a = find(e.u), b = find(e.v);
            require(a != b, "localization trees are acyclic");
            root[a] = b;
        }
    }

    std::vector<Color> colors_;
    std::vector<TreeEdge> edges_;
};

/// Every isomorphism class of tree with labels <= max_edge_degree, label sum
/// <= max_total_degree and at most max_edges edges, ordered by canonical form.
inline std::vector<LocalizationTree> enumerate_trees(int max_total_degree, int max_edge_degree, int max_edges = INT_MAX)
{
    require(max_total_degree >= 1 && max_edge_degree >= 1 && max_edges >= 1, "tree bounds must be positive");
    std::vector<std::pair<std::string, LocalizationTree>> found;
    std::set<std::string> seen;
    std::vector<LocalizationTree> frontier;
    for (int d = 1; d <= std::min(max_total_degree, max_edge_degree); ++d) {
        auto t = LocalizationTree::single_edge(d);
        seen.insert(t.canonical());
        found.emplace_back(t.canonical(), t);
        frontier.push_back(t);
    }
    // Every larger tree arises from a smaller one by hanging a leaf.
    while (!frontier.empty()) {
        std::vector<LocalizationTree> next;
        for (const auto& t : frontier) {
            if (t.edge_count() >= max_edges)
                continue;
            for (int v = 0; v < t.vertex_count(); ++v)
                for (int d = 1; d <= max_edge_degree && t.total_degree() + d <= max_total_degree; ++d) {
                    auto grown = t.with_leaf(v, d);
                    auto key = grown.canonical();
                    if (seen.insert(key).second) {
                        found.emplace_back(key, grown);
                        next.push_back(std::move(grown));
                    }
                }
        }
        frontier = std::move(next);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<LocalizationTree> out;
    for (auto& [k, t] : found)
        out.push_back(std::move(t));
    return out;
}

} // namespace ogw
