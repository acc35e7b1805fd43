#pragma once

#include "homcount/bit_matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homcount {

/// Undirected loopless graph on labeled vertices 0..n-1.
/// Treated as immutable once built; all queries are const and pure.
class SimpleGraph {
public:
    SimpleGraph() : n_(0) {}
    explicit SimpleGraph(int n) : n_(n), adj_(n) {
        if (n < 0) throw std::invalid_argument("SimpleGraph: negative vertex count");
    }

    /// Validating constructor: rejects out-of-range endpoints and loop pairs,
    /// collapses duplicate edges.
    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        SimpleGraph g(n);
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("SimpleGraph: endpoint (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") out of range 0.." + std::to_string(n - 1));
            if (u == v)
                throw std::invalid_argument("SimpleGraph: loop pair (" + std::to_string(u) + "," +
                                            std::to_string(u) + ") not allowed");
            g.adj_.set_sym(u, v);
        }
        return g;
    }

    int vertex_count() const { return n_; }

    bool has_edge(int u, int v) const { return u != v && adj_.test(u, v); }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("SimpleGraph: loop not allowed");
        adj_.set_sym(u, v);
    }

    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < n_; ++u)
            if (u != v && adj_.test(v, u)) ++d;
        return d;
    }

    std::vector<int> degrees() const {
        std::vector<int> ds(n_);
        for (int v = 0; v < n_; ++v) ds[v] = degree(v);
        return ds;
    }

    int edge_count() const {
        int m = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_.test(u, v)) ++m;
        return m;
    }

    /// Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_.test(u, v)) es.emplace_back(u, v);
        return es;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> ns;
        for (int u = 0; u < n_; ++u)
            if (u != v && adj_.test(v, u)) ns.push_back(u);
        return ns;
    }

    bool is_d_regular(int d) const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != d) return false;
        return true;
    }

    bool is_triangle_free() const {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b) {
                if (!adj_.test(a, b)) continue;
                for (int c = b + 1; c < n_; ++c)
                    if (adj_.test(a, c) && adj_.test(b, c)) return false;
            }
        return true;
    }

    bool is_connected() const {
        if (n_ == 0) return true;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n_; ++u)
                if (u != v && adj_.test(v, u) && !seen[u]) {
                    seen[u] = 1;
                    ++count;
                    stack.push_back(u);
                }
        }
        return count == n_;
    }

    /// Canonical 2-coloring: the least-labeled vertex of every connected
    /// component lands in part A. Absent when some component has an odd cycle.
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition() const {
        std::vector<int> color(n_, -1);
        for (int s = 0; s < n_; ++s) {
            if (color[s] != -1) continue;
            color[s] = 0;
            std::vector<int> queue{s};
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const int v = queue[head];
                for (int u = 0; u < n_; ++u) {
                    if (u == v || !adj_.test(v, u)) continue;
                    if (color[u] == -1) {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if (color[u] == color[v]) {
                        return std::nullopt;
                    }
                }
            }
        }
        std::pair<std::vector<int>, std::vector<int>> parts;
        for (int v = 0; v < n_; ++v)
            (color[v] == 0 ? parts.first : parts.second).push_back(v);
        return parts;
    }

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    int n_;
    BitMatrix adj_;
};

inline SimpleGraph build_simple(int n, const std::vector<std::pair<int, int>>& edges) {
    return SimpleGraph::from_edges(n, edges);
}

inline SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph g(a.vertex_count() + b.vertex_count());
    for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
    for (const auto& [u, v] : b.edges()) g.add_edge(a.vertex_count() + u, a.vertex_count() + v);
    return g;
}

}  // namespace homcount
