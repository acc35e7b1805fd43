#pragma once

#include "homcount/bit_matrix.hpp"
#include "homcount/exact.hpp"
#include "homcount/simple_graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homcount {

/// Vertex-weighted target graph; loops allowed, weights strictly positive
/// exact rationals. An unweighted target has every weight equal to 1.
class TargetGraph {
public:
    TargetGraph() = default;
    explicit TargetGraph(int n) : n_(n), adj_(n), weights_(n, ExactValue(1)) {
        if (n < 0) throw std::invalid_argument("TargetGraph: negative vertex count");
    }

    static TargetGraph from_parts(int n, const std::vector<int>& loops,
                                  const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<ExactValue>& weights = {}) {
        TargetGraph h(n);
        for (int v : loops) {
            h.check_vertex(v);
            h.adj_.set(v, v);
        }
        for (const auto& [u, v] : edges) {
            h.check_vertex(u);
            h.check_vertex(v);
            if (u == v) throw std::invalid_argument("TargetGraph: loop must be listed in loops, not edges");
            h.adj_.set_sym(u, v);
        }
        if (!weights.empty()) {
            if (static_cast<int>(weights.size()) != n)
                throw std::invalid_argument("TargetGraph: weight count != vertex count");
            for (const auto& w : weights)
                if (w <= 0) throw std::invalid_argument("TargetGraph: weights must be strictly positive");
            h.weights_ = weights;
        }
        return h;
    }

    static TargetGraph from_simple(const SimpleGraph& g) {
        TargetGraph h(g.vertex_count());
        for (const auto& [u, v] : g.edges()) h.adj_.set_sym(u, v);
        return h;
    }

    int vertex_count() const { return n_; }

    /// Adjacency probe; (v,v) reports the loop flag.
    bool adjacent(int u, int v) const { return adj_.test(u, v); }
    bool has_loop(int v) const { return adj_.test(v, v); }

    const ExactValue& weight(int v) const { return weights_[v]; }

    void add_edge(int u, int v) { adj_.set_sym(u, v); }
    void add_loop(int v) { adj_.set(v, v); }
    void set_weight(int v, ExactValue w) {
        if (w <= 0) throw std::invalid_argument("TargetGraph: weights must be strictly positive");
        weights_[v] = std::move(w);
    }

    bool is_unweighted() const {
        return std::all_of(weights_.begin(), weights_.end(), [](const ExactValue& w) { return w == 1; });
    }

    bool has_any_loop() const {
        for (int v = 0; v < n_; ++v)
            if (adj_.test(v, v)) return true;
        return false;
    }

    std::vector<int> loops() const {
        std::vector<int> ls;
        for (int v = 0; v < n_; ++v)
            if (adj_.test(v, v)) ls.push_back(v);
        return ls;
    }

    /// Non-loop edges as (u,v), u < v, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_.test(u, v)) es.emplace_back(u, v);
        return es;
    }

    /// Distinct neighbors, the vertex itself included when looped.
    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < n_; ++u)
            if (adj_.test(v, u)) ++d;
        return d;
    }

    friend bool operator==(const TargetGraph&, const TargetGraph&) = default;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["n"] = n_;
        j["loops"] = loops();
        auto& je = j["edges"] = nlohmann::ordered_json::array();
        for (const auto& [u, v] : edges()) je.push_back({u, v});
        auto& jw = j["weights"] = nlohmann::ordered_json::array();
        for (const auto& w : weights_) jw.push_back(format_fraction(w));
        return j;
    }

    static TargetGraph from_json(const nlohmann::json& j) {
        const int n = j.at("n").get<int>();
        std::vector<int> loops = j.value("loops", std::vector<int>{});
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.value("edges", nlohmann::json::array())) {
            if (!e.is_array() || e.size() != 2) throw std::invalid_argument("TargetGraph: bad edge entry");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        std::vector<ExactValue> weights;
        if (j.contains("weights"))
            for (const auto& w : j.at("weights")) weights.push_back(parse_fraction(w.get<std::string>()));
        return from_parts(n, loops, edges, weights);
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("TargetGraph: vertex " + std::to_string(v) + " out of range");
    }

    int n_ = 0;
    BitMatrix adj_;
    std::vector<ExactValue> weights_;
};

/// Target graph with a designated bipartition. The partition is part of the
/// value: equal underlying graphs with different designated parts are
/// distinct objects.
class BipartiteTarget {
public:
    BipartiteTarget(TargetGraph g, std::vector<int> part_a, std::vector<int> part_b)
        : g_(std::move(g)), part_a_(std::move(part_a)), part_b_(std::move(part_b)) {
        std::sort(part_a_.begin(), part_a_.end());
        std::sort(part_b_.begin(), part_b_.end());
        validate();
    }

    const TargetGraph& graph() const { return g_; }
    const std::vector<int>& part_a() const { return part_a_; }
    const std::vector<int>& part_b() const { return part_b_; }

    SimpleGraph to_simple() const {
        SimpleGraph g(g_.vertex_count());
        for (const auto& [u, v] : g_.edges()) g.add_edge(u, v);
        return g;
    }

    friend bool operator==(const BipartiteTarget&, const BipartiteTarget&) = default;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j = g_.to_json();
        j["partA"] = part_a_;
        j["partB"] = part_b_;
        return j;
    }

    static BipartiteTarget from_json(const nlohmann::json& j) {
        return {TargetGraph::from_json(j), j.at("partA").get<std::vector<int>>(),
                j.at("partB").get<std::vector<int>>()};
    }

private:
    void validate() const {
        const int n = g_.vertex_count();
        std::vector<int> side(n, -1);
        for (int a : part_a_) mark(side, a, 0);
        for (int b : part_b_) mark(side, b, 1);
        for (int v = 0; v < n; ++v)
            if (side[v] == -1) throw std::invalid_argument("BipartiteTarget: vertex not covered by parts");
        if (g_.has_any_loop()) throw std::invalid_argument("BipartiteTarget: loops not allowed");
        for (const auto& [u, v] : g_.edges())
            if (side[u] == side[v]) throw std::invalid_argument("BipartiteTarget: edge inside a part");
    }

    void mark(std::vector<int>& side, int v, int s) const {
        if (v < 0 || v >= g_.vertex_count()) throw std::invalid_argument("BipartiteTarget: part vertex out of range");
        if (side[v] != -1) throw std::invalid_argument("BipartiteTarget: parts overlap");
        side[v] = s;
    }

    TargetGraph g_;
    std::vector<int> part_a_;
    std::vector<int> part_b_;
};

/// Wraps a simple bipartite graph as a BipartiteTarget using its canonical
/// bipartition; optional weights become the target's vertex weights.
inline BipartiteTarget as_bipartite(const SimpleGraph& g, std::vector<ExactValue> weights = {}) {
    auto parts = g.bipartition();
    if (!parts) throw std::invalid_argument("as_bipartite: graph has an odd cycle");
    TargetGraph h = TargetGraph::from_simple(g);
    if (!weights.empty()) {
        if (static_cast<int>(weights.size()) != g.vertex_count())
            throw std::invalid_argument("as_bipartite: weight count != vertex count");
        for (int v = 0; v < g.vertex_count(); ++v) h.set_weight(v, std::move(weights[v]));
    }
    return {std::move(h), std::move(parts->first), std::move(parts->second)};
}

}  // namespace homcount
