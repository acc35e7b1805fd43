#pragma once

#include "homcount/exact.hpp"
#include "homcount/simple_graph.hpp"
#include "homcount/target_graph.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace homcount {

/// Vertex-count cap for canonicalization; census scope never exceeds it.
constexpr int kCanonicalCap = 16;

/// Byte string uniquely identifying an isomorphism class (loops and the
/// assignment of the weight multiset to vertices are respected).
struct CanonicalForm {
    std::string bytes;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

/// Equitable refinement with a canonical cell order: cells keep their
/// relative order and sub-cells are ordered by ascending signature, so the
/// resulting order is invariant under relabeling.
inline void refine_cells(const BitMatrix& adj, int n, std::vector<std::vector<int>>& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cell_of(n, 0);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
        std::vector<std::vector<int>> next;
        next.reserve(cells.size());
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v : cell) {
                std::vector<int> sig(cells.size(), 0);
                for (int u = 0; u < n; ++u)
                    if (adj.test(v, u)) ++sig[cell_of[u]];
                groups[std::move(sig)].push_back(v);
            }
            if (groups.size() > 1) changed = true;
            for (auto& [sig, vs] : groups) next.push_back(std::move(vs));
        }
        cells = std::move(next);
    }
}

inline std::vector<std::vector<int>> initial_cells(int n, const std::vector<int>& color) {
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[color[v]].push_back(v);
    std::vector<std::vector<int>> cells;
    cells.reserve(groups.size());
    for (auto& [c, vs] : groups) cells.push_back(std::move(vs));
    return cells;
}

/// Packs the adjacency bits of the relabeled graph, upper triangle including
/// the diagonal, column by column (so the first k labeled vertices determine
/// a contiguous bit prefix). MSB-first within each byte.
inline std::vector<std::uint8_t> adjacency_key(const BitMatrix& adj, const std::vector<int>& perm) {
    const int k = static_cast<int>(perm.size());
    std::vector<std::uint8_t> key((static_cast<std::size_t>(k) * (k + 1) / 2 + 7) / 8, 0);
    std::size_t bit = 0;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i <= j; ++i, ++bit)
            if (adj.test(perm[i], perm[j])) key[bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
    return key;
}

/// Lexicographic comparison of the first `nbits` bits (a may be shorter as
/// long as it covers nbits).
inline int compare_bit_prefix(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b,
                              std::size_t nbits) {
    const std::size_t full = nbits / 8;
    for (std::size_t i = 0; i < full; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    const int rem = static_cast<int>(nbits % 8);
    if (rem) {
        const std::uint8_t mask = static_cast<std::uint8_t>(0xff00u >> rem);
        const std::uint8_t av = a[full] & mask, bv = b[full] & mask;
        if (av != bv) return av < bv ? -1 : 1;
    }
    return 0;
}

/// True when every non-singleton cell is internally complete or empty with a
/// constant loop flag, and every cell pair is fully joined or fully separated.
/// For an equitable partition this means all within-cell orderings are
/// automorphic, so one flattening stands for the whole subtree.
inline bool cells_homogeneous(const BitMatrix& adj, const std::vector<std::vector<int>>& cells) {
    for (const auto& c : cells) {
        if (c.size() == 1) continue;
        const int v0 = c[0];
        int internal = 0;
        for (int u : c)
            if (u != v0 && adj.test(v0, u)) ++internal;
        if (internal != 0 && internal != static_cast<int>(c.size()) - 1) return false;
        for (int u : c)
            if (adj.test(u, u) != adj.test(v0, v0)) return false;
        for (const auto& d : cells) {
            if (&d == &c || d.size() == 1) continue;
            int cnt = 0;
            for (int u : d)
                if (adj.test(v0, u)) ++cnt;
            if (cnt != 0 && cnt != static_cast<int>(d.size())) return false;
        }
    }
    return true;
}

class CanonSearcher {
public:
    CanonSearcher(const BitMatrix& adj, int n) : adj_(adj), n_(n) {}

    void run(std::vector<std::vector<int>> cells) { recurse(std::move(cells)); }

    const std::vector<std::uint8_t>& best_key() const { return best_; }
    const std::vector<int>& best_perm() const { return best_perm_; }

private:
    void recurse(std::vector<std::vector<int>> cells) {
        refine_cells(adj_, n_, cells);
        std::vector<int> prefix;
        std::size_t k = 0;
        while (k < cells.size() && cells[k].size() == 1) prefix.push_back(cells[k++][0]);
        if (have_best_ && !prefix.empty()) {
            const auto pkey = adjacency_key(adj_, prefix);
            const std::size_t nbits = prefix.size() * (prefix.size() + 1) / 2;
            if (compare_bit_prefix(pkey, best_, nbits) < 0) return;  // dominated on fixed bits
        }
        if (k == cells.size()) {
            consider_leaf(prefix);
            return;
        }
        if (cells_homogeneous(adj_, cells)) {
            std::vector<int> perm;
            perm.reserve(n_);
            for (const auto& c : cells) perm.insert(perm.end(), c.begin(), c.end());
            consider_leaf(perm);
            return;
        }
        const std::vector<int> target = cells[k];
        for (int v : target) {
            std::vector<std::vector<int>> child = cells;
            child[k] = {v};
            std::vector<int> rest;
            for (int u : target)
                if (u != v) rest.push_back(u);
            child.insert(child.begin() + static_cast<long>(k) + 1, std::move(rest));
            recurse(std::move(child));
        }
    }

    void consider_leaf(const std::vector<int>& perm) {
        auto key = adjacency_key(adj_, perm);
        if (!have_best_ || key > best_) {
            best_ = std::move(key);
            best_perm_ = perm;
            have_best_ = true;
        }
    }

    const BitMatrix& adj_;
    int n_;
    std::vector<std::uint8_t> best_;
    std::vector<int> best_perm_;
    bool have_best_ = false;
};

inline BitMatrix target_adjacency(const TargetGraph& h) {
    BitMatrix adj(h.vertex_count());
    for (int u = 0; u < h.vertex_count(); ++u)
        for (int v = u; v < h.vertex_count(); ++v)
            if (h.adjacent(u, v)) adj.set_sym(u, v);
    return adj;
}

/// Initial color: rank of the vertex weight among the sorted distinct
/// weights, with the loop flag folded in.
inline std::vector<int> target_colors(const TargetGraph& h, std::vector<ExactValue>& unique_weights) {
    unique_weights.clear();
    for (int v = 0; v < h.vertex_count(); ++v) unique_weights.push_back(h.weight(v));
    std::sort(unique_weights.begin(), unique_weights.end());
    unique_weights.erase(std::unique(unique_weights.begin(), unique_weights.end()), unique_weights.end());
    std::vector<int> color(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) {
        const auto it = std::lower_bound(unique_weights.begin(), unique_weights.end(), h.weight(v));
        color[v] = 2 * static_cast<int>(it - unique_weights.begin()) + (h.has_loop(v) ? 1 : 0);
    }
    return color;
}

inline std::string hex_string(const std::vector<std::uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

}  // namespace detail

inline CanonicalForm canonical_form(const TargetGraph& h) {
    const int n = h.vertex_count();
    if (n > kCanonicalCap)
        throw std::invalid_argument("canonical_form: vertex count " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(kCanonicalCap));
    std::vector<ExactValue> unique_weights;
    const auto colors = detail::target_colors(h, unique_weights);
    const auto adj = detail::target_adjacency(h);
    detail::CanonSearcher searcher(adj, n);
    searcher.run(detail::initial_cells(n, colors));

    std::string s = "T;" + std::to_string(n) + ";";
    const auto& perm = searcher.best_perm();
    for (int p = 0; p < n; ++p) {
        if (p) s.push_back(',');
        s += std::to_string(colors[perm[p]]);
    }
    s += ";" + detail::hex_string(searcher.best_key()) + ";";
    for (std::size_t i = 0; i < unique_weights.size(); ++i) {
        if (i) s.push_back(',');
        s += format_fraction(unique_weights[i]);
    }
    return {std::move(s)};
}

inline CanonicalForm canonical_form(const SimpleGraph& g) {
    return canonical_form(TargetGraph::from_simple(g));
}

/// Canonical representative labeling of the isomorphism class of g.
inline SimpleGraph canonical_relabel(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n > kCanonicalCap)
        throw std::invalid_argument("canonical_relabel: vertex count exceeds cap");
    const auto h = TargetGraph::from_simple(g);
    const auto adj = detail::target_adjacency(h);
    detail::CanonSearcher searcher(adj, n);
    searcher.run(detail::initial_cells(n, std::vector<int>(n, 0)));
    const auto& perm = searcher.best_perm();
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[perm[p]] = p;
    SimpleGraph out(n);
    for (const auto& [u, v] : g.edges()) out.add_edge(pos[u], pos[v]);
    return out;
}

/// Exact isomorphism test preserving adjacency, loops, and weights.
/// Independent of canonical_form (no vertex-count cap): joint refinement on
/// the disjoint union followed by cell-respecting backtracking.
inline bool are_isomorphic(const TargetGraph& x, const TargetGraph& y) {
    const int n = x.vertex_count();
    if (n != y.vertex_count()) return false;
    if (n == 0) return true;
    if (x.loops().size() != y.loops().size()) return false;
    {
        auto dx = std::vector<int>(n), dy = std::vector<int>(n);
        for (int v = 0; v < n; ++v) {
            dx[v] = x.degree(v);
            dy[v] = y.degree(v);
        }
        std::sort(dx.begin(), dx.end());
        std::sort(dy.begin(), dy.end());
        if (dx != dy) return false;
    }

    // joint refinement on the disjoint union; X occupies 0..n-1, Y n..2n-1
    BitMatrix adj(2 * n);
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
            if (x.adjacent(u, v)) adj.set_sym(u, v);
            if (y.adjacent(u, v)) adj.set_sym(n + u, n + v);
        }
    std::vector<ExactValue> combined;
    combined.reserve(2 * n);
    for (int v = 0; v < n; ++v) combined.push_back(x.weight(v));
    for (int v = 0; v < n; ++v) combined.push_back(y.weight(v));
    std::vector<ExactValue> uniq = combined;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> color(2 * n);
    for (int v = 0; v < 2 * n; ++v) {
        const auto it = std::lower_bound(uniq.begin(), uniq.end(), combined[v]);
        const bool loop = v < n ? x.has_loop(v) : y.has_loop(v - n);
        color[v] = 2 * static_cast<int>(it - uniq.begin()) + (loop ? 1 : 0);
    }
    auto cells = detail::initial_cells(2 * n, color);
    detail::refine_cells(adj, 2 * n, cells);

    std::vector<int> cell_of(2 * n);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        int from_x = 0, from_y = 0;
        for (int v : cells[c]) {
            cell_of[v] = static_cast<int>(c);
            (v < n ? from_x : from_y)++;
        }
        if (from_x != from_y) return false;
    }

    // backtracking over X vertices in cell order
    std::vector<int> xs;
    xs.reserve(n);
    for (const auto& c : cells)
        for (int v : c)
            if (v < n) xs.push_back(v);
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    auto dfs = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == xs.size()) return true;
        const int u = xs[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || cell_of[n + w] != cell_of[u]) continue;
            bool ok = x.has_loop(u) == y.has_loop(w) && x.weight(u) == y.weight(w);
            for (std::size_t j = 0; ok && j < idx; ++j) {
                const int u2 = xs[j];
                if (x.adjacent(u, u2) != y.adjacent(w, image[u2])) ok = false;
            }
            if (!ok) continue;
            image[u] = w;
            used[w] = 1;
            if (self(self, idx + 1)) return true;
            image[u] = -1;
            used[w] = 0;
        }
        return false;
    };
    return dfs(dfs, 0);
}

inline bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    return are_isomorphic(TargetGraph::from_simple(a), TargetGraph::from_simple(b));
}

}  // namespace homcount
