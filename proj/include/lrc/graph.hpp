#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/gf2.hpp"
#include "lrc/linear_code.hpp"

namespace lrc {

/// Undirected simple graph. Edge j is coordinate j of the associated code.
struct SimpleGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    [[nodiscard]] std::size_t edge_count() const noexcept { return edges.size(); }

    void validate() const {
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t j = 0; j < edges.size(); ++j) {
            auto [u, v] = edges[j];
            if (u >= vertex_count || v >= vertex_count) {
                throw Error(ErrorKind::invalid_graph, "edge " + std::to_string(j + 1) + " has a vertex out of range");
            }
            if (u == v) throw Error(ErrorKind::invalid_graph, "edge " + std::to_string(j + 1) + " is a self-loop");
            if (!seen.insert(std::minmax(u, v)).second) {
                throw Error(ErrorKind::invalid_graph, "edge " + std::to_string(j + 1) + " duplicates an earlier edge");
            }
        }
    }

    [[nodiscard]] std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> deg(vertex_count, 0);
        for (auto [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        return deg;
    }

    [[nodiscard]] std::size_t component_count() const {
        std::vector<std::size_t> parent(vertex_count);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t components = vertex_count;
        for (auto [u, v] : edges) {
            auto a = find(u);
            auto b = find(v);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
        return components;
    }
};

inline SimpleGraph complete_graph(std::size_t q) {
    SimpleGraph g{q, {}};
    for (std::size_t u = 0; u < q; ++u) {
        for (std::size_t v = u + 1; v < q; ++v) g.edges.emplace_back(u, v);
    }
    return g;
}

/// v x e vertex-edge incidence matrix; column j marks both ends of edge j.
inline BitMatrix incidence_matrix(const SimpleGraph& g) {
    g.validate();
    BitMatrix h(g.vertex_count, g.edge_count());
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        h.set(g.edges[j].first, j);
        h.set(g.edges[j].second, j);
    }
    return h;
}

/// Cycle space of the graph: every vertex is a parity check on its edges.
inline LinearCode graph_code(const SimpleGraph& g) {
    if (g.edges.empty()) throw Error(ErrorKind::invalid_graph, "graph has no edges");
    return LinearCode::from_parity(incidence_matrix(g));
}

}  // namespace lrc
