#pragma once

// Convex polyhedra as graphs with explicit faces, and the five Platonic
// solids with fixed edge labelings.
//
// Labelings (1-based, as written in files; the C++ structures are 0-based):
//
// tetrahedron  edges 1:(1,3) 2:(1,2) 3:(2,3) 4:(3,4) 5:(1,4) 6:(2,4)
//              faces {1,4,5} {2,5,6} {3,4,6} {1,2,3}
//              Vertex checks are then rows {1,2,5} {2,3,6} {1,3,4} {4,5,6}.
// cube         square 1-2-3-4 on top, 5-6-7-8 below, vertex i above i+4.
//              edges 1:(1,2) 2:(2,3) 3:(3,4) 4:(1,4) 5:(1,5) 6:(2,6)
//                    7:(3,7) 8:(4,8) 9:(5,6) 10:(6,7) 11:(7,8) 12:(5,8)
//              faces {1,2,3,4} {1,5,6,9} {2,6,7,10} {3,7,8,11} {4,5,8,12} {9,10,11,12}
// octahedron   vertex i sits on cube face i; edge j crosses cube edge j, so
//              the cube and octahedron share their edge labels.
// icosahedron  vertex 1 on top, ring 2..6, ring 7..11, vertex 12 below;
//              lower ring vertex 7+i touches upper ring vertices 2+i and
//              2+(i+1)%5. Edges are numbered top spokes, upper ring, zigzag
//              (two per lower vertex), lower ring, bottom spokes.
// dodecahedron the combinatorial dual of the icosahedron above: vertex i is
//              icosahedron face i and the edge labels are shared.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/gf2.hpp"
#include "lrc/graph.hpp"
#include "lrc/linear_code.hpp"

namespace lrc {

struct Polyhedron {
    SimpleGraph graph;
    std::vector<std::vector<std::size_t>> faces;  // edge indices bounding each face
    std::string name;

    [[nodiscard]] std::size_t vertex_count() const noexcept { return graph.vertex_count; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return graph.edge_count(); }
    [[nodiscard]] std::size_t face_count() const noexcept { return faces.size(); }

    void validate() const {
        try {
            graph.validate();
        } catch (const Error& e) {
            throw Error(ErrorKind::invalid_polyhedron, e.what());
        }
        const auto v = static_cast<long>(vertex_count());
        const auto e = static_cast<long>(edge_count());
        const auto f = static_cast<long>(face_count());
        if (v - e + f != 2) throw Error(ErrorKind::invalid_polyhedron, "Euler relation v - e + f = 2 fails");

        std::vector<std::size_t> uses(edge_count(), 0);
        for (std::size_t fi = 0; fi < faces.size(); ++fi) {
            const auto& face = faces[fi];
            if (face.size() < 3) throw Error(ErrorKind::invalid_polyhedron, "face " + std::to_string(fi + 1) + " has fewer than 3 edges");
            for (auto j : face) {
                if (j >= edge_count()) throw Error(ErrorKind::invalid_polyhedron, "face " + std::to_string(fi + 1) + " names a missing edge");
                ++uses[j];
            }
            if (!is_single_cycle(face)) {
                throw Error(ErrorKind::invalid_polyhedron, "edges of face " + std::to_string(fi + 1) + " are not one cycle");
            }
        }
        for (std::size_t j = 0; j < uses.size(); ++j) {
            if (uses[j] != 2) {
                throw Error(ErrorKind::invalid_polyhedron,
                            "edge " + std::to_string(j + 1) + " lies on " + std::to_string(uses[j]) + " faces, not 2");
            }
        }
    }

    /// f x e matrix whose rows are the faces.
    [[nodiscard]] BitMatrix face_matrix() const {
        BitMatrix m(face_count(), edge_count());
        for (std::size_t i = 0; i < faces.size(); ++i) {
            for (auto j : faces[i]) m.set(i, j);
        }
        return m;
    }

private:
    [[nodiscard]] bool is_single_cycle(const std::vector<std::size_t>& face) const {
        std::map<std::size_t, std::vector<std::size_t>> adjacency;
        for (auto j : face) {
            auto [u, v] = graph.edges[j];
            adjacency[u].push_back(v);
            adjacency[v].push_back(u);
        }
        for (const auto& [vertex, nbrs] : adjacency) {
            if (nbrs.size() != 2) return false;
        }
        // A 2-regular graph is one cycle iff walking from any vertex visits all.
        std::size_t prev = adjacency.begin()->first;
        std::size_t cur = adjacency.begin()->second.front();
        std::size_t steps = 1;
        while (cur != adjacency.begin()->first) {
            const auto& nb = adjacency[cur];
            const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++steps;
        }
        return steps == adjacency.size();
    }
};

struct PolyhedronCode {
    LinearCode code;
    BitMatrix face_matrix;
};

/// The [e, f-1] code of a polyhedron together with its face matrix.
inline PolyhedronCode polyhedron_code(const Polyhedron& p) {
    p.validate();
    auto code = graph_code(p.graph);
    auto faces = p.face_matrix();
    for (const auto& row : faces.row_vectors()) {
        if (!code.contains(row)) throw Error(ErrorKind::invalid_polyhedron, "a face fails a vertex parity check");
    }
    return {std::move(code), std::move(faces)};
}

/// Vertices become faces and faces become vertices; edge labels are kept.
inline Polyhedron dual_polyhedron(const Polyhedron& p, std::string name = {}) {
    p.validate();
    std::vector<std::array<std::size_t, 2>> sides(p.edge_count());
    std::vector<std::size_t> filled(p.edge_count(), 0);
    for (std::size_t f = 0; f < p.faces.size(); ++f) {
        for (auto j : p.faces[f]) sides[j][filled[j]++] = f;
    }
    Polyhedron d;
    d.name = std::move(name);
    d.graph.vertex_count = p.face_count();
    for (const auto& s : sides) d.graph.edges.emplace_back(s[0], s[1]);
    d.faces.assign(p.vertex_count(), {});
    for (std::size_t j = 0; j < p.edge_count(); ++j) {
        d.faces[p.graph.edges[j].first].push_back(j);
        d.faces[p.graph.edges[j].second].push_back(j);
    }
    d.validate();
    return d;
}

namespace detail {

using OneBasedEdges = std::vector<std::pair<std::size_t, std::size_t>>;
using OneBasedFaces = std::vector<std::vector<std::size_t>>;

inline Polyhedron from_one_based(std::string name, std::size_t vertices, const OneBasedEdges& edges,
                                 const OneBasedFaces& faces) {
    Polyhedron p;
    p.name = std::move(name);
    p.graph.vertex_count = vertices;
    for (auto [u, v] : edges) p.graph.edges.emplace_back(u - 1, v - 1);
    for (const auto& f : faces) {
        std::vector<std::size_t> face;
        for (auto j : f) face.push_back(j - 1);
        p.faces.push_back(std::move(face));
    }
    p.validate();
    return p;
}

inline Polyhedron tetrahedron() {
    return from_one_based("tetrahedron", 4, {{1, 3}, {1, 2}, {2, 3}, {3, 4}, {1, 4}, {2, 4}},
                          {{1, 4, 5}, {2, 5, 6}, {3, 4, 6}, {1, 2, 3}});
}

inline Polyhedron cube() {
    return from_one_based("cube", 8,
                          {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 8}, {5, 6}, {6, 7}, {7, 8}, {5, 8}},
                          {{1, 2, 3, 4}, {1, 5, 6, 9}, {2, 6, 7, 10}, {3, 7, 8, 11}, {4, 5, 8, 12}, {9, 10, 11, 12}});
}

inline Polyhedron icosahedron() {
    Polyhedron p;
    p.name = "icosahedron";
    p.graph.vertex_count = 12;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    auto add = [&](std::size_t u, std::size_t v) {
        index[std::minmax(u, v)] = p.graph.edges.size();
        p.graph.edges.emplace_back(u, v);
    };
    auto up = [](std::size_t i) { return 1 + i % 5; };
    auto low = [](std::size_t i) { return 6 + i % 5; };
    for (std::size_t i = 0; i < 5; ++i) add(0, up(i));
    for (std::size_t i = 0; i < 5; ++i) add(up(i), up(i + 1));
    for (std::size_t i = 0; i < 5; ++i) {
        add(low(i), up(i));
        add(low(i), up(i + 1));
    }
    for (std::size_t i = 0; i < 5; ++i) add(low(i), low(i + 1));
    for (std::size_t i = 0; i < 5; ++i) add(11, low(i));

    auto triangle = [&](std::size_t a, std::size_t b, std::size_t c) {
        p.faces.push_back({index.at(std::minmax(a, b)), index.at(std::minmax(b, c)), index.at(std::minmax(a, c))});
    };
    for (std::size_t i = 0; i < 5; ++i) triangle(0, up(i), up(i + 1));
    for (std::size_t i = 0; i < 5; ++i) triangle(up(i), up(i + 1), low(i));
    for (std::size_t i = 0; i < 5; ++i) triangle(low(i), low(i + 1), up(i + 1));
    for (std::size_t i = 0; i < 5; ++i) triangle(11, low(i), low(i + 1));
    p.validate();
    return p;
}

}  // namespace detail

inline constexpr std::array<std::string_view, 5> platonic_names{"tetrahedron", "cube", "octahedron", "dodecahedron",
                                                                "icosahedron"};

inline Polyhedron platonic(std::string_view name) {
    if (name == "tetrahedron") return detail::tetrahedron();
    if (name == "cube") return detail::cube();
    if (name == "octahedron") return dual_polyhedron(detail::cube(), "octahedron");
    if (name == "icosahedron") return detail::icosahedron();
    if (name == "dodecahedron") return dual_polyhedron(detail::icosahedron(), "dodecahedron");
    throw Error(ErrorKind::unknown_name, "no Platonic solid named '" + std::string(name) + "'");
}

inline std::string_view platonic_dual_of(std::string_view name) {
    if (name == "tetrahedron") return "tetrahedron";
    if (name == "cube") return "octahedron";
    if (name == "octahedron") return "cube";
    if (name == "dodecahedron") return "icosahedron";
    if (name == "icosahedron") return "dodecahedron";
    throw Error(ErrorKind::unknown_name, "no Platonic solid named '" + std::string(name) + "'");
}

}  // namespace lrc
