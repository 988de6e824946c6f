#pragma once

#include <utility>
#include <vector>

#include "necgraph/vertex_set.hpp"

namespace necgraph {

// Immutable simple graph on vertices 0..order-1. Adjacency is stored as one
// bitset row per vertex, so neighborhood intersections run word-parallel.
// Symmetry and irreflexivity hold by construction: the only way to make a
// Graph is through GraphBuilder, which writes both directions and rejects
// loops.
class Graph {
public:
    Graph() = default;

    int order() const { return static_cast<int>(rows_.size()); }

    bool adjacent(int x, int y) const { return rows_.at(static_cast<std::size_t>(x)).test(y); }

    const VertexSet& neighborhood(int x) const { return rows_.at(static_cast<std::size_t>(x)); }

    int degree(int x) const { return neighborhood(x).count(); }

    long long edge_count() const {
        long long d = 0;
        for (const auto& r : rows_) d += r.count();
        return d / 2;
    }

    // sorted pairs (x, y) with x < y
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int x = 0; x < order(); ++x)
            for (int y = rows_[static_cast<std::size_t>(x)].next(x); y >= 0;
                 y = rows_[static_cast<std::size_t>(x)].next(y))
                out.emplace_back(x, y);
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;
    explicit Graph(std::vector<VertexSet> rows) : rows_(std::move(rows)) {}

    std::vector<VertexSet> rows_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int order);

    int order() const { return static_cast<int>(rows_.size()); }

    void add_edge(int x, int y);  // rejects loops and out-of-range indices
    bool has_edge(int x, int y) const;

    Graph build() const { return Graph(rows_); }

private:
    std::vector<VertexSet> rows_;
};

Graph complement(const Graph& g);

// Subgraph induced on the members of `keep`, relabeled 0..|keep|-1 in
// ascending vertex order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace necgraph
