#include "necgraph/graph.hpp"

#include <stdexcept>

namespace necgraph {

GraphBuilder::GraphBuilder(int order) {
    if (order < 0) throw std::invalid_argument("GraphBuilder: negative order");
    rows_.assign(static_cast<std::size_t>(order), VertexSet(order));
}

void GraphBuilder::add_edge(int x, int y) {
    if (x == y) throw std::invalid_argument("GraphBuilder: loops are not allowed");
    rows_.at(static_cast<std::size_t>(x)).set(y);
    rows_.at(static_cast<std::size_t>(y)).set(x);
}

bool GraphBuilder::has_edge(int x, int y) const {
    return rows_.at(static_cast<std::size_t>(x)).test(y);
}

Graph complement(const Graph& g) {
    const int v = g.order();
    GraphBuilder b(v);
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y)
            if (!g.adjacent(x, y)) b.add_edge(x, y);
    return b.build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (keep.capacity() != g.order())
        throw std::invalid_argument("induced_subgraph: vertex set capacity does not match graph order");
    const std::vector<int> verts = keep.members();
    const int m = static_cast<int>(verts.size());
    GraphBuilder b(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]))
                b.add_edge(i, j);
    return b.build();
}

}  // namespace necgraph
