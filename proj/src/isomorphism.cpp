#include "necgraph/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace necgraph {

namespace detail {

namespace {

struct Search {
    const Graph& g;
    const Graph& h;
    const std::vector<int>* gc;
    const std::vector<int>* hc;
    std::vector<int> order;  // g vertices, high degree first
    std::vector<int> map;    // g vertex -> h vertex or -1
    std::vector<char> used;  // h vertex taken

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const int u = order[depth];
        const int du = g.degree(u);
        for (int w = 0; w < h.order(); ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (gc && (*gc)[static_cast<std::size_t>(u)] != (*hc)[static_cast<std::size_t>(w)]) continue;
            if (h.degree(w) != du) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth; ++d) {
                const int u2 = order[d];
                if (g.adjacent(u, u2) != h.adjacent(w, map[static_cast<std::size_t>(u2)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(u)] = w;
            used[static_cast<std::size_t>(w)] = 1;
            if (extend(depth + 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
            map[static_cast<std::size_t>(u)] = -1;
        }
        return false;
    }
};

}  // namespace

bool isomorphic_core(const Graph& g, const Graph& h, const std::vector<int>* g_colors,
                     const std::vector<int>* h_colors) {
    const int n = g.order();
    if (n != h.order()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    if ((g_colors == nullptr) != (h_colors == nullptr))
        throw std::invalid_argument("isomorphic_core: colors must be given for both graphs or neither");

    // invariant prefilter: multiset of (color, degree)
    auto signature = [](const Graph& gr, const std::vector<int>* c) {
        std::vector<std::pair<int, int>> sig;
        for (int v = 0; v < gr.order(); ++v)
            sig.emplace_back(c ? (*c)[static_cast<std::size_t>(v)] : 0, gr.degree(v));
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    if (signature(g, g_colors) != signature(h, h_colors)) return false;

    Search s{g, h, g_colors, h_colors, {}, {}, {}};
    s.order.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) s.order[static_cast<std::size_t>(v)] = v;
    std::sort(s.order.begin(), s.order.end(),
              [&](int a, int b) { return std::make_pair(-g.degree(a), a) < std::make_pair(-g.degree(b), b); });
    s.map.assign(static_cast<std::size_t>(n), -1);
    s.used.assign(static_cast<std::size_t>(n), 0);
    return s.extend(0);
}

}  // namespace detail

bool is_isomorphic_small(const Graph& g, const Graph& h) {
    if (g.order() > 12 || h.order() > 12)
        throw std::invalid_argument("is_isomorphic_small: order guard (12) exceeded");
    return detail::isomorphic_core(g, h, nullptr, nullptr);
}

}  // namespace necgraph
