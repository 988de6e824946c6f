#include "necgraph/adjacency.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "necgraph/graph_io.hpp"
#include "necgraph/isomorphism.hpp"

namespace necgraph {

int gamma(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.capacity() != g.order() || b.capacity() != g.order())
        throw std::invalid_argument("gamma: vertex set capacity does not match graph order");
    if (a.intersects(b)) throw std::invalid_argument("gamma: A and B overlap");
    VertexSet cand = VertexSet::full(g.order());
    for (int v = a.first(); v >= 0; v = a.next(v)) cand &= g.neighborhood(v);
    for (int v = b.first(); v >= 0; v = b.next(v)) cand.and_not(g.neighborhood(v));
    cand.and_not(a);
    cand.and_not(b);
    return cand.count();
}

namespace {

struct EcFailure {
    std::vector<int> subset;  // ascending
    unsigned mask = 0;
};

bool failure_earlier(const EcFailure& a, const EcFailure& b) {
    if (a.subset != b.subset) return a.subset < b.subset;
    return a.mask < b.mask;
}

// Scans every n-subset whose least element lies in [f_lo, f_hi), in
// lexicographic order, and returns the first failing bipartition. winner_f
// lets a parallel caller cancel ranges that can no longer hold the least
// failure.
std::optional<EcFailure> scan_ec_range(const Graph& g, int n, int f_lo, int f_hi,
                                       std::atomic<int>* winner_f) {
    const int v = g.order();
    const VertexSet all = VertexSet::full(v);
    VertexSet cand(v);
    VertexSet sset(v);
    std::vector<int> c(static_cast<std::size_t>(n));
    const unsigned mask_end = 1u << n;
    long long steps = 0;

    for (int f = f_lo; f < f_hi; ++f) {
        for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = f + i;
        while (true) {
            if (winner_f && (++steps & 255) == 0 && winner_f->load(std::memory_order_relaxed) < f_lo)
                return std::nullopt;

            sset.clear();
            for (int x : c) sset.set(x);
            for (unsigned mask = 0; mask < mask_end; ++mask) {
                cand = all;
                bool dead = false;
                for (int i = 0; i < n; ++i) {
                    if ((mask >> i) & 1u)
                        cand &= g.neighborhood(c[static_cast<std::size_t>(i)]);
                    else
                        cand.and_not(g.neighborhood(c[static_cast<std::size_t>(i)]));
                    if (cand.empty()) {
                        dead = true;
                        break;
                    }
                }
                if (!dead) {
                    cand.and_not(sset);
                    dead = cand.empty();
                }
                if (dead) return EcFailure{c, mask};
            }

            // advance the tail of the combination, keeping c[0] == f
            int i = n - 1;
            while (i >= 1 && c[static_cast<std::size_t>(i)] == v - (n - i)) --i;
            if (i < 1) break;
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

EcReport report_from(const Graph& g, int n, const std::optional<EcFailure>& fail) {
    EcReport rep;
    rep.n = n;
    rep.holds = !fail.has_value();
    if (fail) {
        VertexSet a(g.order()), b(g.order());
        for (int i = 0; i < n; ++i) {
            if ((fail->mask >> i) & 1u)
                a.set(fail->subset[static_cast<std::size_t>(i)]);
            else
                b.set(fail->subset[static_cast<std::size_t>(i)]);
        }
        rep.witness = std::make_pair(std::move(a), std::move(b));
    }
    return rep;
}

void check_ec_args(const Graph& g, int n) {
    if (n < 1) throw std::invalid_argument("is_n_ec: n must be at least 1");
    if (n >= g.order())
        throw std::invalid_argument("is_n_ec: n must be smaller than the graph order");
    if (n > 30) throw std::invalid_argument("is_n_ec: n guard (30) exceeded");
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

EcReport is_n_ec(const Graph& g, int n, int jobs) {
    check_ec_args(g, n);
    const int v = g.order();
    const int f_end = v - n + 1;
    if (jobs < 1) jobs = 1;

    if (jobs == 1 || f_end < 2)
        return report_from(g, n, scan_ec_range(g, n, 0, f_end, nullptr));

    // split the first-element range into contiguous chunks of similar weight
    std::vector<int> cuts{0};
    {
        double total = 0;
        for (int f = 0; f < f_end; ++f) total += binom(v - 1 - f, n - 1);
        double goal = total / jobs, acc = 0;
        for (int f = 0; f < f_end && static_cast<int>(cuts.size()) < jobs; ++f) {
            acc += binom(v - 1 - f, n - 1);
            if (acc >= goal * static_cast<double>(cuts.size()) && f + 1 < f_end) cuts.push_back(f + 1);
        }
        cuts.push_back(f_end);
    }

    const std::size_t chunks = cuts.size() - 1;
    std::vector<std::optional<EcFailure>> results(chunks);
    std::atomic<int> winner_f{f_end};
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (std::size_t ci = 0; ci < chunks; ++ci) {
        pool.emplace_back([&, ci] {
            auto r = scan_ec_range(g, n, cuts[ci], cuts[ci + 1], &winner_f);
            if (r) {
                results[ci] = std::move(r);
                int cur = winner_f.load();
                while (cuts[ci] < cur && !winner_f.compare_exchange_weak(cur, cuts[ci])) {
                }
            }
        });
    }
    for (auto& t : pool) t.join();

    std::optional<EcFailure> best;
    for (auto& r : results)
        if (r && (!best || failure_earlier(*r, *best))) best = std::move(r);
    return report_from(g, n, best);
}

EcReport naive_is_n_ec(const Graph& g, int n) {
    check_ec_args(g, n);
    const int v = g.order();

    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(v),
                                       std::vector<bool>(static_cast<std::size_t>(v), false));
    for (int x = 0; x < v; ++x)
        for (int y = 0; y < v; ++y)
            if (x != y) adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = g.adjacent(x, y);

    std::vector<int> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = i;
    const unsigned mask_end = 1u << n;

    while (true) {
        std::vector<bool> inset(static_cast<std::size_t>(v), false);
        for (int x : c) inset[static_cast<std::size_t>(x)] = true;
        for (unsigned mask = 0; mask < mask_end; ++mask) {
            int count = 0;
            for (int z = 0; z < v && count == 0; ++z) {
                if (inset[static_cast<std::size_t>(z)]) continue;
                bool ok = true;
                for (int i = 0; i < n && ok; ++i) {
                    bool want = (mask >> i) & 1u;
                    if (adj[static_cast<std::size_t>(z)][static_cast<std::size_t>(c[static_cast<std::size_t>(i)])] != want)
                        ok = false;
                }
                if (ok) ++count;
            }
            if (count == 0) return report_from(g, n, EcFailure{c, mask});
        }

        int i = n - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == v - (n - i)) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return report_from(g, n, std::nullopt);
}

int max_ec(const Graph& g, int cap, int jobs) {
    if (cap < 0) throw std::invalid_argument("max_ec: negative cap");
    int best = 0;
    for (int n = 1; n <= cap && n < g.order(); ++n) {
        if (!is_n_ec(g, n, jobs).holds) break;
        best = n;
    }
    return best;
}

namespace {

Graph graph_from_mask(int r, unsigned mask) {
    GraphBuilder b(r);
    int bit = 0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j, ++bit)
            if ((mask >> bit) & 1u) b.add_edge(i, j);
    return b.build();
}

std::vector<Graph> build_catalog(int r) {
    std::vector<Graph> classes;
    const unsigned masks = 1u << (r * (r - 1) / 2);
    for (unsigned m = 0; m < masks; ++m) {
        Graph g = graph_from_mask(r, m);
        bool fresh = true;
        for (const Graph& c : classes) {
            if (is_isomorphic_small(g, c)) {
                fresh = false;
                break;
            }
        }
        if (fresh) classes.push_back(std::move(g));
    }
    return classes;
}

}  // namespace

const std::vector<Graph>& graph_catalog(int r) {
    if (r < 1 || r > 5) throw std::invalid_argument("graph_catalog: r must lie in 1..5");
    static const std::array<std::vector<Graph>, 6> catalogs = [] {
        std::array<std::vector<Graph>, 6> cs;
        for (int k = 1; k <= 5; ++k) cs[static_cast<std::size_t>(k)] = build_catalog(k);
        return cs;
    }();
    return catalogs[static_cast<std::size_t>(r)];
}

namespace {

// Backtracking induced embedding with bitset candidate filtering. Pattern
// vertices are placed in a connectivity-greedy static order; pin_pattern
// fixes one pattern vertex to the host vertex pin_host (-1 disables).
struct EmbedSearch {
    const Graph& host;
    const Graph& pattern;
    int pin_pattern;
    int pin_host;
    std::vector<int> order;
    std::vector<int> image;
    VertexSet used;
    std::vector<VertexSet> host_nonadj;

    EmbedSearch(const Graph& h, const Graph& p, int pp, int ph)
        : host(h), pattern(p), pin_pattern(pp), pin_host(ph), used(h.order()) {
        const int pn = pattern.order();
        std::vector<char> placed(static_cast<std::size_t>(pn), 0);
        order.reserve(static_cast<std::size_t>(pn));
        if (pin_pattern >= 0) {
            order.push_back(pin_pattern);
            placed[static_cast<std::size_t>(pin_pattern)] = 1;
        }
        while (static_cast<int>(order.size()) < pn) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int u = 0; u < pn; ++u) {
                if (placed[static_cast<std::size_t>(u)]) continue;
                int links = 0;
                for (int w : order)
                    if (pattern.adjacent(u, w)) ++links;
                const int deg = pattern.degree(u);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = u;
                    best_links = links;
                    best_deg = deg;
                }
            }
            order.push_back(best);
            placed[static_cast<std::size_t>(best)] = 1;
        }
        image.assign(static_cast<std::size_t>(pn), -1);
        const int hn = host.order();
        host_nonadj.reserve(static_cast<std::size_t>(hn));
        for (int w = 0; w < hn; ++w) {
            VertexSet na = VertexSet::full(hn);
            na.and_not(host.neighborhood(w));
            na.reset(w);
            host_nonadj.push_back(std::move(na));
        }
    }

    bool go(std::size_t depth) {
        if (depth == order.size()) return true;
        const int u = order[depth];
        VertexSet cand = VertexSet::full(host.order());
        for (std::size_t d = 0; d < depth; ++d) {
            const int u2 = order[d];
            const int w2 = image[static_cast<std::size_t>(u2)];
            if (pattern.adjacent(u, u2))
                cand &= host.neighborhood(w2);
            else
                cand &= host_nonadj[static_cast<std::size_t>(w2)];
        }
        cand.and_not(used);
        for (int w = cand.first(); w >= 0; w = cand.next(w)) {
            if (u == pin_pattern && w != pin_host) continue;
            if (host.degree(w) < pattern.degree(u)) continue;
            image[static_cast<std::size_t>(u)] = w;
            used.set(w);
            if (go(depth + 1)) return true;
            used.reset(w);
            image[static_cast<std::size_t>(u)] = -1;
        }
        return false;
    }
};

bool embed_search(const Graph& host, const Graph& pattern, int pin_pattern, int pin_host) {
    if (pattern.order() == 0) return true;
    if (pattern.order() > host.order()) return false;
    EmbedSearch s(host, pattern, pin_pattern, pin_host);
    return s.go(0);
}

}  // namespace

bool embeds_induced(const Graph& host, const Graph& pattern) {
    return embed_search(host, pattern, -1, -1);
}

bool embeds_induced_anchored(const Graph& host, const Graph& pattern, int anchor) {
    if (anchor < 0 || anchor >= host.order())
        throw std::out_of_range("embeds_induced_anchored: anchor out of range");
    for (int u = 0; u < pattern.order(); ++u)
        if (embed_search(host, pattern, u, anchor)) return true;
    return false;
}

FullnessReport is_r_full(const Graph& g, int r) {
    FullnessReport rep;
    rep.r = r;
    rep.holds = true;
    for (const Graph& pattern : graph_catalog(r)) {
        if (!embeds_induced(g, pattern)) {
            rep.holds = false;
            rep.missing = pattern;
            break;
        }
    }
    return rep;
}

namespace {

std::string join_members(const VertexSet& s) {
    std::ostringstream out;
    bool sep = false;
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        if (sep) out << ',';
        out << v;
        sep = true;
    }
    return out.str();
}

std::string space_members(const VertexSet& s) {
    std::ostringstream out;
    bool sep = false;
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        if (sep) out << ' ';
        out << v;
        sep = true;
    }
    return out.str();
}

}  // namespace

std::string EcReport::to_text() const {
    std::ostringstream out;
    out << "property: nec\n";
    out << "n: " << n << '\n';
    out << "holds: " << (holds ? "true" : "false") << '\n';
    if (witness) {
        out << "witness-A: " << space_members(witness->first) << '\n';
        out << "witness-B: " << space_members(witness->second) << '\n';
    }
    return out.str();
}

std::string EcReport::to_kv() const {
    std::ostringstream out;
    out << "property=nec n=" << n << " holds=" << (holds ? "true" : "false");
    if (witness)
        out << " witness-a=" << join_members(witness->first)
            << " witness-b=" << join_members(witness->second);
    return out.str();
}

std::string FullnessReport::to_text() const {
    std::ostringstream out;
    out << "property: full\n";
    out << "r: " << r << '\n';
    out << "holds: " << (holds ? "true" : "false") << '\n';
    if (missing) out << "missing: " << encode_graph6(*missing) << '\n';
    return out.str();
}

std::string FullnessReport::to_kv() const {
    std::ostringstream out;
    out << "property=full r=" << r << " holds=" << (holds ? "true" : "false");
    if (missing) out << " missing=" << encode_graph6(*missing);
    return out.str();
}

}  // namespace necgraph
