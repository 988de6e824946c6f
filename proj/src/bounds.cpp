#include "necgraph/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "necgraph/srg.hpp"

namespace necgraph {

namespace {

void require_nondegenerate(const PgParams& pg) {
    if (!pg.nondegenerate())
        throw std::invalid_argument("degenerate geometry parameters: " + pg.to_string());
}

// integer range where s^2 - b s + c <= 0
SRange poly_range(long long b, long long c) {
    const auto val = [&](long long s) { return s * s - b * s + c; };
    const long long disc = b * b - 4 * c;
    if (disc < 0) return {};
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(disc)));
    while (r > 0 && r * r > disc) --r;
    while ((r + 1) * (r + 1) <= disc) ++r;
    long long lo = (b - r) / 2 - 2;
    long long hi = (b + r) / 2 + 2;
    while (lo <= hi && val(lo) > 0) ++lo;
    while (hi >= lo && val(hi) > 0) --hi;
    if (lo > hi) return {};
    return {static_cast<int>(lo), static_cast<int>(hi)};
}

BoundEntry entry(std::string name, bool applicable, long long slack) {
    BoundEntry e;
    e.name = std::move(name);
    e.applicable = applicable;
    e.satisfied = !applicable || slack >= 0;
    e.slack = applicable ? slack : 0;
    return e;
}

std::string entry_text(const BoundEntry& e) {
    if (!e.applicable) return e.name + ": n/a";
    return e.name + ": " + (e.satisfied ? "ok" : "violated") + " (slack " +
           std::to_string(e.slack) + ")";
}

std::string entry_kv(const BoundEntry& e) {
    if (!e.applicable) return e.name + "=na";
    return e.name + "=" + (e.satisfied ? "ok" : "viol") + " " + e.name +
           ".slack=" + std::to_string(e.slack);
}

}  // namespace

int basic_nec_cap(const PgParams& pg) {
    require_nondegenerate(pg);
    return std::min({pg.s - pg.alpha + 1, pg.t + 1, pg.alpha + 1});
}

BoundEntry srg_3ec_test(const SrgParams& p) {
    const long long lhs = static_cast<long long>(p.mu) * (p.k - p.lambda - 3);
    const long long rhs = static_cast<long long>(p.v) - 2 * p.k + p.mu - 2;
    return entry("srg-3ec", true, lhs - rhs);
}

BoundEntry geometric_3ec_test(const PgParams& pg) {
    require_nondegenerate(pg);
    if (pg.t == 1) return entry("geo-3ec", false, 0);
    const long long s = pg.s, t = pg.t, a = pg.alpha;
    const long long factor = (s >= 2 * a - 1) ? (s - 2 * a + 2) : (s - a + 1);
    const long long lhs = a * a * (t * t - 1) * factor;
    const long long rhs = (s + 1) * (s * t + a) + a * (a - 2 * s) * (t + 1) - 2 * a;
    return entry("geo-3ec", true, lhs - rhs);
}

SRange net_3ec_polynomial(int t) {
    if (t < 2) throw std::invalid_argument("net polynomial needs t >= 2");
    const long long tt = t;
    return poly_range(tt * tt * tt + tt,
                      2 * tt * tt * tt * tt - 2 * tt * tt * tt - tt * tt + 3 * tt - 1);
}

SRange dual_design_3ec_polynomial(int t) {
    if (t < 2) throw std::invalid_argument("dual design polynomial needs t >= 2");
    const long long tt = t;
    return poly_range(tt * tt * tt + 2 * tt * tt + 2 * tt,
                      2 * tt * tt * tt * tt + 4 * tt * tt * tt + tt * tt - tt);
}

bool sts_admissible(int v) {
    if (v < 7) throw std::invalid_argument("triple system order below 7");
    return v % 6 == 1 || v % 6 == 3;
}

BoundReport screen(const PgParams& pg) {
    require_nondegenerate(pg);
    BoundReport r;
    r.pg = pg;
    if (pg.alpha < pg.s + 1) {
        const long long num = static_cast<long long>(pg.s + 1) *
                              (static_cast<long long>(pg.s) * pg.t + pg.alpha);
        if (num % pg.alpha == 0) r.srg = pg_point_graph_params(pg);
    }
    r.basic_cap = basic_nec_cap(pg);

    BoundEntry two_ec = entry("2ec", true, pg.s - pg.alpha - 1);
    if (two_ec.satisfied && complement_triangle_free_geo(pg)) two_ec.satisfied = false;
    r.entries.push_back(two_ec);

    r.entries.push_back(r.srg ? srg_3ec_test(*r.srg) : entry("srg-3ec", false, 0));
    r.entries.push_back(geometric_3ec_test(pg));

    if (pg.alpha == pg.t && pg.t >= 2) {
        const long long tt = pg.t, s = pg.s;
        const long long poly = s * s - (tt * tt * tt + tt) * s + 2 * tt * tt * tt * tt -
                               2 * tt * tt * tt - tt * tt + 3 * tt - 1;
        r.entries.push_back(entry("net-poly", true, -poly));
    } else {
        r.entries.push_back(entry("net-poly", false, 0));
    }

    if (pg.alpha == pg.t + 1 && pg.t >= 2) {
        const long long tt = pg.t, s = pg.s;
        const long long poly = s * s - (tt * tt * tt + 2 * tt * tt + 2 * tt) * s +
                               2 * tt * tt * tt * tt + 4 * tt * tt * tt + tt * tt - tt;
        r.entries.push_back(entry("dual-poly", true, -poly));
    } else {
        r.entries.push_back(entry("dual-poly", false, 0));
    }

    int cap = r.basic_cap;
    for (const auto& e : r.entries) {
        if (!e.applicable || e.satisfied) continue;
        cap = std::min(cap, e.name == "2ec" ? 1 : 2);
    }
    r.n_max_possible = cap;
    return r;
}

std::string BoundReport::to_text() const {
    std::string out = "pg: " + pg.to_string() + "\n";
    out += "srg: " + (srg ? srg->to_string() : std::string("none")) + "\n";
    out += "basic-cap: " + std::to_string(basic_cap) + "\n";
    for (const auto& e : entries) out += entry_text(e) + "\n";
    out += "n-max: " + std::to_string(n_max_possible) + "\n";
    return out;
}

std::string BoundReport::to_kv() const {
    std::string out = "pg=" + pg.to_string();
    out += " srg=" + (srg ? srg->to_string() : std::string("none"));
    out += " basic-cap=" + std::to_string(basic_cap);
    for (const auto& e : entries) out += " " + entry_kv(e);
    out += " n-max=" + std::to_string(n_max_possible);
    return out;
}

}  // namespace necgraph
