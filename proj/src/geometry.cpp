#include "necgraph/geometry.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "necgraph/graph_io.hpp"
#include "necgraph/isomorphism.hpp"
#include "necgraph/vertex_set.hpp"

namespace necgraph {

namespace {

std::string int_list(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

IncidenceStructure IncidenceStructure::make(int points, std::vector<std::vector<int>> lines) {
    if (points < 0) throw std::invalid_argument("negative point count");
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto& ln = lines[i];
        if (ln.size() < 2)
            throw std::invalid_argument("line " + std::to_string(i) +
                                        " has fewer than two points");
        std::sort(ln.begin(), ln.end());
        if (ln.front() < 0 || ln.back() >= points)
            throw std::invalid_argument("line " + std::to_string(i) +
                                        " has a point index out of range");
        if (std::adjacent_find(ln.begin(), ln.end()) != ln.end())
            throw std::invalid_argument("line " + std::to_string(i) +
                                        " repeats a point");
    }
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (lines[i] == lines[j])
                throw std::invalid_argument("lines " + std::to_string(i) + " and " +
                                            std::to_string(j) + " are equal");
    return IncidenceStructure(points, std::move(lines));
}

const char* pg_axiom_name(PgAxiom a) {
    switch (a) {
        case PgAxiom::partial_linear: return "partial-linear";
        case PgAxiom::line_size: return "line-size";
        case PgAxiom::point_degree: return "point-degree";
        case PgAxiom::alpha_constant: return "alpha-constant";
        case PgAxiom::nondegenerate: return "nondegenerate";
    }
    return "?";
}

PgVerification verify_partial_geometry(const IncidenceStructure& s) {
    const int np = s.points();
    const int nl = s.line_count();
    if (nl == 0) return {std::nullopt, PgAxiom::line_size, "structure has no lines"};

    std::vector<VertexSet> on_line;
    on_line.reserve(static_cast<std::size_t>(nl));
    for (int i = 0; i < nl; ++i) {
        VertexSet vs(np);
        for (int p : s.line(i)) vs.set(p);
        on_line.push_back(std::move(vs));
    }

    for (int i = 0; i < nl; ++i) {
        for (int j = i + 1; j < nl; ++j) {
            VertexSet both = on_line[static_cast<std::size_t>(i)];
            both &= on_line[static_cast<std::size_t>(j)];
            if (both.count() >= 2) {
                const int a = both.first();
                const int b = both.next(a);
                return {std::nullopt, PgAxiom::partial_linear,
                        "points " + std::to_string(a) + " and " + std::to_string(b) +
                            " lie on lines " + std::to_string(i) + " and " +
                            std::to_string(j)};
            }
        }
    }

    const int line_size = static_cast<int>(s.line(0).size());
    for (int i = 1; i < nl; ++i) {
        if (static_cast<int>(s.line(i).size()) != line_size)
            return {std::nullopt, PgAxiom::line_size,
                    "line " + std::to_string(i) + " has " +
                        std::to_string(s.line(i).size()) + " points, line 0 has " +
                        std::to_string(line_size)};
    }

    std::vector<int> degree(static_cast<std::size_t>(np), 0);
    for (int i = 0; i < nl; ++i)
        for (int p : s.line(i)) ++degree[static_cast<std::size_t>(p)];
    for (int p = 1; p < np; ++p) {
        if (degree[static_cast<std::size_t>(p)] != degree[0])
            return {std::nullopt, PgAxiom::point_degree,
                    "point " + std::to_string(p) + " lies on " +
                        std::to_string(degree[static_cast<std::size_t>(p)]) +
                        " lines, point 0 on " + std::to_string(degree[0])};
    }

    // collinear[p]: points sharing a line with p, p excluded
    std::vector<VertexSet> collinear(static_cast<std::size_t>(np), VertexSet(np));
    for (int i = 0; i < nl; ++i)
        for (int p : s.line(i)) {
            collinear[static_cast<std::size_t>(p)] |= on_line[static_cast<std::size_t>(i)];
        }
    for (int p = 0; p < np; ++p) collinear[static_cast<std::size_t>(p)].reset(p);

    int alpha = -1;
    for (int p = 0; p < np; ++p) {
        for (int i = 0; i < nl; ++i) {
            if (on_line[static_cast<std::size_t>(i)].test(p)) continue;
            VertexSet seen = collinear[static_cast<std::size_t>(p)];
            seen &= on_line[static_cast<std::size_t>(i)];
            const int c = seen.count();
            if (alpha == -1) {
                alpha = c;
            } else if (c != alpha) {
                return {std::nullopt, PgAxiom::alpha_constant,
                        "point " + std::to_string(p) + " off line " + std::to_string(i) +
                            " sees " + std::to_string(c) + " points, elsewhere " +
                            std::to_string(alpha)};
            }
        }
    }
    if (alpha == -1)
        return {std::nullopt, PgAxiom::alpha_constant,
                "every point lies on every line"};

    const PgParams params{line_size - 1, degree[0] - 1, alpha};
    if (!params.nondegenerate())
        return {std::nullopt, PgAxiom::nondegenerate,
                "parameters " + params.to_string() + " are degenerate"};
    return {params, std::nullopt, ""};
}

const char* pg_class_name(PgClass c) {
    switch (c) {
        case PgClass::design: return "design";
        case PgClass::dual_design: return "dual-design";
        case PgClass::net: return "net";
        case PgClass::transversal_design: return "transversal-design";
        case PgClass::generalized_quadrangle: return "generalized-quadrangle";
        case PgClass::proper: return "proper";
    }
    return "?";
}

std::set<PgClass> classify(const PgParams& p) {
    if (!p.nondegenerate())
        throw std::invalid_argument("degenerate geometry parameters: " + p.to_string());
    std::set<PgClass> out;
    if (p.alpha == p.s + 1) out.insert(PgClass::design);
    if (p.alpha == p.t + 1) out.insert(PgClass::dual_design);
    if (p.alpha == p.t) out.insert(PgClass::net);
    if (p.alpha == p.s) out.insert(PgClass::transversal_design);
    if (p.alpha == 1) out.insert(PgClass::generalized_quadrangle);
    if (out.empty()) out.insert(PgClass::proper);
    return out;
}

Graph point_graph(const IncidenceStructure& s) {
    const PgVerification ver = verify_partial_geometry(s);
    if (!ver.params.has_value())
        throw std::invalid_argument(std::string("not a partial geometry (") +
                                    pg_axiom_name(*ver.failed) + "): " + ver.detail);
    if (ver.params->alpha == ver.params->s + 1)
        throw std::domain_error("collinearity graph of " + ver.params->to_string() +
                                " is complete");
    GraphBuilder b(s.points());
    for (int i = 0; i < s.line_count(); ++i) {
        const auto& ln = s.line(i);
        for (std::size_t x = 0; x < ln.size(); ++x)
            for (std::size_t y = x + 1; y < ln.size(); ++y) b.add_edge(ln[x], ln[y]);
    }
    return b.build();
}

IncidenceStructure dual(const IncidenceStructure& s) {
    std::vector<std::vector<int>> pencils(static_cast<std::size_t>(s.points()));
    for (int i = 0; i < s.line_count(); ++i)
        for (int p : s.line(i)) pencils[static_cast<std::size_t>(p)].push_back(i);
    return IncidenceStructure::make(s.line_count(), std::move(pencils));
}

LatinSquare LatinSquare::make(std::vector<std::vector<int>> cells) {
    const int n = static_cast<int>(cells.size());
    if (n < 1) throw std::invalid_argument("latin square must have positive order");
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(cells[static_cast<std::size_t>(r)].size()) != n)
            throw std::invalid_argument("row " + std::to_string(r) + " has wrong length");
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int x : cells[static_cast<std::size_t>(r)]) {
            if (x < 0 || x >= n)
                throw std::invalid_argument("entry out of range in row " + std::to_string(r));
            if (seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("row " + std::to_string(r) + " repeats " +
                                            std::to_string(x));
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int r = 0; r < n; ++r) {
            const int x = cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("column " + std::to_string(c) + " repeats " +
                                            std::to_string(x));
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }
    return LatinSquare(std::move(cells));
}

SteinerTripleSystem SteinerTripleSystem::make(int points,
                                              std::vector<std::vector<int>> triples) {
    if (points < 3) throw std::invalid_argument("triple system needs at least 3 points");
    for (std::size_t i = 0; i < triples.size(); ++i) {
        auto& tr = triples[i];
        if (tr.size() != 3)
            throw std::invalid_argument("block " + std::to_string(i) + " is not a triple");
        std::sort(tr.begin(), tr.end());
        if (tr[0] < 0 || tr[2] >= points)
            throw std::invalid_argument("block " + std::to_string(i) +
                                        " has a point out of range");
        if (tr[0] == tr[1] || tr[1] == tr[2])
            throw std::invalid_argument("block " + std::to_string(i) + " repeats a point");
    }
    std::vector<char> covered(static_cast<std::size_t>(points) * static_cast<std::size_t>(points), 0);
    auto slot = [points](int a, int b) {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(points) +
               static_cast<std::size_t>(b);
    };
    for (const auto& tr : triples) {
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                if (covered[slot(tr[static_cast<std::size_t>(a)], tr[static_cast<std::size_t>(b)])])
                    throw std::invalid_argument(
                        "pair " + std::to_string(tr[static_cast<std::size_t>(a)]) + " " +
                        std::to_string(tr[static_cast<std::size_t>(b)]) +
                        " is covered twice");
                covered[slot(tr[static_cast<std::size_t>(a)], tr[static_cast<std::size_t>(b)])] = 1;
            }
    }
    for (int a = 0; a < points; ++a)
        for (int b = a + 1; b < points; ++b)
            if (!covered[slot(a, b)])
                throw std::invalid_argument("pair " + std::to_string(a) + " " +
                                            std::to_string(b) + " is not covered");
    return SteinerTripleSystem(points, std::move(triples));
}

IncidenceStructure latin_square_to_net(const LatinSquare& sq) {
    const int n = sq.order();
    if (n < 3) throw std::invalid_argument("net needs a latin square of order >= 3");
    std::vector<std::vector<int>> lines;
    lines.reserve(static_cast<std::size_t>(3 * n));
    for (int r = 0; r < n; ++r) {
        std::vector<int> ln;
        for (int c = 0; c < n; ++c) ln.push_back(r * n + c);
        lines.push_back(std::move(ln));
    }
    for (int c = 0; c < n; ++c) {
        std::vector<int> ln;
        for (int r = 0; r < n; ++r) ln.push_back(r * n + c);
        lines.push_back(std::move(ln));
    }
    for (int v = 0; v < n; ++v) {
        std::vector<int> ln;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (sq.at(r, c) == v) ln.push_back(r * n + c);
        lines.push_back(std::move(ln));
    }
    return IncidenceStructure::make(n * n, std::move(lines));
}

IncidenceStructure sts_to_dual_geometry(const SteinerTripleSystem& sts) {
    std::vector<std::vector<int>> pencils(static_cast<std::size_t>(sts.points()));
    for (std::size_t i = 0; i < sts.triples().size(); ++i)
        for (int p : sts.triples()[i])
            pencils[static_cast<std::size_t>(p)].push_back(static_cast<int>(i));
    return IncidenceStructure::make(static_cast<int>(sts.triples().size()),
                                    std::move(pencils));
}

bool triangle_partition_check(const Graph& g, int x) {
    const std::vector<int> nb = g.neighborhood(x).members();
    const int d = static_cast<int>(nb.size());
    if (d == 0 || d % 3 != 0)
        throw std::invalid_argument("degree of vertex " + std::to_string(x) +
                                    " is not a positive multiple of 3");
    const int part = d / 3;

    // Lexicographically first partition, in restricted-growth order: assign
    // neighbors ascending, a new clique may only open when the previous ones
    // are nonempty.
    std::vector<int> cls(static_cast<std::size_t>(d), -1);
    std::array<int, 3> sizes{0, 0, 0};
    auto assign = [&](auto&& self, int i) -> bool {
        if (i == d) return true;
        for (int j = 0; j < 3; ++j) {
            if (sizes[static_cast<std::size_t>(j)] == part) continue;
            if (j > 0 && sizes[static_cast<std::size_t>(j - 1)] == 0) break;
            bool ok = true;
            for (int prev = 0; prev < i && ok; ++prev)
                if (cls[static_cast<std::size_t>(prev)] == j &&
                    !g.adjacent(nb[static_cast<std::size_t>(prev)], nb[static_cast<std::size_t>(i)]))
                    ok = false;
            if (!ok) continue;
            cls[static_cast<std::size_t>(i)] = j;
            ++sizes[static_cast<std::size_t>(j)];
            if (self(self, i + 1)) return true;
            --sizes[static_cast<std::size_t>(j)];
            cls[static_cast<std::size_t>(i)] = -1;
        }
        return false;
    };
    if (!assign(assign, 0))
        throw std::domain_error("neighborhood of vertex " + std::to_string(x) +
                                " has no partition into three equal cliques");

    std::array<std::vector<int>, 3> members;
    std::array<VertexSet, 3> mask{VertexSet(g.order()), VertexSet(g.order()),
                                  VertexSet(g.order())};
    for (int i = 0; i < d; ++i) {
        const int j = cls[static_cast<std::size_t>(i)];
        members[static_cast<std::size_t>(j)].push_back(nb[static_cast<std::size_t>(i)]);
        mask[static_cast<std::size_t>(j)].set(nb[static_cast<std::size_t>(i)]);
    }

    std::set<std::array<int, 3>> triangles;
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            const int c = 3 - a - b;
            for (int u : members[static_cast<std::size_t>(a)]) {
                for (int w : members[static_cast<std::size_t>(b)]) {
                    if (!g.adjacent(u, w)) continue;
                    VertexSet z = g.neighborhood(u);
                    z &= g.neighborhood(w);
                    z &= mask[static_cast<std::size_t>(c)];
                    if (z.count() != 1) return false;
                    std::array<int, 3> tri{u, w, z.first()};
                    std::sort(tri.begin(), tri.end());
                    triangles.insert(tri);
                }
            }
        }
    }
    std::set<int> used;
    for (const auto& tri : triangles)
        for (int v : tri)
            if (!used.insert(v).second) return false;
    return true;
}

bool structures_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b) {
    const int ta = a.points() + a.line_count();
    const int tb = b.points() + b.line_count();
    if (ta > 60 || tb > 60)
        throw std::invalid_argument(
            "structure isomorphism guarded to 60 points plus lines");
    if (a.points() != b.points() || a.line_count() != b.line_count()) return false;

    auto sorted_lines = [](const IncidenceStructure& s) {
        std::vector<std::vector<int>> ls = s.lines();
        std::sort(ls.begin(), ls.end());
        return ls;
    };
    if (sorted_lines(a) == sorted_lines(b)) return true;

    auto incidence = [](const IncidenceStructure& s) {
        GraphBuilder bld(s.points() + s.line_count());
        for (int i = 0; i < s.line_count(); ++i)
            for (int p : s.line(i)) bld.add_edge(p, s.points() + i);
        return bld.build();
    };
    std::vector<int> colors(static_cast<std::size_t>(ta), 0);
    for (int i = a.points(); i < ta; ++i) colors[static_cast<std::size_t>(i)] = 1;
    return detail::isomorphic_core(incidence(a), incidence(b), &colors, &colors);
}

namespace {

std::vector<std::string_view> text_lines(std::string_view text) {
    std::vector<std::string_view> out;
    while (!text.empty()) {
        const auto pos = text.find('\n');
        if (pos == std::string_view::npos) {
            out.push_back(text);
            break;
        }
        out.push_back(text.substr(0, pos));
        text.remove_prefix(pos + 1);
    }
    return out;
}

std::vector<int> int_fields(std::string_view line, const char* what) {
    std::istringstream in{std::string(line)};
    std::vector<int> out;
    int x;
    while (in >> x) out.push_back(x);
    if (!in.eof())
        throw ParseError(std::string(what) + ": bad token in '" + std::string(line) + "'");
    return out;
}

// "<tag> a b ..." with exactly `count` integers after the tag
std::vector<int> header_fields(std::string_view line, const char* tag, std::size_t count) {
    std::istringstream in{std::string(line)};
    std::string word;
    if (!(in >> word) || word != tag)
        throw ParseError(std::string("expected '") + tag + "' header");
    std::vector<int> out;
    int x;
    while (in >> x) out.push_back(x);
    if (!in.eof() || out.size() != count)
        throw ParseError(std::string(tag) + ": malformed header '" + std::string(line) + "'");
    return out;
}

}  // namespace

std::string write_pg(const IncidenceStructure& s) {
    std::string out =
        "pg " + std::to_string(s.points()) + " " + std::to_string(s.line_count()) + "\n";
    for (int i = 0; i < s.line_count(); ++i) out += int_list(s.line(i)) + "\n";
    return out;
}

IncidenceStructure read_pg(std::string_view text) {
    const auto lines = text_lines(text);
    if (lines.empty()) throw ParseError("pg: empty input");
    const auto h = header_fields(lines[0], "pg", 2);
    if (h[0] < 0 || h[1] < 0) throw ParseError("pg: negative count in header");
    if (static_cast<int>(lines.size()) - 1 != h[1])
        throw ParseError("pg: header announces " + std::to_string(h[1]) + " lines, found " +
                         std::to_string(lines.size() - 1));
    std::vector<std::vector<int>> rows;
    rows.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) rows.push_back(int_fields(lines[i], "pg"));
    try {
        return IncidenceStructure::make(h[0], std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("pg: ") + e.what());
    }
}

std::string write_ls(const LatinSquare& sq) {
    std::string out = "ls " + std::to_string(sq.order()) + "\n";
    for (const auto& row : sq.cells()) out += int_list(row) + "\n";
    return out;
}

LatinSquare read_ls(std::string_view text) {
    const auto lines = text_lines(text);
    if (lines.empty()) throw ParseError("ls: empty input");
    const auto h = header_fields(lines[0], "ls", 1);
    if (h[0] < 1) throw ParseError("ls: order must be positive");
    if (static_cast<int>(lines.size()) - 1 != h[0])
        throw ParseError("ls: header announces " + std::to_string(h[0]) + " rows, found " +
                         std::to_string(lines.size() - 1));
    std::vector<std::vector<int>> rows;
    rows.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i) rows.push_back(int_fields(lines[i], "ls"));
    try {
        return LatinSquare::make(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("ls: ") + e.what());
    }
}

std::string write_sts(const SteinerTripleSystem& sts) {
    std::string out = "sts " + std::to_string(sts.points()) + "\n";
    for (const auto& tr : sts.triples()) out += int_list(tr) + "\n";
    return out;
}

SteinerTripleSystem read_sts(std::string_view text) {
    const auto lines = text_lines(text);
    if (lines.empty()) throw ParseError("sts: empty input");
    const auto h = header_fields(lines[0], "sts", 1);
    if (h[0] < 3) throw ParseError("sts: point count must be at least 3");
    std::vector<std::vector<int>> triples;
    triples.reserve(lines.size() - 1);
    for (std::size_t i = 1; i < lines.size(); ++i)
        triples.push_back(int_fields(lines[i], "sts"));
    try {
        return SteinerTripleSystem::make(h[0], std::move(triples));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("sts: ") + e.what());
    }
}

}  // namespace necgraph
