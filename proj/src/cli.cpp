#include "necgraph/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "necgraph/adjacency.hpp"
#include "necgraph/bounds.hpp"
#include "necgraph/constructions.hpp"
#include "necgraph/geometry.hpp"
#include "necgraph/graph_io.hpp"
#include "necgraph/srg.hpp"

namespace necgraph {

namespace {

constexpr const char* kBanner = "# necgraph 1.0.0";

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

bool looks_like_graph6(std::string_view text) {
    const auto eol = text.find('\n');
    const std::string_view first =
        text.substr(0, eol == std::string_view::npos ? text.size() : eol);
    if (first.empty()) return false;
    for (const char c : first)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            return false;
    return true;
}

Graph load_graph(const std::string& path, const std::string& informat) {
    const std::string text = slurp(path);
    std::string fmt = informat;
    if (fmt == "auto") fmt = looks_like_graph6(text) ? "g6" : "edgelist";
    return fmt == "g6" ? decode_graph6(text) : read_edge_list(text);
}

std::vector<std::string> load_labels(const std::string& path, int order) {
    const std::string text = slurp(path);
    std::vector<std::string> labels;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur)) labels.push_back(cur);
    if (static_cast<int>(labels.size()) != order)
        throw std::invalid_argument("label file has " + std::to_string(labels.size()) +
                                    " lines for a graph of order " + std::to_string(order));
    return labels;
}

int parse_int_strict(const std::string& s) {
    std::size_t idx = 0;
    int v = 0;
    try {
        v = std::stoi(s, &idx);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer: " + s);
    }
    if (idx != s.size()) throw std::invalid_argument("bad integer: " + s);
    return v;
}

struct IntRange {
    int lo = 0;
    int hi = -1;
};

// "N" or "LO..HI"
IntRange parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        const int v = parse_int_strict(text);
        return {v, v};
    }
    return {parse_int_strict(text.substr(0, pos)), parse_int_strict(text.substr(pos + 2))};
}

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> out;
    std::string field;
    std::istringstream in(text);
    while (std::getline(in, field, ',')) out.push_back(parse_int_strict(field));
    return out;
}

int resolve_jobs(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("NECGRAPH_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

std::string srg_part(const Graph& g) {
    const SrgResult r = srg_params(g);
    return r.params ? r.params->to_string() : std::string("none");
}

std::string pg_part(const IncidenceStructure& s) {
    const PgVerification v = verify_partial_geometry(s);
    return v.params ? v.params->to_string() : std::string("none");
}

std::string label_list(const std::vector<std::string>& labels, const VertexSet& vs) {
    std::string out;
    for (int v = vs.first(); v >= 0; v = vs.next(v)) {
        if (!out.empty()) out += ',';
        out += labels[static_cast<std::size_t>(v)];
    }
    return out.empty() ? "-" : out;
}

struct Product {
    std::optional<Graph> graph;
    std::string summary;
    std::vector<std::string> labels;
    std::optional<std::string> ls_text;
    std::optional<std::string> sts_text;
};

Product from_structure(const char* tag, const IncidenceStructure& s,
                       std::vector<std::string> labels) {
    Product p;
    p.graph = point_graph(s);
    p.labels = std::move(labels);
    p.summary = std::string(tag) + " pg=" + pg_part(s) + " srg=" + srg_part(*p.graph);
    return p;
}

Product make_symplectic(int r) {
    Product p;
    p.graph = symplectic_graph(r);
    p.labels = symplectic_labels(r);
    p.summary = "symplectic r=" + std::to_string(r) +
                " v=" + std::to_string(p.graph->order()) + " srg=" + srg_part(*p.graph);
    return p;
}

Product make_paley(const FieldSpec& spec) {
    Product p;
    p.graph = paley_graph(spec);
    p.labels = paley_labels(spec);
    p.summary = "paley q=" + std::to_string(spec.q()) +
                " v=" + std::to_string(p.graph->order()) + " srg=" + srg_part(*p.graph);
    return p;
}

Product make_net(const char* tag, const LatinSquare& sq) {
    const IncidenceStructure net = latin_square_to_net(sq);
    Product p = from_structure(
        (std::string(tag) + " n=" + std::to_string(sq.order()) + " v=" +
         std::to_string(net.points()))
            .c_str(),
        net, net_cell_labels(sq.order()));
    p.ls_text = write_ls(sq);
    return p;
}

Product make_sts_dual(const char* tag, const SteinerTripleSystem& sts) {
    const IncidenceStructure geo = sts_to_dual_geometry(sts);
    Product p = from_structure(
        (std::string(tag) + " points=" + std::to_string(sts.points()) + " blocks=" +
         std::to_string(sts.triples().size()))
            .c_str(),
        geo, sts_block_labels(sts));
    p.sts_text = write_sts(sts);
    return p;
}

Product make_petersen() {
    Product p;
    p.graph = petersen();
    p.labels = petersen_labels();
    p.summary = "petersen v=10 srg=" + srg_part(*p.graph);
    return p;
}

}  // namespace

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    out << kBanner << "\n";

    CLI::App app{"strongly regular graph adjacency-property toolkit"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a bundled graph family");
    construct->require_subcommand(1);
    construct->fallthrough();
    std::string g6_path, el_path, labels_out, ls_out, sts_out;
    construct->add_option("--g6", g6_path, "write graph6 to this file");
    construct->add_option("--edgelist", el_path, "write an edge list to this file");
    construct->add_option("--labels-out", labels_out, "write vertex labels, one per line");
    construct->add_option("--ls-out", ls_out, "write the latin square (net families)");
    construct->add_option("--sts-out", sts_out, "write the triple system (bose-sts)");

    auto* c_sym = construct->add_subcommand("symplectic", "symplectic graph over GF(2)");
    int sym_r = 0;
    c_sym->add_option("--r", sym_r, "rank: vertices are nonzero vectors of GF(2)^(2r)")
        ->required();

    auto* c_paley = construct->add_subcommand("paley", "paley graph on GF(q), q = 1 mod 4");
    int paley_q = 0, paley_p = 0, paley_k = 0;
    std::string paley_modulus;
    c_paley->add_option("--q", paley_q, "field order, default modulus");
    c_paley->add_option("--p", paley_p, "field characteristic (with --k, --modulus)");
    c_paley->add_option("--k", paley_k, "extension degree 1..3");
    c_paley->add_option("--modulus", paley_modulus,
                        "monic modulus, little-endian comma list, e.g. 1,0,1");

    auto* c_cayley = construct->add_subcommand("cayley-net", "net from a group table");
    std::string cayley_group;
    c_cayley->add_option("--group", cayley_group, "group name: z8, z2^3, z4xz2, d4, q8")
        ->required();

    auto* c_latin = construct->add_subcommand("latin-file-net", "net from a latin square file");
    std::string latin_input;
    c_latin->add_option("--input", latin_input, "ls file")->required();

    auto* c_bose = construct->add_subcommand("bose-sts", "block graph of the v = 3 mod 6 triple system");
    int bose_v = 0;
    c_bose->add_option("--v", bose_v, "number of points, 3 mod 6")->required();

    auto* c_stsdual = construct->add_subcommand("sts-file-dual", "block graph of a triple system file");
    std::string sts_input;
    c_stsdual->add_option("--input", sts_input, "sts file")->required();

    auto* c_pgfile = construct->add_subcommand("pg-file", "collinearity graph of a geometry file");
    std::string pg_input;
    c_pgfile->add_option("--input", pg_input, "pg file")->required();

    auto* c_petersen = construct->add_subcommand("petersen", "kneser graph on the 2-subsets of a 5-set");

    // check
    auto* check = app.add_subcommand("check", "test a property of a graph file");
    std::string check_input, check_informat = "auto", check_property, check_labels;
    int check_level = 2, check_jobs = 0;
    bool check_machine = false;
    check->add_option("--input", check_input, "graph file")->required();
    check->add_option("--informat", check_informat, "auto, g6 or edgelist")
        ->check(CLI::IsMember({"auto", "g6", "edgelist"}));
    check->add_option("--property", check_property, "nec, full, srg or 2ec")
        ->required()
        ->check(CLI::IsMember({"nec", "full", "srg", "2ec"}));
    check->add_option("--level", check_level, "n for nec, r for full (default 2)");
    check->add_option("--jobs", check_jobs, "worker threads (default $NECGRAPH_JOBS or 1)");
    check->add_option("--labels", check_labels, "vertex label file for witness output");
    check->add_flag("--machine", check_machine, "single key=value line instead of text");

    // screen
    auto* screen_cmd = app.add_subcommand("screen", "bound screening over parameter ranges");
    std::string range_s, range_t, range_a;
    screen_cmd->add_option("--s", range_s, "line size minus one: N or LO..HI")->required();
    screen_cmd->add_option("--t", range_t, "point degree minus one: N or LO..HI")->required();
    screen_cmd->add_option("--alpha", range_a, "connection count: N or LO..HI")->required();

    // report
    auto* report = app.add_subcommand("report", "full numeric profile of a graph file");
    std::string report_input, report_informat = "auto";
    int report_cap = 3, report_jobs = 0;
    bool report_machine = false;
    report->add_option("--input", report_input, "graph file")->required();
    report->add_option("--informat", report_informat, "auto, g6 or edgelist")
        ->check(CLI::IsMember({"auto", "g6", "edgelist"}));
    report->add_option("--cap", report_cap, "largest n to try for n-e.c. (default 3)");
    report->add_option("--jobs", report_jobs, "worker threads (default $NECGRAPH_JOBS or 1)");
    report->add_flag("--machine", report_machine, "key=value lines instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) {
            Product p;
            if (c_sym->parsed()) {
                p = make_symplectic(sym_r);
            } else if (c_paley->parsed()) {
                const bool direct = paley_p != 0 || paley_k != 0 || !paley_modulus.empty();
                if ((paley_q != 0) == direct)
                    throw std::invalid_argument(
                        "give either --q or the --p/--k/--modulus triple");
                const FieldSpec spec = paley_q != 0
                                           ? paley_default(paley_q)
                                           : FieldSpec::make(paley_p, paley_k,
                                                             parse_csv_ints(paley_modulus));
                p = make_paley(spec);
            } else if (c_cayley->parsed()) {
                const GroupSpec g = GroupSpec::parse(cayley_group);
                p = make_net(("cayley-net group=" + g.name()).c_str(),
                             LatinSquare::make(cayley_table(g)));
            } else if (c_latin->parsed()) {
                p = make_net("latin-net", read_ls(slurp(latin_input)));
            } else if (c_bose->parsed()) {
                p = make_sts_dual("bose-sts", bose_sts(bose_v));
            } else if (c_stsdual->parsed()) {
                p = make_sts_dual("sts-dual", read_sts(slurp(sts_input)));
            } else if (c_pgfile->parsed()) {
                const IncidenceStructure s = read_pg(slurp(pg_input));
                std::vector<std::string> idx;
                for (int i = 0; i < s.points(); ++i) idx.push_back(std::to_string(i));
                p = from_structure(("pg-file points=" + std::to_string(s.points()) +
                                    " lines=" + std::to_string(s.line_count()))
                                       .c_str(),
                                   s, std::move(idx));
            } else if (c_petersen->parsed()) {
                p = make_petersen();
            }
            out << p.summary << "\n";
            bool wrote_graph = false;
            if (!g6_path.empty()) {
                spill(g6_path, encode_graph6(*p.graph) + "\n");
                wrote_graph = true;
            }
            if (!el_path.empty()) {
                spill(el_path, write_edge_list(*p.graph));
                wrote_graph = true;
            }
            if (!labels_out.empty()) {
                std::string text;
                for (const auto& l : p.labels) text += l + "\n";
                spill(labels_out, text);
            }
            if (!ls_out.empty()) {
                if (!p.ls_text)
                    throw std::invalid_argument("this family has no latin square output");
                spill(ls_out, *p.ls_text);
            }
            if (!sts_out.empty()) {
                if (!p.sts_text)
                    throw std::invalid_argument("this family has no triple system output");
                spill(sts_out, *p.sts_text);
            }
            if (!wrote_graph) out << encode_graph6(*p.graph) << "\n";
            return 0;
        }

        if (check->parsed()) {
            const Graph g = load_graph(check_input, check_informat);
            std::vector<std::string> labels;
            if (!check_labels.empty()) labels = load_labels(check_labels, g.order());

            if (check_property == "nec") {
                const EcReport r = is_n_ec(g, check_level, resolve_jobs(check_jobs));
                if (check_machine)
                    out << r.to_kv() << "\n";
                else
                    out << r.to_text();
                if (!check_machine && !labels.empty() && r.witness) {
                    out << "witness-A-labels: " << label_list(labels, r.witness->first)
                        << "\n";
                    out << "witness-B-labels: " << label_list(labels, r.witness->second)
                        << "\n";
                }
                return r.holds ? 0 : 1;
            }
            if (check_property == "full") {
                const FullnessReport r = is_r_full(g, check_level);
                if (check_machine)
                    out << r.to_kv() << "\n";
                else
                    out << r.to_text();
                return r.holds ? 0 : 1;
            }
            if (check_property == "srg") {
                const SrgResult r = srg_params(g);
                if (check_machine) {
                    out << "property=srg holds=" << (r.params ? "true" : "false");
                    if (r.params) out << " params=" << r.params->to_string();
                    if (r.mu_zero()) out << " mu-zero=true";
                    if (!r.params) out << " failure=" << srg_failure_name(r.failure);
                    out << "\n";
                } else {
                    out << "property: srg\n";
                    out << "holds: " << (r.params ? "true" : "false") << "\n";
                    if (r.params) out << "params: " << r.params->to_string() << "\n";
                    if (r.mu_zero()) out << "mu-zero: true\n";
                    if (!r.params) out << "failure: " << srg_failure_name(r.failure) << "\n";
                }
                return r.params ? 0 : 1;
            }
            // 2ec
            const TwoEcResult r = is_2ec_srg(g);
            if (check_machine) {
                out << "property=2ec holds=" << (r.holds ? "true" : "false");
                if (!r.holds) out << " reason=" << r.reason();
                out << "\n";
            } else {
                out << "property: 2ec\n";
                out << "holds: " << (r.holds ? "true" : "false") << "\n";
                if (!r.holds) out << "reason: " << r.reason() << "\n";
            }
            return r.holds ? 0 : 1;
        }

        if (screen_cmd->parsed()) {
            const IntRange rs = parse_range(range_s);
            const IntRange rt = parse_range(range_t);
            const IntRange ra = parse_range(range_a);
            int rows = 0;
            for (int s = rs.lo; s <= rs.hi; ++s)
                for (int t = rt.lo; t <= rt.hi; ++t)
                    for (int a = ra.lo; a <= ra.hi; ++a) {
                        const PgParams pg{s, t, a};
                        if (!pg.nondegenerate()) continue;
                        out << screen(pg).to_kv() << "\n";
                        ++rows;
                    }
            if (rows == 0) {
                err << "error: no nondegenerate parameters in range\n";
                return 2;
            }
            return 0;
        }

        // report
        const Graph g = load_graph(report_input, report_informat);
        const int jobs = resolve_jobs(report_jobs);
        const SrgResult sr = srg_params(g);
        const std::optional<PgParams> inv =
            sr.params ? pseudo_geometric_inverse(*sr.params) : std::nullopt;
        const int max_n = max_ec(g, report_cap, jobs);
        int max_full = 0;
        for (int r = 1; r <= 5; ++r) {
            if (!is_r_full(g, r).holds) break;
            max_full = r;
        }
        if (report_machine) {
            out << "order=" << g.order() << " edges=" << g.edge_count();
            out << " srg=" << (sr.params ? sr.params->to_string() : "none");
            out << " pg-inverse=" << (inv ? inv->to_string() : "none");
            out << " max-ec=" << max_n << " max-full=" << max_full << "\n";
            if (inv) out << screen(*inv).to_kv() << "\n";
        } else {
            out << "order: " << g.order() << "\n";
            out << "edges: " << g.edge_count() << "\n";
            if (sr.params)
                out << "srg: " << sr.params->to_string() << "\n";
            else
                out << "srg: none (" << srg_failure_name(sr.failure) << ")\n";
            out << "pg-inverse: " << (inv ? inv->to_string() : "none") << "\n";
            out << "max-ec: " << max_n << "\n";
            out << "max-full: " << max_full << "\n";
            if (inv) out << screen(*inv).to_text();
        }
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace necgraph
