#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "necgraph/bounds.hpp"
#include "necgraph/cli.hpp"
#include "necgraph/constructions.hpp"
#include "necgraph/geometry.hpp"
#include "necgraph/graph_io.hpp"
#include "necgraph/params.hpp"

using namespace necgraph;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("necgraph");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    RunResult r;
    r.code = run_main(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::string kBanner = "# necgraph 1.0.0\n";

std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        std::random_device rd;
        const auto p = std::filesystem::temp_directory_path() /
                       ("necgraph-cli-" + std::to_string(rd()));
        std::filesystem::create_directories(p);
        return p;
    }();
    return dir;
}

std::string scratch_file(const std::string& name) {
    return (scratch_dir() / name).string();
}

void put_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

std::string get_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string data_path(const std::string& name) {
    const char* dir = std::getenv("NECGRAPH_DATA_DIR");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

}  // namespace

TEST_CASE("the banner always comes first") {
    for (const auto& r : {run({"construct", "petersen"}), run({"--help"}), run({}),
                          run({"check", "--property", "srg"})})
        CHECK(r.out.substr(0, kBanner.size()) == kBanner);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);            // a subcommand is required
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("construct petersen writes the summary and the graph") {
    const RunResult r = run({"construct", "petersen"});
    CHECK(r.code == 0);
    CHECK(r.out == kBanner + "petersen v=10 srg=10,3,0,1\nI?LRCecq?\n");
    CHECK(r.err.empty());
}

TEST_CASE("construct writes graph files instead of stdout when asked") {
    const std::string g6 = scratch_file("sp2.g6");
    const std::string el = scratch_file("sp2.el");
    const RunResult r =
        run({"construct", "symplectic", "--r", "2", "--g6", g6, "--edgelist", el});
    CHECK(r.code == 0);
    CHECK(r.out == kBanner + "symplectic r=2 v=15 srg=15,8,4,4\n");
    CHECK(get_file(g6) == encode_graph6(symplectic_graph(2)) + "\n");
    CHECK(get_file(el) == write_edge_list(symplectic_graph(2)));
}

TEST_CASE("construct cayley-net is deterministic") {
    const RunResult a = run({"construct", "cayley-net", "--group", "z2^3"});
    const RunResult b = run({"construct", "cayley-net", "--group", "z2xz2xz2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.substr(kBanner.size(), a.out.find('\n', kBanner.size()) - kBanner.size()) ==
          "cayley-net group=z2^3 n=8 v=64 pg=7,2,2 srg=64,21,8,6");
}

TEST_CASE("construct family summaries") {
    CHECK(run({"construct", "latin-file-net", "--input", data_path("z3.ls")}).out ==
          kBanner + "latin-net n=3 v=9 pg=2,2,2 srg=9,6,3,6\n" +
              encode_graph6(point_graph(latin_square_to_net(
                  LatinSquare::make({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})))) +
              "\n");

    const RunResult bose = run({"construct", "bose-sts", "--v", "9"});
    CHECK(bose.out.find("bose-sts points=9 blocks=12 pg=3,2,3 srg=12,9,6,9\n") !=
          std::string::npos);

    const RunResult sts = run({"construct", "sts-file-dual", "--input", data_path("sts13.sts")});
    CHECK(sts.out.find("sts-dual points=13 blocks=26 pg=5,2,3 srg=26,15,8,9\n") !=
          std::string::npos);

    const RunResult pg = run({"construct", "pg-file", "--input", data_path("star-pg312.pg")});
    CHECK(pg.out.find("pg-file points=10 lines=5 pg=3,1,2 srg=10,6,3,4\n") !=
          std::string::npos);
}

TEST_CASE("construct side outputs") {
    const std::string ls = scratch_file("z8.ls");
    const std::string labels = scratch_file("z8.labels");
    const RunResult r = run({"construct", "cayley-net", "--group", "z8", "--ls-out", ls,
                             "--labels-out", labels});
    CHECK(r.code == 0);
    CHECK(get_file(ls) == write_ls(LatinSquare::make(cayley_table(GroupSpec::cyclic(8)))));
    const std::string lab = get_file(labels);
    CHECK(lab.substr(0, 6) == "(0,0)\n");
    CHECK(std::count(lab.begin(), lab.end(), '\n') == 64);

    const std::string sts = scratch_file("b9.sts");
    run({"construct", "bose-sts", "--v", "9", "--sts-out", sts});
    CHECK(get_file(sts) == write_sts(bose_sts(9)));

    // petersen has no latin square to write
    CHECK(run({"construct", "petersen", "--ls-out", ls}).code == 2);
}

TEST_CASE("paley takes exactly one parameter route") {
    const RunResult by_q = run({"construct", "paley", "--q", "9"});
    const RunResult by_spec =
        run({"construct", "paley", "--p", "3", "--k", "2", "--modulus", "1,0,1"});
    CHECK(by_q.code == 0);
    CHECK(by_q.out == by_spec.out);
    CHECK(by_q.out.find("paley q=9 v=9 srg=9,4,1,2\n") != std::string::npos);

    const RunResult both = run({"construct", "paley", "--q", "9", "--p", "3"});
    CHECK(both.code == 2);
    CHECK(both.err.find("give either --q or the --p/--k/--modulus triple") !=
          std::string::npos);
    CHECK(run({"construct", "paley"}).code == 2);
    CHECK(run({"construct", "paley", "--q", "7"}).code == 2);
}

TEST_CASE("check nec reports witnesses and exit codes") {
    const std::string c5 = scratch_file("c5.el");
    put_file(c5, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");

    const RunResult fail = run({"check", "--input", c5, "--property", "nec"});
    CHECK(fail.code == 1);
    CHECK(fail.out == kBanner +
                          "property: nec\nn: 2\nholds: false\n"
                          "witness-A: 0 1\nwitness-B: \n");

    const RunResult pass = run({"check", "--input", c5, "--property", "nec", "--level", "1"});
    CHECK(pass.code == 0);
    CHECK(pass.out == kBanner + "property: nec\nn: 1\nholds: true\n");

    const RunResult kv =
        run({"check", "--input", c5, "--property", "nec", "--machine"});
    CHECK(kv.out == kBanner + "property=nec n=2 holds=false witness-a=0,1 witness-b=\n");

    // level must stay below the order
    CHECK(run({"check", "--input", c5, "--property", "nec", "--level", "5"}).code == 2);
    CHECK(run({"check", "--input", c5, "--property", "nec", "--level", "0"}).code == 2);
}

TEST_CASE("check reads graph6 and witness labels") {
    const std::string k3 = scratch_file("k3.g6");
    put_file(k3, "Bw\n");
    const std::string labels = scratch_file("k3.labels");
    put_file(labels, "01\n10\n11\n");

    const RunResult r = run({"check", "--input", k3, "--property", "nec", "--labels", labels});
    CHECK(r.code == 1);
    CHECK(r.out == kBanner +
                       "property: nec\nn: 2\nholds: false\n"
                       "witness-A: \nwitness-B: 0 1\n"
                       "witness-A-labels: -\nwitness-B-labels: 01,10\n");

    // label count must match the graph order
    put_file(labels, "01\n10\n");
    CHECK(run({"check", "--input", k3, "--property", "nec", "--labels", labels}).code == 2);
}

TEST_CASE("check srg, full and 2ec") {
    const std::string k3 = scratch_file("k3b.g6");
    put_file(k3, "Bw\n");
    const RunResult srg = run({"check", "--input", k3, "--property", "srg"});
    CHECK(srg.code == 1);
    CHECK(srg.out == kBanner + "property: srg\nholds: false\nfailure: complete-or-empty\n");
    CHECK(run({"check", "--input", k3, "--property", "2ec"}).code == 2);

    const std::string pet = scratch_file("pet.g6");
    put_file(pet, encode_graph6(petersen()) + "\n");
    const RunResult psrg = run({"check", "--input", pet, "--property", "srg", "--machine"});
    CHECK(psrg.code == 0);
    CHECK(psrg.out == kBanner + "property=srg holds=true params=10,3,0,1\n");

    const RunResult p2ec = run({"check", "--input", pet, "--property", "2ec"});
    CHECK(p2ec.code == 1);
    CHECK(p2ec.out ==
          kBanner + "property: 2ec\nholds: false\nreason: graph-triangle-free\n");

    const std::string sp4 = scratch_file("sp4.g6");
    put_file(sp4, encode_graph6(symplectic_graph(2)) + "\n");
    const RunResult full = run({"check", "--input", sp4, "--property", "full", "--level", "3"});
    CHECK(full.code == 0);
    CHECK(full.out == kBanner + "property: full\nr: 3\nholds: true\n");
    const RunResult two = run({"check", "--input", sp4, "--property", "2ec"});
    CHECK(two.code == 0);
    CHECK(two.out == kBanner + "property: 2ec\nholds: true\n");

    CHECK(run({"check", "--input", sp4, "--property", "bogus"}).code == 2);
    CHECK(run({"check", "--property", "srg"}).code == 2);  // --input is required
}

TEST_CASE("worker count options do not change output") {
    const std::string sp4 = scratch_file("sp4w.g6");
    put_file(sp4, encode_graph6(symplectic_graph(2)) + "\n");
    const std::vector<std::string> base = {"check", "--input", sp4, "--property", "nec",
                                           "--level", "3"};
    std::vector<std::string> jobs1 = base, jobs3 = base;
    jobs1.insert(jobs1.end(), {"--jobs", "1"});
    jobs3.insert(jobs3.end(), {"--jobs", "3"});
    const RunResult a = run(jobs1);
    const RunResult b = run(jobs3);
    CHECK(a.code == 1);
    CHECK(a.out == b.out);
    CHECK(a.out.find("witness-A: 0\nwitness-B: 1 2\n") != std::string::npos);

    setenv("NECGRAPH_JOBS", "2", 1);
    const RunResult c = run(base);
    unsetenv("NECGRAPH_JOBS");
    CHECK(c.out == a.out);
}

TEST_CASE("input format handling") {
    const std::string el = scratch_file("fmt.el");
    put_file(el, "3 1\n0 1\n");
    CHECK(run({"check", "--input", el, "--property", "nec", "--level", "1"}).code == 1);
    CHECK(run({"check", "--input", el, "--informat", "edgelist", "--property", "nec",
               "--level", "1"})
              .code == 1);
    // Forcing the wrong reader turns a good file into a parse failure.
    CHECK(run({"check", "--input", el, "--informat", "g6", "--property", "srg"}).code == 3);
    CHECK(run({"check", "--input", el, "--informat", "csv", "--property", "srg"}).code == 2);

    const std::string bad = scratch_file("bad.g6");
    put_file(bad, "Bx\n");  // nonzero padding bits
    CHECK(run({"check", "--input", bad, "--property", "srg"}).code == 3);
    CHECK(run({"check", "--input", scratch_file("absent.g6"), "--property", "srg"}).code ==
          3);
}

TEST_CASE("screen emits one row per parameter triple") {
    const RunResult r = run({"screen", "--s", "2..8", "--t", "2", "--alpha", "2"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);  // banner
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 7);
    for (int i = 0; i < 7; ++i)
        CHECK(rows[static_cast<std::size_t>(i)] ==
              screen(PgParams{2 + i, 2, 2}).to_kv());

    const RunResult one = run({"screen", "--s", "7", "--t", "2", "--alpha", "2"});
    CHECK(one.out == kBanner + screen(PgParams{7, 2, 2}).to_kv() + "\n");
}

TEST_CASE("screen rejects empty and malformed ranges") {
    const RunResult empty = run({"screen", "--s", "2", "--t", "1", "--alpha", "3"});
    CHECK(empty.code == 2);
    CHECK(empty.err.find("no nondegenerate parameters in range") != std::string::npos);
    CHECK(run({"screen", "--s", "5..3", "--t", "2", "--alpha", "2"}).code == 2);
    CHECK(run({"screen", "--s", "2..x", "--t", "2", "--alpha", "2"}).code == 2);
    CHECK(run({"screen", "--s", "2..4", "--t", "2"}).code == 2);  // --alpha required
}

TEST_CASE("report summarizes a graph end to end") {
    const std::string sp4 = scratch_file("sp4r.g6");
    put_file(sp4, encode_graph6(symplectic_graph(2)) + "\n");
    const RunResult r = run({"report", "--input", sp4});
    CHECK(r.code == 0);
    CHECK(r.out == kBanner +
                       "order: 15\nedges: 60\nsrg: 15,8,4,4\npg-inverse: 4,1,2\n"
                       "max-ec: 2\nmax-full: 3\n" +
                       screen(PgParams{4, 1, 2}).to_text());

    const RunResult kv = run({"report", "--input", sp4, "--machine"});
    CHECK(kv.out == kBanner +
                        "order=15 edges=60 srg=15,8,4,4 pg-inverse=4,1,2 "
                        "max-ec=2 max-full=3\n" +
                        screen(PgParams{4, 1, 2}).to_kv() + "\n");

    const std::string pet = scratch_file("petr.g6");
    put_file(pet, encode_graph6(petersen()) + "\n");
    const RunResult p = run({"report", "--input", pet});
    CHECK(p.code == 0);
    CHECK(p.out == kBanner +
                       "order: 10\nedges: 15\nsrg: 10,3,0,1\npg-inverse: none\n"
                       "max-ec: 1\nmax-full: 2\n");

    const std::string p4 = scratch_file("p4.el");
    put_file(p4, "4 3\n0 1\n1 2\n2 3\n");
    const RunResult np = run({"report", "--input", p4});
    CHECK(np.out.find("srg: none (not-regular)\n") != std::string::npos);
}
