#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gpe/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int exit;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = gpe::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

// a graph file for the path on five vertices, diameter four
const char* kPath5 =
    "p 5 4\n"
    "l 0 0000\nl 1 1000\nl 2 1100\nl 3 1110\nl 4 1111\n"
    "e 0 1\ne 1 2\ne 2 3\ne 3 4\n";

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& text) {
        path = std::string("cli_test_") + std::to_string(counter++) + ".txt";
        std::ofstream f(path);
        f << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
    static int counter;
};
int TempFile::counter = 0;

} // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors") {
    CHECK(cli({}).exit == 2);
    CHECK(cli({"frobnicate"}).exit == 2);
    CHECK(cli({"gen"}).exit == 2);                                    // missing --family
    CHECK(cli({"gen", "--family", "dodecahedron", "--n", "3"}).exit == 2);
    CHECK(cli({"gen", "--family", "fibonacci"}).exit == 2);           // missing --n
    CHECK(cli({"gen", "--family", "fig3", "--n", "2"}).exit == 2);    // fig3 takes no n
    CHECK(cli({"solve", "--bound", "psychic"}).exit == 2);
    CHECK(cli({"solve"}).exit == 2);                                  // no graph, no family
    CHECK(cli({"paper-check", "s9"}).exit == 2);
    CHECK(cli({"--help"}).exit == 0);
}

TEST_CASE("gen writes loadable files") {
    CliResult r = cli({"gen", "--family", "fibonacci", "--n", "3"});
    CHECK(r.exit == 0);
    CHECK(r.out.substr(0, 6) == "p 5 5\n");
    CHECK(r.out.find("l 0 000") != std::string::npos);

    CliResult fig = cli({"gen", "--family", "fig3"});
    CHECK(fig.exit == 0);
    CHECK(fig.out.substr(0, 7) == "p 12 16");

    // and round trips through dist
    CliResult d = cli({"dist", "-", "0", "4"}, r.out);
    CHECK(d.exit == 0);
    CHECK(d.out == "2\n"); // 001 to 101 in the width three fibonacci cube
}

TEST_CASE("dist matrix and query forms") {
    std::string p3 = "p 3 2\ne 0 1\ne 1 2\n";
    CliResult matrix = cli({"dist", "-"}, p3);
    CHECK(matrix.exit == 0);
    CHECK(matrix.out == "0 1 2\n1 0 1\n2 1 0\n");

    CliResult q = cli({"dist", "-", "2", "0", "--json"}, p3);
    CHECK(q.exit == 0);
    json j = json::parse(q.out);
    CHECK(j["u"] == 2);
    CHECK(j["v"] == 0);
    CHECK(j["distance"] == 2);

    CHECK(cli({"dist", "-", "0"}, p3).exit == 2);      // u without v
    CHECK(cli({"dist", "-", "0", "9"}, p3).exit == 2); // out of range
    CHECK(cli({"dist", "nonexistent.txt"}).exit == 3);
}

TEST_CASE("disconnected inputs") {
    std::string two = "p 4 2\ne 0 1\ne 2 3\n";
    CHECK(cli({"dist", "-"}, two).exit == 3); // refused at load
    // permitted at load, refused by the operations that need connectivity
    CliResult d = cli({"dist", "-", "--allow-disconnected"}, two);
    CHECK(d.exit == 2);
    CHECK(d.err.find("no path between") != std::string::npos);
    CliResult b = cli({"blocks", "-", "--allow-disconnected"}, two);
    CHECK(b.exit == 2);
    CHECK(b.err.find("disconnected") != std::string::npos);
}

TEST_CASE("theta on families and files") {
    CliResult fib = cli({"theta", "--family", "fibonacci", "--n", "5"});
    CHECK(fib.exit == 0);
    CHECK(fib.out.find("classes 5") == 0);
    CHECK(fib.out.find("PASS class sizes of fibonacci n=5 match the closed form") !=
          std::string::npos);

    CliResult luc = cli({"theta", "--family", "lucas", "--n", "5", "--json"});
    CHECK(luc.exit == 0);
    json j = json::parse(luc.out);
    CHECK(j["classes"] == 5);
    CHECK(j["formula_holds"] == true);
    CHECK(j["sizes"].size() == 5);
    for (const auto& s : j["sizes"]) CHECK(s == 3); // each class has F(4) edges

    CliResult q = cli({"theta", "--family", "hypercube", "--n", "2"});
    CHECK(q.exit == 0);
    CHECK(q.out.find("PASS") == std::string::npos); // no closed form to check

    std::string c6 = "p 6 6\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 0 5\n";
    CliResult file = cli({"theta", "-", "--json"}, c6);
    CHECK(file.exit == 0);
    json jc = json::parse(file.out);
    CHECK(jc["classes"] == 3);
    CHECK(jc["coordinates"].empty());

    CHECK(cli({"theta"}).exit == 2);
    CHECK(cli({"theta", "-", "--family", "lucas", "--n", "3"}, c6).exit == 2);
    std::string c5 = "p 5 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 0 4\n";
    CHECK(cli({"theta", "-"}, c5).exit == 2); // odd cycle, no classes
}

TEST_CASE("verify accepts both edge list formats") {
    TempFile path5(kPath5);
    CliResult good = cli({"verify", path5.path, "--edges", "-"}, "e 0 1\ne 3 4\n");
    CHECK(good.exit == 0);
    json jg = json::parse(good.out);
    CHECK(jg["checked"] == 1);
    CHECK(jg["is_gp"] == true);

    CliResult bad = cli({"verify", path5.path, "--edges", "-"}, "e 0 1\ne 1 2\ne 2 3\n");
    CHECK(bad.exit == 1);
    json jb = json::parse(bad.out);
    CHECK(jb["is_gp"] == false);
    CHECK(jb["violation"]["edges"].size() == 3);

    CliResult classes = cli({"verify", path5.path, "--edges", "-"}, "class 1\nclass 4\n");
    CHECK(classes.exit == 0);

    CHECK(cli({"verify", path5.path, "--edges", "-"}, "e 0 4\n").exit == 3); // not an edge
    CHECK(cli({"verify", path5.path, "--edges", "-"}, "e 0 99\n").exit == 3);
    CHECK(cli({"verify", path5.path, "--edges", "-"}, "class 9\n").exit == 3);
    CHECK(cli({"verify", path5.path, "--edges", "-"}, "{\"nonsense\":1}").exit == 3);
    CHECK(cli({"verify", path5.path, "--edges", "-"}, "{not json").exit == 3);
}

TEST_CASE("maximality verdicts") {
    TempFile path5(kPath5);
    CliResult not_max = cli({"verify", path5.path, "--edges", "-", "--maximal"}, "e 0 1\n");
    CHECK(not_max.exit == 1);
    json jn = json::parse(not_max.out);
    CHECK(jn["is_gp"] == true);
    CHECK(jn["is_maximal"] == false);
    CHECK(jn.contains("extension"));

    CliResult max = cli({"verify", path5.path, "--edges", "-", "--maximal"}, "e 0 1\ne 1 2\n");
    CHECK(max.exit == 0);
    CHECK(json::parse(max.out)["is_maximal"] == true);
}

TEST_CASE("solve emits verifiable witnesses") {
    CliResult r = cli({"solve", "--family", "lucas", "--n", "5", "--json"});
    CHECK(r.exit == 0);
    json j = json::parse(r.out);
    CHECK(j["optimum"] == 7);
    CHECK(j["witnesses"].size() == 1);
    CHECK(j["witnesses"][0].size() == 7);
    CHECK(j["nodes_explored"].get<long long>() > 0);

    // the json output round trips into verify
    CliResult gen = cli({"gen", "--family", "lucas", "--n", "5"});
    TempFile graph(gen.out);
    CliResult v = cli({"verify", graph.path, "--edges", "-", "--maximal"}, r.out);
    CHECK(v.exit == 0);
    json jv = json::parse(v.out);
    CHECK(jv["checked"] == 1);
    CHECK(jv["is_gp"] == true);
    CHECK(jv["is_maximal"] == true);
}

TEST_CASE("solve text output is deterministic") {
    CliResult a = cli({"solve", "--family", "fibonacci", "--n", "4", "--threads", "1"});
    CliResult b = cli({"solve", "--family", "fibonacci", "--n", "4", "--threads", "1"});
    CHECK(a.exit == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("optimum 6") == 0);

    CliResult par = cli({"solve", "--family", "fibonacci", "--n", "4", "--threads", "4",
                         "--json"});
    json jp = json::parse(par.out);
    CHECK(jp["optimum"] == 6);
}

TEST_CASE("enumeration reports orbit counts for small graphs") {
    CliResult r = cli({"solve", "--family", "hypercube", "--n", "2", "--enumerate-all",
                       "--json"});
    CHECK(r.exit == 0);
    json j = json::parse(r.out);
    CHECK(j["optimum"] == 4);
    CHECK(j["witnesses"].size() == 1);
    CHECK(j["orbit_count"] == 1);
}

TEST_CASE("maximal grows reproducible sets") {
    TempFile path5(kPath5);
    CliResult a = cli({"maximal", path5.path, "--seed", "3"});
    CliResult b = cli({"maximal", path5.path, "--seed", "3"});
    CHECK(a.exit == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("# maximal set, size 2") == 0);

    // the text output round trips into verify --maximal
    CliResult v = cli({"verify", path5.path, "--edges", "-", "--maximal"}, a.out);
    CHECK(v.exit == 0);

    CliResult grown = cli({"maximal", path5.path, "--edges", "-", "--json"}, "e 2 3\n");
    CHECK(grown.exit == 0);
    json jg = json::parse(grown.out);
    CHECK(jg["size"] == 2);

    CliResult rejected = cli({"maximal", path5.path, "--edges", "-"},
                             "e 0 1\ne 1 2\ne 2 3\n");
    CHECK(rejected.exit == 1);
    CHECK(rejected.err.find("not in general position") != std::string::npos);
}

TEST_CASE("conjecture sweep output") {
    CliResult r = cli({"conjecture", "--max-n", "3"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("n=2 optimum=2 predicted=2 EQUAL") != std::string::npos);
    CHECK(r.out.find("n=3 optimum=4 predicted=4 EQUAL") != std::string::npos);

    CliResult j = cli({"conjecture", "--max-n", "2", "--json"});
    json arr = json::parse(j.out);
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["verdict"] == "EQUAL");

    CHECK(cli({"conjecture", "--max-n", "9"}).exit == 2);
}

TEST_CASE("blocks and the end block set") {
    TempFile path5(kPath5);
    CliResult r = cli({"blocks", path5.path});
    CHECK(r.exit == 0);
    CHECK(r.out.find("blocks 4") == 0);
    CHECK(r.out.find("cut vertices: 1 2 3") != std::string::npos);
    CHECK(r.out.find("gp set: 0-1 3-4") != std::string::npos);

    CliResult j = cli({"blocks", path5.path, "--json", "--seed", "1"});
    json jb = json::parse(j.out);
    CHECK(jb["blocks"].size() == 4);
    CHECK(jb["cut_vertices"].size() == 3);
    CHECK(jb["end_blocks"].size() == 2);
    CHECK(jb["gp_set"].size() == 2);
}

TEST_CASE("automorphism counts") {
    CliResult gen = cli({"gen", "--family", "hypercube", "--n", "2"});
    CliResult r = cli({"autos", "-"}, gen.out);
    CHECK(r.exit == 0);
    CHECK(r.out.find("count 8") == 0);

    CliResult j = cli({"autos", "-", "--json"}, gen.out);
    json ja = json::parse(j.out);
    CHECK(ja["count"] == 8);
    CHECK(ja["automorphisms"].size() == 8);
    CHECK(ja["automorphisms"][0].size() == 4);
}

TEST_CASE("the cheap criteria group runs clean") {
    CliResult r = cli({"paper-check", "s2"});
    CHECK(r.exit == 0);
    CHECK(r.out.find("PASS 11") != std::string::npos);
    CHECK(r.out.find("all checks hold") != std::string::npos);

    CliResult j = cli({"paper-check", "s2", "--json"});
    json arr = json::parse(j.out);
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["id"] == 11);
    CHECK(arr[0]["pass"] == true);
}

} // TEST_SUITE
