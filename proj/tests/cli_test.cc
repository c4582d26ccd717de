#include <qproj/cli.hh>

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using std::string;
using std::vector;

namespace
{
    namespace fs = std::filesystem;

    struct Result
    {
        int code;
        string out, err;
    };

    auto run(const vector<string> & args) -> Result
    {
        std::ostringstream out, err;
        int code = qproj::run_cli(args, out, err);
        return Result{code, out.str(), err.str()};
    }

    auto scratch() -> fs::path
    {
        auto dir = fs::temp_directory_path() / ("qproj-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(dir);
        return dir;
    }

    auto write(const string & name, const string & text) -> string
    {
        auto path = scratch() / name;
        std::ofstream(path) << text;
        return path.string();
    }

    // Splits oracle/witness output into its blank-line separated blocks.
    auto blocks(const string & text) -> vector<string>
    {
        vector<string> result;
        std::size_t start = 0;
        while (start < text.size()) {
            auto end = text.find("\n\n", start);
            result.push_back(text.substr(start, end == string::npos ? string::npos : end + 1 - start));
            if (end == string::npos)
                break;
            start = end + 2;
        }
        return result;
    }

    // Feeds a printed witness back through `lift`.
    auto replay(const string & source, const string & output) -> Result
    {
        auto parts = blocks(output);
        REQUIRE(parts.size() >= 4);
        auto n = parts.size();
        auto target = write("target.txt", parts[n - 3]);
        auto f = write("f.map", parts[n - 2]);
        auto j = write("j.map", parts[n - 1]);
        return run({"lift", source, target, f, j});
    }

    const string chain4 = "kind poset\nn 4\nle 0 1\nle 0 2\nle 0 3\nle 1 2\nle 1 3\nle 2 3\n";
    const string vee = "kind poset\nn 3\nle 0 1\nle 0 2\n";
    const string path = "kind graph\nn 3\nedge 0 1\nedge 1 2\n";
    const string k3 = "kind graph\nn 3\nedge 0 1\nedge 0 2\nedge 1 2\n";
}

TEST_CASE("decide")
{
    auto r = run({"decide", write("chain4.txt", chain4)});
    CHECK(r.code == 0);
    CHECK(r.out == "verdict QP Chain\n");

    r = run({"decide", write("path.txt", path)});
    CHECK(r.code == 10);
    CHECK(r.out == "verdict NOT_QP NotCharacterized\n");

    r = run({"decide", write("bad.txt", "kind poset\nn 3\nle 0 9\n")});
    CHECK(r.code == 2);
    CHECK(r.out.empty());

    r = run({"decide", write("intransitive.txt", "kind poset\nn 3\nle 0 1\nle 1 2\n")});
    CHECK(r.code == 2);
    CHECK(r.err.find("transitivity") != string::npos);

    auto lines = write("lines.txt", "kind geometry\nn 6\nline 0 1 2\nline 3 4 5\n");
    CHECK(run({"decide", lines}).code == 10);
    CHECK(run({"decide", lines, "--mode", "strict"}).code == 10);
    r = run({"decide", lines, "--mode", "literal"});
    CHECK(r.code == 0);
    CHECK(r.out == "verdict QP RegularCovered\n");

    CHECK(run({"decide", (scratch() / "missing.txt").string()}).code == 2);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"decide"}).code == 1);
    CHECK(run({"decide", write("v.txt", vee), "--mode", "sideways"}).code == 1);
    CHECK(run({"enumerate", "--kind", "monoid", "--n", "3"}).code == 1);
    CHECK(run({"oracle", write("v.txt", vee), "--max-target-size", "4"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("oracle")
{
    auto v = write("vee.txt", vee);
    auto r = run({"oracle", v});
    CHECK(r.code == 10);
    auto parts = blocks(r.out);
    REQUIRE(parts.size() == 4);
    CHECK(parts[0].rfind("verdict NOT_QP\ntargets_examined ", 0) == 0);
    CHECK(parts[1] == "# target\nkind poset\nn 3\nle 0 1\nle 0 2\nle 1 2\n");

    auto lifted = replay(v, r.out);
    CHECK(lifted.code == 10);
    CHECK(lifted.out == "no-lift\n");

    CHECK(run({"oracle", write("perm.txt", "kind permutation\nn 2\nperm 1 0\n")}).code == 0);
    r = run({"oracle", write("k3.txt", k3)});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("verdict QP\n", 0) == 0);

    CHECK(run({"oracle", write("big.txt", "kind digraph-loops\nn 5\n")}).code == 3);
    CHECK(run({"oracle", v, "--jobs", "4"}).out == run({"oracle", v}).out);
}

TEST_CASE("QPROJ_JOBS does not change output")
{
    auto v = write("vee.txt", vee);
    auto serial = run({"oracle", v});
    ::setenv("QPROJ_JOBS", "6", 1);
    auto parallel = run({"oracle", v});
    ::unsetenv("QPROJ_JOBS");
    CHECK(serial.out == parallel.out);
    CHECK(serial.code == parallel.code);
}

TEST_CASE("witness")
{
    auto p = write("path.txt", path);
    auto r = run({"witness", p});
    CHECK(r.code == 10);
    CHECK(r.out.rfind("verdict NOT_QP NotCharacterized\n\n# target\nkind graph\nn 3\n", 0) == 0);
    auto lifted = replay(p, r.out);
    CHECK(lifted.code == 10);

    r = run({"witness", write("chain4.txt", chain4)});
    CHECK(r.code == 0);
    CHECK(r.out == "verdict QP Chain\n");
}

TEST_CASE("lift")
{
    auto g = write("k3.txt", k3);
    auto r = run({"lift", g, g, write("id.map", "map 0 1 2\n"), write("rot.map", "map 1 2 0\n")});
    CHECK(r.code == 0);
    CHECK(r.out == "map 2 0 1\n");

    auto v = write("vee.txt", vee);
    r = run({"lift", v, v, write("id.map", "map 0 1 2\n"), write("id2.map", "map 0 1 2\n")});
    CHECK(r.code == 0);
    CHECK(r.out == "map 0 1 2\n");

    CHECK(run({"lift", g, g, write("id.map", "map 0 1 2\n"), write("flat.map", "map 0 0 1\n")}).code == 2);
    CHECK(run({"lift", g, g, write("short.map", "map 0 1\n"), write("rot.map", "map 1 2 0\n")}).code == 2);
    CHECK(run({"lift", g, v, write("id.map", "map 0 1 2\n"), write("rot.map", "map 1 2 0\n")}).code == 2);
}

TEST_CASE("enumerate")
{
    auto r = run({"enumerate", "--kind", "graph", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(blocks(r.out).size() == 11);
    CHECK(r.out.rfind("kind graph\nn 4\n", 0) == 0);

    CHECK(run({"enumerate", "--kind", "poset", "--n", "4"}).out.size() > 0);
    CHECK(run({"enumerate", "--kind", "hypergraph", "--n", "9"}).code == 3);
}

TEST_CASE("verify")
{
    auto r = run({"verify", "--kind", "poset", "--n-max", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "OK 24 classes\n");

    r = run({"verify", "--kind", "geometry", "--n-max", "5", "--mode", "both"});
    CHECK(r.code == 10);
    CHECK(r.out.find("literal MISMATCH decide=QP RegularCovered oracle=NOT_QP\n") != string::npos);
    CHECK(r.out.find("strict OK 96 classes\n") != string::npos);

    CHECK(run({"verify", "--kind", "geometry", "--n-max", "4", "--mode", "literal"}).code == 0);
}
