#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "laygraph/cnf.hpp"
#include "laygraph/io.hpp"
#include "support/dpll.hpp"
#include "support/naive.hpp"

namespace fs = std::filesystem;

namespace {

std::string tool_path() {
    const char* p = std::getenv("LAYTOOL");
    REQUIRE_MESSAGE(p != nullptr, "LAYTOOL environment variable must point at the CLI binary");
    return p;
}

int run(const std::string& args, const fs::path& stdout_file = {}) {
    std::string cmd = tool_path() + " " + args;
    cmd += " > " + (stdout_file.empty() ? "/dev/null" : stdout_file.string());
    cmd += " 2> /dev/null";
    int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("laytool_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("size subcommand uses the closed form") {
    TempDir tmp;
    fs::path out = tmp.path / "size.txt";
    CHECK(run("size gkl --k 5 --ell 33", out) == 0);
    CHECK(slurp(out) == "V=10075562 E=20151121\n");
}

TEST_CASE("gen, solve, verify round trip") {
    TempDir tmp;
    fs::path lg = tmp.path / "g.lg";
    fs::path ll = tmp.path / "c.ll";
    CHECK(run("gen gkl --k 2 --ell 3 -o " + lg.string()) == 0);
    CHECK(run("solve " + lg.string() + " --stacks 1 --queues 1 -o " + ll.string()) == 0);
    fs::path verdict = tmp.path / "verify.txt";
    CHECK(run("verify " + lg.string() + " " + ll.string() + " --stacks 1 --queues 1", verdict) == 0);
    CHECK(slurp(verdict) == "valid\n");

    // audits on the produced certificate
    CHECK(run("audit " + lg.string() + " " + ll.string() + " --lemmas 1,2,3") == 0);
    // lemma 4 is vacuous at k=2, which is not a pass
    CHECK(run("audit " + lg.string() + " " + ll.string() + " --lemmas 4") == 1);
}

TEST_CASE("verify rejects a certificate with a nesting violation") {
    TempDir tmp;
    fs::path lg = tmp.path / "g.lg";
    fs::path ll = tmp.path / "bad.ll";
    std::ofstream(lg) << "laygraph 1\nn 4\ne 0 3\ne 1 2\n";
    std::ofstream(ll) << "laylayout 1\norder 0 1 2 3\npage 0 3 Q0\npage 1 2 Q0\n";
    fs::path out = tmp.path / "verify.txt";
    CHECK(run("verify " + lg.string() + " " + ll.string() + " --stacks 1 --queues 1", out) == 1);
    CHECK(slurp(out) == "violation (0,3) (1,2) Q0\n");
}

TEST_CASE("oracle reports counts and an unsat exit code") {
    TempDir tmp;
    fs::path lg = tmp.path / "k23.lg";
    {
        std::ofstream out(lg);
        laygraph::write_lg(out, test_support::k23());
    }
    fs::path res = tmp.path / "oracle.txt";
    CHECK(run("oracle " + lg.string() + " --stacks 1 --queues 0 --count-only", res) == 1);
    CHECK(slurp(res) == "count 0\n");
    CHECK(run("oracle " + lg.string() + " --stacks 1 --queues 1 --count-only", res) == 0);
}

TEST_CASE("gadget certification exit codes") {
    CHECK(run("gadget --case smiley") == 0);
    CHECK(run("gadget --case smiley --ell 1") == 1);
    CHECK(run("gadget --case l4c1") == 0);
    CHECK(run("gadget --case l4c1 --ell 2") == 64);
    CHECK(run("gadget --case nonsense") == 64);
}

TEST_CASE("cnf export and model import round trip") {
    TempDir tmp;
    fs::path lg = tmp.path / "g.lg";
    CHECK(run("gen gkl --k 2 --ell 2 -o " + lg.string()) == 0);
    fs::path cnf_file = tmp.path / "g.cnf";
    CHECK(run("export-cnf " + lg.string() + " --stacks 1 --queues 1 -o " + cnf_file.string()) == 0);
    std::string dimacs = slurp(cnf_file);
    CHECK(dimacs.rfind("p cnf ", 0) == 0);

    // satisfy the same encoding with the reference solver, then import
    laygraph::Graph g = laygraph::read_lg_file(lg.string()).graph;
    laygraph::Cnf cnf = laygraph::encode(g, {1, 1});
    auto model = test_support::Dpll(cnf.clauses, cnf.variable_count).solve();
    REQUIRE(model.has_value());
    fs::path model_file = tmp.path / "model.txt";
    {
        std::ofstream out(model_file);
        out << "SAT\n";
        for (int v = 1; v <= cnf.variable_count; ++v)
            out << ((*model)[v] ? v : -v) << " ";
        out << "0\n";
    }
    fs::path ll = tmp.path / "fromcnf.ll";
    CHECK(run("import-model " + lg.string() + " " + model_file.string() +
              " --stacks 1 --queues 1 -o " + ll.string()) == 0);
    CHECK(run("verify " + lg.string() + " " + ll.string() + " --stacks 1 --queues 1") == 0);

    std::ofstream(model_file) << "garbage tokens\n";
    CHECK(run("import-model " + lg.string() + " " + model_file.string() +
              " --stacks 1 --queues 1") == 65);
}

TEST_CASE("error exit codes") {
    TempDir tmp;
    fs::path bad = tmp.path / "bad.lg";
    std::ofstream(bad) << "not a graph\n";
    CHECK(run("solve " + bad.string() + " --stacks 1 --queues 0") == 65);
    CHECK(run("solve " + (tmp.path / "missing.lg").string() + " --stacks 1 --queues 0") == 66);
    CHECK(run("solve") == 64);
    CHECK(run("frobnicate") == 64);
    CHECK(run("--help") == 0);
}
