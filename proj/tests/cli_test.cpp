#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

int run(const std::string& args)
{
    const std::string cmd = std::string(MODPAIR_BIN) + " " + args + " > cli_test_out.txt 2> cli_test_err.txt";
    const int s = std::system(cmd.c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream o;
    o << in.rdbuf();
    return o.str();
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("passing runs exit 0 and write a report")
    {
        CHECK(run("selfcheck --grid-N 1024") == 0);
        CHECK(slurp("cli_test_out.txt").find("\"passed\": true") != std::string::npos);
        CHECK(run("inclusion --grid-N 1024 --phase1 exp:0.1 --phase2 id --out cli_test_report.json") == 0);
        CHECK(slurp("cli_test_report.json").find("\"inclusion.verdict\": \"true\"") != std::string::npos);
        std::remove("cli_test_report.json");
    }

    TEST_CASE("reports are byte-identical across runs")
    {
        REQUIRE(run("appendix-a --grid-N 1024") == 0);
        const std::string a = slurp("cli_test_out.txt");
        REQUIRE(run("appendix-a --grid-N 1024") == 0);
        CHECK(slurp("cli_test_out.txt") == a);
    }

    TEST_CASE("tiny grids pass the structural checks")
    {
        CHECK(run("selfcheck --grid-N 16") == 0);
    }

    TEST_CASE("usage and configuration errors exit 2")
    {
        CHECK(run("") == 2);
        CHECK(run("frobnicate") == 2);
        CHECK(run("example no-such-example") == 2);
        CHECK(run("selfcheck --grid-N 1023") == 2);
        CHECK(slurp("cli_test_err.txt").find("grid.N") != std::string::npos);
        CHECK(run("inclusion --phase1 blaschke:1i") == 2);
        CHECK(run("selfcheck --config /nonexistent.ini") == 2);
        CHECK(run("appendix-a --s 0") == 2);
        CHECK(slurp("cli_test_err.txt").find("s must be nonzero") != std::string::npos);
        CHECK(run("sweep nope --n-list 64") == 2);
        CHECK(run("sweep borchers --n-list 64,x") == 2);
        CHECK(run("selfcheck --json --csv") == 2);
    }

    TEST_CASE("a failing check exits 1")
    {
        // a structural tolerance below roundoff cannot be met
        {
            std::ofstream o("cli_test_strict.ini");
            o << "[tolerance]\nstructural = 1e-300\n";
        }
        CHECK(run("selfcheck --grid-N 1024 --config cli_test_strict.ini") == 1);
        CHECK(slurp("cli_test_out.txt").find("\"passed\": false") != std::string::npos);
        CHECK(slurp("cli_test_err.txt").find("FAIL") != std::string::npos);
        std::remove("cli_test_strict.ini");
    }

    TEST_CASE("sweep writes CSV")
    {
        CHECK(run("sweep appendix-a --n-list 1024,2048") == 0);
        const std::string csv = slurp("cli_test_out.txt");
        CHECK(csv.rfind("N,discrepancy,norm_defect,monotone\n", 0) == 0);
        CHECK(csv.find(",1\n2048,") != std::string::npos);
        CHECK(csv.substr(csv.size() - 3) == ",1\n");
    }
}
