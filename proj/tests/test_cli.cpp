#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

RunResult run_seqtool(const std::string& args) {
    const char* bin = std::getenv("SEQTOOL_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "SEQTOOL_BIN must point at the seqtool binary");
    const std::string out_path = "turanham_cli_out.txt";
    const std::string err_path = "turanham_cli_err.txt";
    const std::string command =
        std::string(bin) + " " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

}  // namespace

TEST_CASE("compute prints one exact decimal") {
    const RunResult r = run_seqtool("compute -d 2 -n 20 --column labelled");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "113184512236563589997407\n");

    const RunResult dihedral = run_seqtool("compute -d 5 -n 8 --column dihedral");
    CHECK(dihedral.exit_code == 0);
    CHECK(dihedral.out == "77938101941693076258854\n");
}

TEST_CASE("identical invocations are byte-identical") {
    const RunResult a = run_seqtool("table -d 3 --n-max 6 --format json");
    const RunResult b = run_seqtool("table -d 3 --n-max 6 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("argument errors exit with status 2") {
    CHECK(run_seqtool("compute -d 1 -n 3 --column labelled").exit_code == 2);
    CHECK(run_seqtool("compute -d 2 -n 0").exit_code == 2);
    CHECK(run_seqtool("compute -d 2 -n 3 --column sideways").exit_code == 2);
    CHECK(run_seqtool("table -d 2 --format nonsense").exit_code == 2);
    CHECK(run_seqtool("no-such-command").exit_code == 2);

    const RunResult usage = run_seqtool("compute -d 1 -n 3");
    CHECK(usage.out.empty());
    CHECK(!usage.err.empty());
}

TEST_CASE("b-file output matches the shipped values") {
    const RunResult r = run_seqtool("table -d 2 --n-max 6 --format bfile --column labelled");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 0\n2 1\n3 4\n4 31\n5 293\n6 3326\n");
}

TEST_CASE("table writes files and reports unwritable paths") {
    const std::string path = "turanham_cli_table.csv";
    const RunResult r = run_seqtool("table -d 2 --n-max 3 --format csv -o " + path);
    CHECK(r.exit_code == 0);
    CHECK(slurp(path) == "n,linear,labelled,rotations,all_symmetries\n"
                         "1,0,0,0,0\n2,1,1,1,1\n3,5,4,2,2\n");
    std::remove(path.c_str());

    CHECK(run_seqtool("table -d 2 --n-max 2 -o /no/such/dir/t.csv").exit_code == 1);
}

TEST_CASE("cache save then load reproduces identical output") {
    const std::string cache = "turanham_cli.cache";
    const RunResult fresh = run_seqtool("table -d 2 --n-max 8 --format csv");
    const RunResult save = run_seqtool("cache save --path " + cache + " -d 2 --n-max 8");
    CHECK(save.exit_code == 0);
    const RunResult cached = run_seqtool("table -d 2 --n-max 8 --format csv --cache " + cache);
    CHECK(cached.exit_code == 0);
    CHECK(cached.out == fresh.out);

    const RunResult probe = run_seqtool("cache load --path " + cache);
    CHECK(probe.exit_code == 0);

    std::ofstream(cache, std::ios::binary) << "turanham-cache/1 fnv1a64=0000000000000000\n{}";
    CHECK(run_seqtool("cache load --path " + cache).exit_code == 1);
    std::remove(cache.c_str());
}

TEST_CASE("verify fails loudly when the known-bad variants are switched on") {
    CHECK(run_seqtool("verify --scope identities").exit_code == 0);
    const RunResult chord = run_seqtool("verify --scope identities --printed-chord-formula");
    CHECK(chord.exit_code == 1);
    const RunResult weights = run_seqtool("verify --scope identities --printed-dihedral-weights");
    CHECK(weights.exit_code == 1);
}
