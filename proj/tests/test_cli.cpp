// End-to-end checks of the command-line tool: spawns the built binary and
// inspects exit codes and output.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HALASZ_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) r.output.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_dir() {
    auto d = std::filesystem::temp_directory_path() / "halasz_cli_test";
    std::filesystem::create_directories(d);
    return d.string();
}

std::string cache_flag() { return "--cache-dir " + temp_dir() + "/cache"; }

} // namespace

TEST_CASE("sum prints the exact partial sum") {
    RunResult r = run_cli(cache_flag() + " sum --func moebius --x 10");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("-1") != std::string::npos);

    RunResult tau = run_cli(cache_flag() + " sum --func tau --x 10");
    CHECK(tau.exit_code == 0);
    CHECK(tau.output.find("27") != std::string::npos);
}

TEST_CASE("unknown function exits 2 and lists the catalog") {
    RunResult r = run_cli(cache_flag() + " sum --func nosuch --x 10");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("moebius") != std::string::npos);
    CHECK(r.output.find("hecke_delta") != std::string::npos);
}

TEST_CASE("validation failures exit 2") {
    CHECK(run_cli(cache_flag() + " lvalue --func one --x 10000 --cutoff 50").exit_code == 2);
    CHECK(run_cli(cache_flag() + " sum --func one --x 1").exit_code == 2);
}

TEST_CASE("resource exhaustion exits 3") {
    // x_max over the hard cap is a validation error; an in-budget but huge
    // allocation is the resource path
    RunResult r = run_cli(cache_flag() + " sum --func one --x 99999999");
    CHECK(r.exit_code == 3);
}

TEST_CASE("triangle worked case passes with the documented numbers") {
    RunResult r =
        run_cli(cache_flag() + " triangle --f1 moebius --f2 moebius --x1 10 --x2 10 --t1 0 --t2 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"pass\":true") != std::string::npos);
    CHECK(r.output.find("3.7568") != std::string::npos);
}

TEST_CASE("dist emits the known prime reciprocal sum") {
    RunResult r = run_cli(cache_flag() + " dist --func one --t 0 --x 100");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1.8028") != std::string::npos);
}

TEST_CASE("sieve caches, dumps, and writes the manifest") {
    std::string dir = temp_dir();
    std::string dump = dir + "/one.bin";
    std::string manifest = dir + "/catalog.txt";
    RunResult r = run_cli(cache_flag() + " sieve --func one --x 1000 --dump " + dump +
                          " --manifest " + manifest);
    CHECK(r.exit_code == 0);
    CHECK(std::filesystem::exists(dump));
    CHECK(std::filesystem::file_size(dump) > 16000); // 1000 complex values + header
    std::ifstream mf(manifest);
    std::string text((std::istreambuf_iterator<char>(mf)), std::istreambuf_iterator<char>());
    CHECK(text.find("hecke_delta") != std::string::npos);
    CHECK(text.find("tau_pow2") != std::string::npos);

    // second run hits the cache and agrees
    RunResult again = run_cli(cache_flag() + " sum --func one --x 1000");
    CHECK(again.exit_code == 0);
    CHECK(again.output.find("1000") != std::string::npos);
}

TEST_CASE("spectral grid CSV is byte-stable without timestamps") {
    std::string dir = temp_dir();
    std::string a = dir + "/grid_a.csv", b = dir + "/grid_b.csv";
    std::string base = cache_flag() +
                       " --no-timestamp spectral --func one --x 1000 --grid-csv ";
    CHECK(run_cli(base + a + " --out " + dir + "/rep_a.json").exit_code == 0);
    CHECK(run_cli(base + b + " --out " + dir + "/rep_b.json").exit_code == 0);
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    std::string ca((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    std::string cb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    REQUIRE(!ca.empty());
    CHECK(ca == cb);
    CHECK(ca.find("t,re_l,im_l,abs_l") == 0); // no timestamp line
}

TEST_CASE("theorem pipeline subcommand emits a verdict") {
    RunResult r = run_cli(cache_flag() +
                          " theorem1 --f1 tau --x1 10000 --f2 tau --x2 10000 --C 0.05 --X-max 50000");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"claim\":\"theorem1\"") != std::string::npos);
    CHECK(r.output.find("\"pass\":true") != std::string::npos);

    RunResult vac = run_cli(cache_flag() +
                            " theorem1 --f1 moebius --x1 10000 --f2 moebius --x2 10000 --X-max 50000");
    CHECK(vac.exit_code == 0); // vacuous verdicts are successful runs
    CHECK(vac.output.find("\"vacuous\":true") != std::string::npos);
}

TEST_CASE("every subcommand has help text naming its quantity") {
    CHECK(run_cli("sum --help").output.find("partial sum") != std::string::npos);
    CHECK(run_cli("spectral --help").output.find("decay exponents") != std::string::npos);
    CHECK(run_cli("dist --help").output.find("Pretentious distance") != std::string::npos);
    CHECK(run_cli("lipschitz --help").output.find("x^{1/3}") != std::string::npos);
    CHECK(run_cli("theorem1 --help").output.find("eta") != std::string::npos);
}
