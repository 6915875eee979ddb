// CLI behavior: exit codes, output formats, dump golden bytes.  Takes the
// CLI binary path as its only argument.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

#define REQUIRE(cond, msg)                                                    \
    do {                                                                      \
        if (!(cond)) {                                                        \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " "      \
                      << msg << "\n";                                         \
            ++failures;                                                       \
        }                                                                     \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-cli>\n";
        return 2;
    }
    const std::string cli = std::string("\"") + argv[1] + "\"";

    auto radii = run(cli + " radii --family psi --N 1..3 --n 1 --format csv");
    REQUIRE(radii.exit_code == 0, "radii exits 0");
    REQUIRE(radii.out.find("family,n,N,a0,x,r,width") == 0, "radii csv header");
    REQUIRE(radii.out.find("0.23606797749") != std::string::npos, "psi N=1 root value");

    auto both = run(cli + " radii --family cubic-a0 --a0 0.5 --format csv");
    REQUIRE(both.out.find("cubic-a0-stmt") != std::string::npos, "statement cubic reported");
    REQUIRE(both.out.find("cubic-a0-proof") != std::string::npos, "proof cubic reported");

    auto ok = run(cli + " verify --theorem 2.1a --n 2 --N 2 --eps 1e-3");
    REQUIRE(ok.exit_code == 0, "verify below exits 0");
    REQUIRE(ok.out.find("PASS") != std::string::npos, "verify below prints PASS rows");

    auto sharp = run(cli + " verify --theorem 2.1a --n 1 --N 1 --sharp --eps 1e-2 --format csv");
    REQUIRE(sharp.exit_code == 0, "verify sharp exits 0");
    REQUIRE(sharp.out.find("PASS") != std::string::npos, "sharp witness row present");

    auto bogus = run(cli + " verify --theorem bogus");
    REQUIRE(bogus.exit_code == 2, "unknown tag exits 2");

    auto badform = run(cli + " series-dump --a 0.5 --form diagonal");
    REQUIRE(badform.exit_code == 2, "invalid form exits 2");

    auto bada = run(cli + " series-dump --a 1.5 --form minus");
    REQUIRE(bada.exit_code == 2, "invalid a exits 2");

    auto dump = run(cli + " series-dump --a 0 --form minus --n 2 --K 1");
    REQUIRE(dump.exit_code == 0, "dump exits 0");
    REQUIRE(dump.out == "alpha,re,im\n\"1,0\",-1,0\n\"0,1\",-1,0\n", "dump golden bytes");

    auto prof = run(cli + " series-dump --a 0.5 --form minus --n 1 --K 3");
    REQUIRE(prof.out == "alpha,re,im\n0,0.5,0\n1,-0.75,0\n2,-0.375,0\n3,-0.1875,0\n",
            "profile dump rows");

    auto k0 = run(cli + " series-dump --a 0.5 --form minus --n 1 --K 0");
    REQUIRE(k0.out == "alpha,re,im\n0,0.5,0\n", "K=0 single constant row");

    auto lemma = run(cli + " verify --theorem lemma5 --n 2 --N 2 --seed 3 --format json-lines");
    REQUIRE(lemma.exit_code == 0, "lemma5 exits 0");
    REQUIRE(lemma.out.find("\"verdict\":\"PASS\"") != std::string::npos, "jsonl rows");

    auto sweep = run(cli + " sweep --theorems 2.3i,2.3j --n 1..2 --eps 1e-3 --format csv");
    REQUIRE(sweep.exit_code == 0, "sweep exits 0");
    REQUIRE(sweep.out.find("2.3j") != std::string::npos, "sweep covers both tags");

    if (failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << failures << " failure(s)\n";
    return 1;
}
