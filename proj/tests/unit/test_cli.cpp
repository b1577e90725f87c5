#include "cli.hpp"

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace betticone::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "betti-cone");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("betticone_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("betti command", "[cli]") {
    const auto k3 = call({"betti", "--graph", "3;1 2;2 3;1 3"});
    CHECK(k3.code == kOk);
    CHECK(contains(k3.out, "1: 3 2\n"));
    CHECK(contains(k3.out, "canonical: (0,2)=3;(1,3)=2"));
    CHECK(contains(k3.out, "field: Q"));

    CHECK(call({"betti", "--g6", "Bw"}).out == k3.out);

    const auto two = call({"betti", "--graph", "4;1 2;3 4"});
    CHECK(contains(two.out, "1: 2 · ·\n2:   1\n"));

    CHECK(call({"betti", "--g6", "Bw", "--out", "csv"}).out == "row,0,1\n1,3,2\n");
    CHECK(contains(call({"betti", "--g6", "Bw", "--out", "st"}).out, "\"diagram\": \"(0,2)=3;(1,3)=2\""));
    CHECK(contains(call({"betti", "--g6", "Bw", "--field", "2"}).out, "field: GF(2)"));
}

TEST_CASE("graph files are sniffed", "[cli]") {
    const auto dir = scratch_dir("files");
    std::ofstream(dir / "k3.txt") << "3\n1 2\n2 3\n1 3\n";
    std::ofstream(dir / "k3.g6") << "Bw\n";
    const auto a = call({"betti", "--file", (dir / "k3.txt").string()});
    const auto b = call({"betti", "--file", (dir / "k3.g6").string()});
    CHECK(a.code == kOk);
    CHECK(a.out == b.out);
    CHECK(call({"betti", "--file", (dir / "missing").string()}).code == kUsage);
}

TEST_CASE("hk command", "[cli]") {
    const auto k4 = call({"hk", "--g6", "C~"});
    CHECK(k4.code == kOk);
    CHECK(contains(k4.out, "height: 3"));
    CHECK(contains(k4.out, "HK: [1, 0, 0, 24, 216]"));
    CHECK(contains(k4.out, "vanishing HK_1..HK_2: yes"));

    const auto l = call({"hk", "--graph", "2;1 2"});
    CHECK(contains(l.out, "height: 1"));
    CHECK(contains(l.out, "HK: [1, "));
    CHECK(contains(l.out, "no constraints"));

    const auto e4 = call({"hk", "--graph", "4", "--max-j", "2"});
    CHECK(contains(e4.out, "height: 0"));
    CHECK(contains(e4.out, "HK: [0, 0, 0]"));
}

TEST_CASE("cone-dim command", "[cli]") {
    const auto f = call({"cone-dim", "-n", "6"});
    CHECK(f.code == kOk);
    CHECK(contains(f.out, "dimension: 9"));

    const auto w = call({"cone-dim", "-n", "6", "--height", "3", "--method", "witnesses"});
    CHECK(contains(w.out, "dimension: 7"));
    CHECK(contains(w.out, "certified"));
    CHECK(contains(w.out, "(C_4+E_1)^c"));
    CHECK(contains(w.out, "(E_3+K_3)^c"));

    const auto e = call({"cone-dim", "-n", "5", "--method", "enumerate"});
    CHECK(contains(e.out, "dimension: 6"));
    CHECK(contains(e.out, "certification: certified"));

    const auto hk = call({"cone-dim", "-n", "7", "--height", "3", "--method", "hk-subspace"});
    CHECK(contains(hk.out, "dimension: 10"));
}

TEST_CASE("exit codes", "[cli]") {
    CHECK(call({"betti", "--graph", "2;1 1"}).code == kParse);
    CHECK(call({"betti", "--g6", "~??~"}).code == kCapacity);
    CHECK(call({"cone-dim", "-n", "9", "--method", "enumerate"}).code == kCapacity);
    CHECK(call({"cone-dim", "-n", "8", "--method", "enumerate"}).code == kCapacity);
    CHECK(call({"betti"}).code == kUsage);
    CHECK(call({"betti", "--g6", "Bw", "--graph", "3"}).code == kUsage);
    CHECK(call({"cone-dim", "-n", "6", "--height", "0"}).code == kUsage);
    CHECK(contains(call({"cone-dim", "-n", "6", "--height", "0"}).err, "height 0"));
    CHECK(call({"cone-dim", "-n", "6", "--height", "6"}).code == kUsage);
    CHECK(call({"cone-dim", "-n", "6", "--method", "magic"}).code == kUsage);
    CHECK(call({"betti", "--g6", "Bw", "--field", "6"}).code == kUsage);
    CHECK(call({"betti", "--g6", "Bw", "--workers", "0"}).code == kUsage);
    CHECK(call({"nonsense"}).code == kUsage);
    CHECK(call({"--help"}).code == kOk);
}

TEST_CASE("process exit status", "[cli]") {
    const std::string exe = BETTI_CONE_EXE;
    const int ok = std::system((exe + " cone-dim -n 4 > /dev/null").c_str());
    const int bad = std::system((exe + " betti --graph '2;1 1' 2> /dev/null").c_str());
    CHECK(WEXITSTATUS(ok) == kOk);
    CHECK(WEXITSTATUS(bad) == kParse);
}

TEST_CASE("output does not depend on worker count", "[cli]") {
    const auto a = call({"cone-dim", "-n", "6", "--height", "2", "--method", "enumerate", "--dedupe",
                         "--workers", "1", "--out", "st"});
    const auto b = call({"cone-dim", "-n", "6", "--height", "2", "--method", "enumerate", "--dedupe",
                         "--workers", "4", "--out", "st"});
    auto strip = [](std::string s) {
        const auto p = s.find("\"elapsed_seconds\"");
        if (p != std::string::npos) {
            s.erase(p, s.find('\n', p) - p);
        }
        return s;
    };
    CHECK(strip(a.out) == strip(b.out));
    CHECK(call({"cone-dim", "-n", "6", "--method", "witnesses", "--workers", "3", "--out", "st"}).out ==
          call({"cone-dim", "-n", "6", "--method", "witnesses", "--workers", "1", "--out", "st"}).out);
}

TEST_CASE("enumeration cache", "[cli]") {
    const auto dir = scratch_dir("cache");
    const std::vector<std::string> args{"cone-dim", "-n", "5", "--method", "enumerate", "--dedupe",
                                        "--cache-dir", dir.string(), "--out", "st"};
    const auto cold = call(args);
    REQUIRE(cold.code == kOk);
    CHECK(std::filesystem::exists(dir / "enumerate_n5_hall_q_dedupe.json"));
    const auto warm = call(args);
    CHECK(warm.out == cold.out);

    const auto env_dir = scratch_dir("cache_env");
    ::setenv("BETTI_CONE_CACHE", env_dir.string().c_str(), 1);
    call(args);
    ::unsetenv("BETTI_CONE_CACHE");
    CHECK(std::filesystem::exists(env_dir / "enumerate_n5_hall_q_dedupe.json"));
}

TEST_CASE("verify command", "[cli]") {
    const auto v = call({"verify", "--max-n", "4"});
    CHECK(v.code == kOk);
    CHECK(contains(v.out, "all checks passed"));
    CHECK_FALSE(contains(v.out, "FAIL"));
    CHECK(call({"verify", "--max-n", "9"}).code == kUsage);
}

TEST_CASE("configuration validation", "[cli]") {
    RunConfig c;
    c.command = Command::cone_dim;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c.n = 5;
    CHECK_NOTHROW(validate(c));
    c.graph6 = "Bw";
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    RunConfig b;
    b.command = Command::betti;
    b.graph6 = "Bw";
    b.h = 2;
    CHECK_THROWS_AS(validate(b), std::invalid_argument);
}
