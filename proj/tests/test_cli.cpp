#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

const fs::path& scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "hexmono_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string at(const std::string& name) { return (scratch() / name).string(); }

int run(const std::string& args) {
    std::string cmd = std::string(HEXMONO_CLI) + " " + args + " >" + at("stdout.txt") + " 2>" + at("stderr.txt");
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string out() {
    std::ifstream in(at("stdout.txt"));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit 2") {
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("build spiral n=2") == 2);
    CHECK(run("build nope -o " + at("x.hex")) == 2);
    CHECK(run("build spiral m=2 -o " + at("x.hex")) == 2);
    CHECK(run("analyze " + at("missing.hex")) == 2);
    CHECK(run("render " + at("missing.hex") + " --layers BOGUS -o " + at("x.svg")) == 2);
}

TEST_CASE("build, analyze, render") {
    REQUIRE(run("build spiral n=2 -o " + at("p2.hex") + " --svg " + at("p2b.svg")) == 0);
    CHECK(fs::exists(at("p2b.svg")));
    CHECK(run("analyze " + at("p2.hex")) == 0);
    CHECK(out().find("\"tiles\": 21") != std::string::npos);
    CHECK(run("render " + at("p2.hex") + " --layers TILES,SPIRAL_ANCHORS --scale 10 -o " + at("p2.svg")) == 0);
    CHECK(fs::file_size(at("p2.svg")) > 100);
    REQUIRE(run("build periodic-lattice extent=3 -o " + at("lat.hex")) == 0);
    CHECK(run("analyze " + at("lat.hex")) == 1);
}

TEST_CASE("search commands") {
    REQUIRE(run("build cycle-seed -o " + at("cyc.hex")) == 0);
    CHECK(run("refute " + at("cyc.hex") + " --radius 4 --certificate " + at("cyc.cert")) == 1);
    std::ifstream cert(at("cyc.cert"));
    std::string first;
    std::getline(cert, first);
    CHECK(first == "hexmono certificate v1");
    CHECK(run("refute " + at("cyc.hex") + " --radius 4 --budget 5") == 3);
    CHECK(run("refute " + at("cyc.hex") + " --radius 4 --r1-only") == 0);
    REQUIRE(run("build spiral n=0 -o " + at("one.hex")) == 0);
    CHECK(run("refute " + at("one.hex") + " --radius 2") == 0);
    CHECK(run("embed-check " + at("one.hex") + " --radius 2") == 0);
    CHECK(run("embed-check " + at("cyc.hex") + " --radius 3") == 1);
    CHECK(run("forced-lengths " + at("one.hex") + " --radius 4") == 0);
    CHECK(run("forced-lengths " + at("one.hex") + " --radius 4 --threads 2") == 0);
    CHECK(::setenv("HEXMONO_BUDGET", "5", 1) == 0);
    CHECK(run("refute " + at("cyc.hex") + " --radius 4") == 3);
    ::unsetenv("HEXMONO_BUDGET");
}

TEST_CASE("templates") {
    CHECK(run("template") == 0);
    CHECK(out() == "prototile v1\npairs 0-5 1-4 2-3\nr1 S S E S E E\nr2 - - . - + .\n");
    CHECK(run("calibrate --same-half-stripe") == 1);
}

}
