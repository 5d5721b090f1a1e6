// Drives the vcapprox executable end to end.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "vcapprox/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(VCAPPROX_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (const auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string fixture(const char* name) { return std::string(VCAPPROX_FIXTURES) + "/" + name; }

fs::path scratch() {
    const auto dir = fs::temp_directory_path() / "vcapprox_cli_tests";
    fs::create_directories(dir);
    return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("solve") {
        const auto star = run("solve --oracle exact " + fixture("star.graph"));
        CHECK(star.status == 0);
        const auto doc = vcapprox::read_result(star.out);
        CHECK(doc.cover == std::vector<std::int64_t>{0});
        CHECK(doc.oracle == "exact");

        const auto ls = run("solve --oracle local-search --eps 0.5 " + fixture("tangent.disks"));
        CHECK(ls.status == 0);
        CHECK(vcapprox::read_result(ls.out).swap_size == 4);

        const auto bad = run("solve " + fixture("malformed.graph"));
        CHECK(bad.status == 2);
        CHECK(run("solve /nonexistent/file").status == 2);
    }

    TEST_CASE("solve reports the oracle cap") {
        const auto dir = scratch();
        const auto big = run("gen --kind gnp --n 40 --p 0.5 --seed 1 -o " + (dir / "big.graph").string());
        REQUIRE(big.status == 0);
        CHECK(run("solve --oracle exact --cap 20 " + (dir / "big.graph").string()).status == 3);
        CHECK(run("solve --oracle exact --cap 31 " + (dir / "big.graph").string()).status == 4);
    }

    TEST_CASE("every solve output verifies; tampering is caught") {
        const auto dir = scratch();
        for (const char* name : {"star.graph", "c5.graph", "edgeless.graph", "heavy_edge.graph", "weighted.graph",
                                 "tangent.disks", "overlap.rects"}) {
            for (const char* oracle : {"exact", "greedy", "local-search"}) {
                const auto r = run(std::string("solve --oracle ") + oracle + " " + fixture(name));
                REQUIRE(r.status == 0);
                write(dir / "r.json", r.out);
                const auto v = run("verify " + fixture(name) + " " + (dir / "r.json").string());
                CHECK_MESSAGE(v.status == 0, name, " ", oracle, "\n", v.out);
                CHECK(v.out.find("optimum") != std::string::npos);
            }
        }

        const auto c5 = run("solve --oracle exact " + fixture("c5.graph"));
        auto doc = c5.out;
        const auto pos = doc.find("\"cover\": [\n    ");
        REQUIRE(pos != std::string::npos);
        const auto line_end = doc.find('\n', pos + 15);
        doc.erase(pos + 11, line_end - (pos + 11));  // drop the first cover id
        write(dir / "tampered.json", doc);
        const auto v = run("verify " + fixture("c5.graph") + " " + (dir / "tampered.json").string());
        CHECK(v.status == 1);
        CHECK(v.out.find("FAIL cover-valid") != std::string::npos);
    }

    TEST_CASE("kernelize") {
        const auto star = run("kernelize " + fixture("star.graph"));
        CHECK(star.status == 0);
        CHECK(star.out.find("c v0 3 3\n") != std::string::npos);
        CHECK(star.out.find("c vhalf 0 0\n") != std::string::npos);
        CHECK(star.out.find("c v1 1 1\n") != std::string::npos);
        CHECK(star.out.find("p graph 0 0\n") != std::string::npos);

        const auto c5 = run("kernelize " + fixture("c5.graph"));
        CHECK(vcapprox::parse_graph(c5.out) == vcapprox::parse_graph(read_text(fixture("c5.graph"))));
        const auto e = run("kernelize " + fixture("edgeless.graph"));
        CHECK(e.out.find("c v0 4 4\n") != std::string::npos);

        // the kernel file is a valid solve input
        const auto dir = scratch();
        write(dir / "kernel.graph", c5.out);
        CHECK(run("solve --oracle exact " + (dir / "kernel.graph").string()).status == 0);
    }

    TEST_CASE("gen is deterministic and handles n = 0") {
        const auto a = run("gen --kind disks --n 100 --seed 7");
        const auto b = run("gen --kind disks --n 100 --seed 7");
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
        CHECK(vcapprox::parse_shapes(a.out).size() == 100);
        const auto g = run("gen --kind gnp --n 12 --p 0.3 --seed 1");
        CHECK(vcapprox::parse_graph(g.out).size() == 12);
        CHECK(run("gen --n 0").out == "p disks 0\n");
        CHECK(run("gen --kind gnp --n 0").out == "p graph 0 0\n");
    }

    TEST_CASE("bench rows are deterministic") {
        const auto dir = scratch() / "bench";
        fs::create_directories(dir);
        for (int seed : {1, 2, 3}) {
            run("gen --kind disks --n 30 --region 25 --seed " + std::to_string(seed) + " -o " +
                (dir / ("d" + std::to_string(seed) + ".disks")).string());
        }
        const auto r = run("bench --threads 3 " + dir.string());
        CHECK(r.status == 0);
        std::istringstream lines(r.out);
        std::string line;
        std::vector<std::string> keys;
        std::getline(lines, line);
        CHECK(line.rfind("instance\tn\tm\tkernel_fraction\toracle", 0) == 0);
        while (std::getline(lines, line)) keys.push_back(line.substr(0, line.rfind('\t')));  // drop wall time
        CHECK(keys.size() == 12);  // 3 instances x (3 oracles + matching)
        const auto again = run("bench --threads 1 " + dir.string());
        std::istringstream lines2(again.out);
        std::getline(lines2, line);
        std::size_t i = 0;
        while (std::getline(lines2, line)) CHECK(keys.at(i++) == line.substr(0, line.rfind('\t')));
    }
}
