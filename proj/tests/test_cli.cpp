// Drives the installed binary end to end through files and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "fullerene/fixtures.hpp"
#include "fullerene/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(ANTIFORCE_BIN) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "antiforce-cli-test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string fixture_file() {
  static std::string path = [] {
    fs::path p = work_dir() / "f20.graph";
    std::ofstream out(p);
    out << fullerene::graph_to_text(fullerene::f20());
    return p.string();
  }();
  return path;
}

}  // namespace

TEST_CASE("validate") {
  SUBCASE("fixture passes") {
    auto r = run("--no-timings validate " + fixture_file());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("check fullerene: pass") != std::string::npos);
    CHECK(r.out.find("pentagons: 12") != std::string::npos);
  }
  SUBCASE("cube fails with a face diagnostic") {
    // cubic with quadrilateral faces
    fs::path p = work_dir() / "cube.graph";
    {
      std::ofstream out(p);
      out << "8 12\n";
      out << "0: 3 8 0\n1: 0 9 1\n2: 1 10 2\n3: 2 11 3\n";
      out << "4: 7 4 8\n5: 4 5 9\n6: 5 6 10\n7: 6 7 11\n";
      for (int i = 0; i < 4; ++i)
        out << i << ": " << i << " " << (i + 1) % 4 << "\n";
      for (int i = 0; i < 4; ++i)
        out << 4 + i << ": " << 4 + i << " " << 4 + (i + 1) % 4 << "\n";
      for (int i = 0; i < 4; ++i) out << 8 + i << ": " << i << " " << 4 + i << "\n";
    }
    auto r = run("--no-timings validate " + p.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("face of size 4") != std::string::npos);
  }
  SUBCASE("truncated file is an input error") {
    fs::path p = work_dir() / "trunc.graph";
    {
      std::ofstream out(p);
      out << "20 30\n0: 0 8 4\n";
    }
    auto r = run("--no-timings validate " + p.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("parse error") != std::string::npos);
  }
  SUBCASE("missing file is an input error") {
    CHECK(run("--no-timings validate /nonexistent.graph").exit_code == 2);
  }
}

TEST_CASE("af") {
  SUBCASE("fixture value and witness") {
    auto r = run("--no-timings af " + fixture_file());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("af = 4") != std::string::npos);
    CHECK(r.out.find("witness: 0 1 2 20") != std::string::npos);
    CHECK(r.out.find("exhausted_below: true") != std::string::npos);
  }
  SUBCASE("budget exceeded") {
    auto r = run("--no-timings af --budget 3 " + fixture_file());
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("af > 3") != std::string::npos);
  }
  SUBCASE("deterministic output") {
    auto a = run("--no-timings af " + fixture_file());
    auto b = run("--no-timings --jobs 2 af " + fixture_file());
    CHECK(a.out == b.out);
  }
}

TEST_CASE("forcing") {
  auto r = run("--no-timings forcing " + fixture_file());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("f = 3") != std::string::npos);
  SUBCASE("budget exceeded") {
    auto b = run("--no-timings forcing --budget 2 " + fixture_file());
    CHECK(b.exit_code == 3);
    CHECK(b.out.find("f > 2") != std::string::npos);
  }
}

TEST_CASE("cec") {
  auto r = run("--no-timings cec " + fixture_file());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("check cyclic edge connectivity 5: pass") !=
        std::string::npos);
}

TEST_CASE("digraph") {
  fs::path dot = work_dir() / "d.dot";
  fs::path dump = work_dir() / "d.txt";
  auto r = run("--no-timings digraph --dot " + dot.string() + " --dump " +
               dump.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("50 nodes, 71 arcs, 1 loop, 3 symmetric pairs") !=
        std::string::npos);
  CHECK(fs::exists(dot));
  CHECK(fs::exists(dump));
  SUBCASE("unwritable path") {
    CHECK(run("--no-timings digraph --dot /no/such/dir/x.dot").exit_code == 2);
  }
}

TEST_CASE("construct") {
  SUBCASE("28 vertices with verification") {
    fs::path out = work_dir() / "f28.graph";
    auto r = run("--no-timings construct --n 28 --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("vertices: 28") != std::string::npos);
    CHECK(r.out.find("check af = 4 (verified): pass") != std::string::npos);
    REQUIRE(fs::exists(out));
    std::ifstream in(out);
    std::string head;
    std::getline(in, head);
    CHECK(head == "28 42");
  }
  SUBCASE("excluded orders exit with the domain code") {
    CHECK(run("--no-timings construct --n 22").exit_code == 4);
    CHECK(run("--no-timings construct --n 26").exit_code == 4);
    CHECK(run("--no-timings construct --n 19").exit_code == 4);
  }
  SUBCASE("large orders skip the oracle") {
    auto r = run("--no-timings construct --n 40");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("oracle check skipped") != std::string::npos);
  }
}

TEST_CASE("export and synthesize") {
  fs::path dir = work_dir() / "fixtures";
  fs::create_directories(dir);
  auto r = run("--no-timings export --dir " + dir.string());
  CHECK(r.exit_code == 0);
  REQUIRE(fs::exists(dir / "f20.walk"));
  REQUIRE(fs::exists(dir / "f26.graph"));

  SUBCASE("exported fixtures validate") {
    for (const char* f : {"f20.graph", "f24.graph", "f26.graph"}) {
      auto v = run("--no-timings validate " + (dir / f).string());
      CHECK(v.exit_code == 0);
    }
  }
  SUBCASE("replaying the exported walk gives the dodecahedron") {
    auto s = run("--no-timings synthesize --seed Fs15 --walk " +
                 (dir / "f20.walk").string());
    CHECK(s.exit_code == 0);
    CHECK(s.out.find("vertices: 20") != std::string::npos);
    CHECK(s.out.find("check af = 4 (verified): pass") != std::string::npos);
  }
  SUBCASE("unknown seed is a domain error") {
    auto s = run("--no-timings synthesize --seed Fs99 --walk " +
                 (dir / "f20.walk").string());
    CHECK(s.exit_code == 4);
  }
  SUBCASE("stalling walk is reported") {
    fs::path bad = work_dir() / "bad.walk";
    {
      std::ofstream out(bad);
      out << "O3\n";
    }
    auto s = run("--no-timings synthesize --seed Fs15 --walk " + bad.string());
    CHECK(s.exit_code == 4);
    CHECK(s.out.find("step 1") != std::string::npos);
  }
}

TEST_CASE("accelerated ordering reaches the same number") {
  auto r = run("--no-timings af --accelerated " + fixture_file());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("af = 4") != std::string::npos);
}

TEST_CASE("verify-all is byte-identical across runs") {
  auto a = run("--no-timings verify-all");
  auto b = run("--no-timings verify-all");
  CHECK(a.out == b.out);
  CHECK(a.exit_code == b.exit_code);
  // one line per criterion
  int lines = 0;
  for (size_t pos = 0; (pos = a.out.find("criterion ", pos)) != std::string::npos;
       ++pos)
    ++lines;
  CHECK(lines == 10);
}

TEST_CASE("unknown subcommand is an input error") {
  CHECK(run("--no-timings frobnicate").exit_code == 2);
}
