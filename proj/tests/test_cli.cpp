// Copyright (c) 2026 The nanophrase Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nanophrase/cli.hpp"
#include "nanophrase/decompose.hpp"
#include "nanophrase/errors.hpp"
#include "testutil.hpp"

using namespace nanophrase;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return RunResult{code, out.str(), err.str()};
}

// Writes a temp triple file; cleaned up on destruction.
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("nanophrase_test_" + std::to_string(++counter) + "_" +
            std::to_string(::getpid()) + ".txt");
    std::ofstream(path) << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

const char* kDiagTriple = "alpha: a b c d\ntau: a<->b c<->d\nS: diagonal\n";
const char* kEmptySTriple = "alpha: a b\ntau:\nS:\n";
const char* kAlphaG = "alpha: a\ntau:\nS: diagonal\n";

}  // namespace

TEST_CASE("cli factor prints the prime decomposition") {
  TempFile t(kDiagTriple);
  RunResult r = run({"factor", "-t", t.path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("composite: 2 prime factors") != std::string::npos);
  CHECK(r.out.find("alpha_F") != std::string::npos);

  RunResult lines = run({"factor", "-t", t.path.string(), "--format", "lines"});
  CHECK(lines.out.find("factor 1 alpha: a b class: alpha_F") != std::string::npos);
}

TEST_CASE("cli decide exit codes map the verdicts") {
  TempFile t(kEmptySTriple);
  RunResult yes = run({"decide", "-t", t.path.string(), "-p", "A:a ; AA", "-p", "; _"});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("Yes") != std::string::npos);

  RunResult no = run({"decide", "-t", t.path.string(), "-p", "A:a B:b ; ABAB", "-p", "; _"});
  CHECK(no.code == 1);

  TempFile g(kAlphaG);
  RunResult unk = run({"decide", "-t", g.path.string(), "-p", "A:a B:a ; ABAB", "-p", "; _",
                       "--node-budget", "5", "--rank-delta", "1"});
  CHECK(unk.code == 2);

  RunResult bad = run({"decide", "-t", g.path.string(), "-p", "A:a ; AAA", "-p", "; _"});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("cli invariants selection") {
  TempFile t("alpha: a b c\ntau:\nS:\n");
  RunResult r = run({"invariants", "-t", t.path.string(), "-p", "A:a B:b C:c ; ABC|AC|B",
                     "--which", "linking"});
  CHECK(r.code == 0);
  CHECK(r.out == "linking:\n1 ac b\nac 1 1\nb 1 1\n");
}

TEST_CASE("cli decompose and reduce round-trip through the parsers") {
  TempFile t(kDiagTriple);
  RunResult r = run({"decompose", "-t", t.path.string(), "-p",
                     "A:a C:a E:a B:c D:d F:d ; ACDEABFB|CE|DF"});
  CHECK(r.code == 0);
  // machine-checkable: second line parses back as a multiphrase
  std::istringstream lines(r.out);
  std::string theta_line, phrase_line;
  std::getline(lines, theta_line);
  std::getline(lines, phrase_line);
  CHECK(theta_line.rfind("theta:", 0) == 0);
  CHECK_NOTHROW(parse_multiphrase(phrase_line));

  TempFile t2(kEmptySTriple);
  RunResult red = run({"reduce", "-t", t2.path.string(), "-p", "A:a B:b ; AABB",
                       "--format", "lines"});
  CHECK(red.code == 0);
  ParsedReducedClass rc = parse_reduced_class(red.out);
  CHECK(rc.cert == Certification::Certified);
  CHECK(rc.theta.empty());
}

TEST_CASE("cli reads phrases from files") {
  TempFile t(kEmptySTriple);
  TempFile p("A:a ; AA\n");
  TempFile q("; _\n");
  RunResult r = run({"decide", "-t", t.path.string(), "-p", p.path.string(), "-p",
                     q.path.string()});
  CHECK(r.code == 0);
}

TEST_CASE("cli tabulate census") {
  TempFile g(kAlphaG);
  RunResult r = run({"tabulate", "-t", g.path.string(), "--max-rank", "1",
                     "--components", "1"});
  CHECK(r.code == 0);
  // AA merges with the empty word: one bucket, one class of two phrases
  CHECK(r.out.find("[2 phrases]") != std::string::npos);

  RunResult guard = run({"tabulate", "-t", g.path.string(), "--max-rank", "6"});
  CHECK(guard.code == 3);
}

TEST_CASE("census counts match the matching oracle") {
  // 15 canonical 1-component Gauss words of rank 3, before projection
  CHECK(testutil::count_matchings_oracle(6) == 15);
  HomotopyDataTriple g = testutil::alpha_g();
  auto buckets = tabulate(g, 3, 1, SearchBudget{2, 2000});
  std::size_t rank3 = 0, total = 0;
  for (const CensusBucket& b : buckets)
    for (const CensusClass& c : b.classes)
      for (const std::string& member : c.members) {
        ++total;
        if (parse_nanophrase(member, TokenMode::Tokens).rank() == 3) ++rank3;
      }
  CHECK(rank3 == 15);
  CHECK(total == 1 + 1 + 3 + 15);
}

TEST_CASE("census at rank 0 is a single row") {
  auto buckets = tabulate(testutil::alpha_g(), 0, 1);
  REQUIRE(buckets.size() == 1);
  REQUIRE(buckets[0].classes.size() == 1);
  CHECK(buckets[0].classes[0].members.size() == 1);
}

TEST_CASE("cli help and usage errors") {
  RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("factor") != std::string::npos);
  RunResult nocmd = run({});
  CHECK(nocmd.code == 3);
  RunResult badflag = run({"factor", "--no-such-flag"});
  CHECK(badflag.code == 3);
}
