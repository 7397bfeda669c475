#include <fstream>
#include <sstream>

#include "doctest.h"
#include "thinset/cli.hpp"

using namespace thinset;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("mu subcommand prints the formula value") {
  CliRun r = cli({"mu", "--sizeG", "aleph omega", "--kappa", "aleph 3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("aleph omega") != std::string::npos);

  CliRun amb = cli({"mu", "--sizeG", "aleph omega1", "--kappa", "aleph omega1"});
  CHECK(amb.code == 0);
  CHECK(amb.out.find("{aleph 0, aleph 1}") != std::string::npos);

  CliRun bad = cli({"mu", "--sizeG", "aleph 1", "--kappa", "aleph 2"});
  CHECK(bad.code == 2);
}

TEST_CASE("check-thin subcommand and exit codes") {
  CliRun ok = cli({"check-thin", "--group", "Z^1", "--set", "pairs 10^n", "--radius",
                   "F8", "--m", "2", "--window", "10000"});
  CHECK(ok.code == 0);

  CliRun violated = cli({"check-thin", "--group", "Z^1", "--set", "evens", "--radius",
                         "{0,2}", "--m", "1", "--window", "2000"});
  CHECK(violated.code == 1);
  CHECK(violated.out.find("violated") != std::string::npos);

  CliRun input_error = cli({"check-thin", "--group", "Zoo 3", "--set", "evens",
                            "--window", "100"});
  CHECK(input_error.code == 2);
}

TEST_CASE("partition subcommands") {
  CliRun greedy = cli({"partition", "--group", "Z^1", "--set", "pairs 10^n", "--m", "2",
                       "--window", "10000", "--schedule", "F1,F2,F4,F8"});
  CHECK(greedy.code == 0);
  CHECK(greedy.out.find("parts=2") != std::string::npos);

  CliRun uniform = cli({"partition", "--algorithm", "uniform", "--group", "Z^1",
                        "--set", "explicit {0,1,10,11,20,21}", "--window", "101",
                        "--u-radius", "2", "--v-radius", "1", "--mu", "2"});
  CHECK(uniform.code == 0);

  CliRun chain = cli({"partition", "--algorithm", "chain", "--group",
                      "DirectSum[Zmod 2; omega]", "--set",
                      "explicit {[1],[0,1],[0,0,1],[0,0,0,1],[0,0,1,1],[1,0,1,1]}",
                      "--m", "2", "--window", "16", "--levels", "4",
                      "--parts-target", "4"});
  CHECK(chain.code == 0);
  CHECK(chain.out.find("exceptions=0") != std::string::npos);

  CliRun not_thin = cli({"partition", "--group", "Z^1", "--set", "evens", "--m", "1",
                         "--window", "2000", "--schedule", "F4"});
  CHECK(not_thin.code == 1);
}

TEST_CASE("color-square subcommand verifies the step-3 containments") {
  CliRun r = cli({"color-square", "--group", "DirectSum[Zmod 2; omega]", "--levels",
                  "4", "--window", "16", "--verify-lines"});
  CHECK(r.code == 0);
  CHECK(r.out.find("violations=0") != std::string::npos);
  CHECK(r.out.find("note") != std::string::npos);

  CliRun bad_chain = cli({"color-square", "--group", "Z^1", "--levels", "3",
                          "--window", "8", "--verify-lines"});
  CHECK(bad_chain.code == 2);
}

TEST_CASE("construct subcommands") {
  CliRun bergman = cli({"construct", "bergman", "--H", "Zmod 5", "--K", "Zmod 10007",
                        "--indexing", "ordered", "--seed", "7", "--verify",
                        "translate-count"});
  CHECK(bergman.code == 0);
  CHECK(bergman.out.find("count=6") != std::string::npos);

  CliRun unord = cli({"construct", "bergman", "--H", "Zmod 5", "--K", "Zmod 10007",
                      "--indexing", "unordered", "--seed", "7", "--verify",
                      "translate-count"});
  CHECK(unord.code == 0);
  CHECK(unord.out.find("count=3") != std::string::npos);

  CliRun quadratic = cli({"construct", "quadratic", "--d", "4", "--K", "Zmod 10007",
                          "--m", "2", "--pairs", "12", "--seed", "3", "--verify",
                          "collisions"});
  CHECK(quadratic.code == 0);

  CliRun sum = cli({"construct", "direct-sum", "--d", "2", "--K", "Zmod 10007",
                    "--seed", "5", "--pairs", "5", "--verify", "outside-summand"});
  CHECK(sum.code == 0);
  CHECK(sum.out.find("max-intersection=1") != std::string::npos);
}

TEST_CASE("records replay is byte-identical") {
  std::vector<std::string> args{"check-thin", "--group",  "Z^1",    "--set",
                                "pairs 10^n", "--radius", "F4",     "--m",
                                "2",          "--window", "5000",   "--format",
                                "records"};
  CliRun first = cli(args);
  CHECK(first.code == 0);
  CHECK(first.out.rfind("!thinset-records 1\n", 0) == 0);

  // Extract the manifest line, replay it, compare bytes.
  std::istringstream in(first.out);
  std::string line, manifest_line;
  while (std::getline(in, line))
    if (line.rfind("manifest", 0) == 0) manifest_line = line;
  REQUIRE_FALSE(manifest_line.empty());

  std::string path = "replay_manifest.txt";
  {
    std::ofstream file(path);
    file << manifest_line << "\n";
  }
  CliRun replayed = cli({"replay", path});
  CHECK(replayed.code == first.code);
  CHECK(replayed.out == first.out);

  CliRun again = cli(args);
  CHECK(again.out == first.out);
}

TEST_CASE("construction outputs feed check-thin through the subset grammar") {
  CliRun r = cli({"check-thin", "--group", "Product(Zmod 3, Zmod 101)", "--set",
                  "construction bergman; H=Zmod 3; K=Zmod 101; indexing=unordered; "
                  "seed=2; pool=101",
                  "--radius", "F1", "--m", "2", "--window", "303"});
  CHECK(r.code == 0);
  CHECK(r.out.find("subset-size=3") != std::string::npos);

  CliRun mismatch = cli({"check-thin", "--group", "Z^1", "--set",
                         "construction bergman; H=Zmod 3; K=Zmod 101; pool=101",
                         "--radius", "F1", "--m", "2", "--window", "100"});
  CHECK(mismatch.code == 2);
}

TEST_CASE("color-square table dump lists quadruples deterministically") {
  std::vector<std::string> args{"color-square", "--group", "DirectSum[Zmod 2; omega]",
                                "--levels",     "2",       "--window",
                                "4",            "--dump-table", "--format", "records"};
  CliRun first = cli(args);
  CHECK(first.code == 0);
  CHECK(first.out.find("cell x=[] y=[1]") != std::string::npos);
  CHECK(first.out.find("region=") != std::string::npos);
  CliRun second = cli(args);
  CHECK(second.out == first.out);
}

TEST_CASE("construct replay is byte-identical in records mode") {
  std::vector<std::string> args{"construct", "bergman", "--H", "Zmod 5", "--K",
                                "Zmod 10007", "--indexing", "unordered", "--seed",
                                "7", "--verify", "translate-count", "--format",
                                "records"};
  CliRun first = cli(args);
  CHECK(first.code == 0);
  CliRun second = cli(args);
  CHECK(second.out == first.out);
}

TEST_CASE("manifest lines round-trip through escaping") {
  RunManifest m;
  m.set("command", "check-thin");
  m.set("set", "pairs 10^n");
  m.set("group", "Product(Z^1, Zmod 7)");
  m.set("odd", "a=b 50% c\nd");
  RunManifest back = RunManifest::from_line(m.to_line());
  CHECK(back.fields() == m.fields());
  CHECK(m.to_line().find('\n') == std::string::npos);
}

TEST_CASE("help exits zero") {
  CliRun r = cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check-thin") != std::string::npos);
}
