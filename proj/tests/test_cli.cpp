#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef MCOR_CLI_PATH
#error "MCOR_CLI_PATH must point at the mcor binary"
#endif

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

CommandResult run(const std::string& args) {
  std::string command = std::string(MCOR_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct TempDataset {
  std::string path = "cli_test_dataset.tmp";

  explicit TempDataset(const std::string& contents) {
    std::ofstream out(path);
    out << contents;
  }
  ~TempDataset() { std::remove(path.c_str()); }
};

const std::string kMineArgs =
    "mine --format chars --prefix ad --gap 0,3 --mincf 0.7 --input ";

}  // namespace

TEST_CASE("mine prints rules then stats with fixed-precision confidence") {
  TempDataset dataset("adbdadcdccabadcd\n");
  CommandResult result = run(kMineArgs + dataset.path);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find(
            "rule antecedent=ad consequent=cd support=3 confidence=0.7500") !=
        std::string::npos);
  CHECK(result.output.find("stat sup_p=4") != std::string::npos);
  CHECK(result.output.find("stat cor_count=3") != std::string::npos);
}

TEST_CASE("identical flags and bytes give byte-identical output") {
  TempDataset dataset("adbdadcdccabadcd\nadadcd\n");
  CommandResult first = run(kMineArgs + dataset.path);
  CommandResult second = run(kMineArgs + dataset.path);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);

  CommandResult jobs = run(kMineArgs + dataset.path + " --jobs 4");
  CHECK(jobs.output == first.output);
}

TEST_CASE("parameter errors exit 2, I/O errors exit 1") {
  TempDataset dataset("adbdadcdccabadcd\n");
  CHECK(run("mine --format chars --prefix ad --gap 3,0 --mincf 0.7 --input " +
            dataset.path).exit_code == 2);
  CHECK(run("mine --format chars --prefix ad --gap 0,3 --mincf 0 --input " +
            dataset.path).exit_code == 2);
  CHECK(run("mine --format chars --prefix ad --gap 0,3 --input " + dataset.path)
            .exit_code == 2);  // missing --mincf
  CHECK(run(kMineArgs + "does_not_exist.tmp").exit_code == 1);
}

TEST_CASE("cop lists frequent patterns with the prefix") {
  TempDataset dataset("adbdadcdccabadcd\n");
  CommandResult result =
      run("cop --format chars --prefix ad --gap 0,3 --minsup 3 --input " + dataset.path);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("pattern items=adcd support=3") != std::string::npos);
  CHECK(result.output.find("stat pattern_count=4") != std::string::npos);
}

TEST_CASE("eval prints a metric record and rejects degenerate splits") {
  // Five copies of the running example: four train, one test.
  std::string rows;
  for (int i = 0; i < 5; ++i) rows += "adbdadcdccabadcd\n";
  TempDataset dataset(rows);
  CommandResult result =
      run("eval --format chars --prefix ad --gap 0,3 --mincf 0.7 --input " + dataset.path);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("metric tp=") != std::string::npos);
  CHECK(result.output.find("precision=") != std::string::npos);

  CHECK(run("eval --format chars --prefix ad --gap 0,3 --mincf 0.7 "
            "--train-fraction 1.0 --input " + dataset.path).exit_code == 2);
}

TEST_CASE("eval flags undefined metrics when the test set lacks the prefix") {
  TempDataset dataset("adbdadcdccabadcd\nadbdadcdccabadcd\nbbbb\n");
  CommandResult result =
      run("eval --format chars --prefix ad --gap 0,3 --mincf 0.7 --input " + dataset.path);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("metric tp=0 fp=") != std::string::npos);
  CHECK(result.output.find("recall=undef") != std::string::npos);
}

TEST_CASE("bench emits one run record per configuration") {
  TempDataset dataset("adbdadcdccabadcd\n");
  CommandResult result = run(
      "bench --format chars --prefix ad --gap 0,3 --sweep-gap 0,5 "
      "--mincf 0.5 --mincf 0.7 --input " + dataset.path);
  CHECK(result.exit_code == 0);
  int runs = 0;
  for (std::size_t pos = 0; (pos = result.output.find("run variant=", pos)) != std::string::npos;
       ++pos)
    ++runs;
  CHECK(runs == 4);  // 2 gaps x 2 mincf
  CHECK(result.output.find("mincf=0.5000") != std::string::npos);
}

TEST_CASE("oracle-check transcript is seed-deterministic") {
  CommandResult first = run("oracle-check --trials 50 --mining-trials 10 --seed 42");
  CommandResult second = run("oracle-check --trials 50 --mining-trials 10 --seed 42");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.find("failures=0") != std::string::npos);

  CommandResult none = run("oracle-check --trials 0 --mining-trials 0");
  CHECK(none.exit_code == 0);
  CHECK(none.output.find("trials=0") != std::string::npos);
}

TEST_CASE("token format with multi-character items and custom delimiter") {
  TempDataset dataset("m1;m2;m1;m2\nm2;m1;m2;m1;m2\n");
  CommandResult result = run(
      "mine --format tokens --delimiter ';' --prefix 'm1;m2' --gap 0,1 "
      "--mincf 0.5 --input " + dataset.path);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("stat sup_p=") != std::string::npos);
}
