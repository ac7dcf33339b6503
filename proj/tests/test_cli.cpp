#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

std::string binary_path() {
  const char* env = std::getenv("PICKAUDIT_BIN");
  return env != nullptr ? env : "./tools/pickaudit";
}

std::string data_dir() {
  const char* env = std::getenv("PICKAUDIT_DATA");
  return env != nullptr ? env : "../data";
}

std::string temp_file(const std::string& name) {
  const char* tmp = std::getenv("TMPDIR");
  return std::string(tmp != nullptr ? tmp : "/tmp") + "/pickaudit_test_" + name;
}

CmdResult run(const std::string& args) {
  const std::string out_path = temp_file("stdout.txt");
  const std::string cmd = binary_path() + " " + args + " > " + out_path + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  CmdResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  result.out = buf.str();
  return result;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("cli: basic test subcommands print the expected numbers") {
  const CmdResult std_run = run("test standard --mu-hat 0 --n 25");
  CHECK(std_run.exit_code == 0);
  CHECK(std_run.out.find("p_value") != std::string::npos);
  CHECK(std_run.out.find("0.5") != std::string::npos);
  CHECK(std_run.out.find("version") != std::string::npos);
  CHECK(std_run.out.find("config_hash") != std::string::npos);

  const CmdResult t5 = run("bounds t5 --alpha 0.05 --beta 0.05 --delta 0.05 --n-publish 10");
  CHECK(t5.exit_code == 0);
  CHECK(t5.out.find("1.255749292455672") != std::string::npos);

  const CmdResult t1 = run("bounds t1 --alpha 0.05 --n-all 20");
  CHECK(t1.exit_code == 0);
  CHECK(t1.out.find("0.641514077591457") != std::string::npos);
}

TEST_CASE("cli: conservative test reports its uncertainty and seed") {
  const CmdResult r =
      run("test conservative --mu-hat 1.0 --n 10 --n-all 30 --draws 5000 --seed 42");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("p_std_error") != std::string::npos);
  CHECK(r.out.find("seed") != std::string::npos);
  CHECK(r.out.find("draws") != std::string::npos);
}

TEST_CASE("cli: randomized commands demand a seed") {
  CHECK(run("test conservative --mu-hat 1.0 --n 10 --n-all 30").exit_code == 2);
  CHECK(run("simulate inspect --trials 50").exit_code == 2);
  CHECK(run("analyze real-data --csv whatever.csv").exit_code == 2);
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("test standard --bogus-flag 3").exit_code == 2);
  CHECK(run("bounds t5 --alpha 0.05").exit_code == 2);  // missing required flags
  CHECK(run("").exit_code == 2);                        // a subcommand is required
}

TEST_CASE("cli: data errors exit with 3 and numerical errors with 4") {
  CHECK(run("analyze real-data --csv /nonexistent.csv --seed 1").exit_code == 3);
  const std::string bad_csv = temp_file("bad.csv");
  write_file(bad_csv, "dataset_id,value\na,not_a_number\n");
  CHECK(run("analyze real-data --csv " + bad_csv + " --seed 1").exit_code == 3);
  CHECK(run("test t-one --values 1,1,1").exit_code == 4);
  CHECK(run("test standard --mu-hat 0 --n 0").exit_code == 4);
  CHECK(run("bounds t4 --delta 0.05 --n-publish 30 --n-all 30").exit_code == 4);
}

TEST_CASE("cli: identical seeded invocations produce identical bytes") {
  const std::string cfg = temp_file("config.json");
  write_file(cfg, "{\"n_all\": 30, \"n_publish\": 10, \"mu_gap\": 0.5, \"trials\": 200}");
  const std::string args = "simulate inspect --config " + cfg + " --seed 7";
  const CmdResult a = run(args);
  const CmdResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("detection_conditional") != std::string::npos);

  // flag overrides win over the config file
  const CmdResult c = run(args + " --trials 100");
  CHECK(c.out.find("trials") != std::string::npos);
  CHECK(c.out.find(" 100") != std::string::npos);
}

TEST_CASE("cli: output formats and --out") {
  const CmdResult json = run("--format json test standard --mu-hat 0.5 --n 9");
  CHECK(json.exit_code == 0);
  CHECK(json.out.find("\"p_value\"") != std::string::npos);

  const CmdResult csv = run("--format csv test standard --mu-hat 0.5 --n 9");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.find("kind,label,value") != std::string::npos);

  const std::string out_path = temp_file("report.txt");
  const CmdResult to_file =
      run("--out " + out_path + " test standard --mu-hat 0.5 --n 9");
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("p_value") != std::string::npos);
}

TEST_CASE("cli: simulate power emits one row per test per mu") {
  const CmdResult r = run(
      "simulate power --strategy unbiased --n-all 30 --n-publish 10 --mu-gap 0.5 "
      "--trials 100 --mc-draws 500 --mu-grid 0,1 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("standard@mu=0") != std::string::npos);
  CHECK(r.out.find("conservative@mu=1") != std::string::npos);
  CHECK(r.out.find("gap@mu=1") != std::string::npos);
}

TEST_CASE("cli: the real-data pipeline runs on the bundled fixture") {
  const std::string fixture = data_dir() + "/synthetic_improvements_66.csv";
  const std::string args =
      "analyze real-data --csv " + fixture + " --n-publish 5 --n-inspect 5 "
      "--resample-trials 1000 --seed 11";
  const CmdResult a = run(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out.find("reporter_p") != std::string::npos);
  CHECK(a.out.find("detection") != std::string::npos);
  CHECK(a.out.find("published_datasets") != std::string::npos);
  const CmdResult b = run(args);
  CHECK(a.out == b.out);

  // both resampling populations are supported
  const CmdResult incl = run(args + " --no-exclude-published");
  CHECK(incl.exit_code == 0);
}
