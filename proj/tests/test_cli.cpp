#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + C2ZHU_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(C2ZHU_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit code 0 on passing verdicts") {
  CHECK(run("dims --n 3 --k 1").status == 0);
  CHECK(run("decompose --n 3 --k 1 --m 2").status == 0);
  CHECK(run("verify --n-max 3 --k-max 2 --suite all").status == 0);
  CHECK(run("oracle --n 2 --k 1 --mode characters").status == 0);
  CHECK(run("branch --N 4 --i 2 --k 1").status == 0);
  CHECK(run("cominuscule --type E --rank 8").status == 0);
  CHECK(run("--help").status == 0);
}

TEST_CASE("exit code 2 on usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("dims --n 3").status == 2);
  CHECK(run("dims --n 1 --k 1").status == 2);
  CHECK(run("dims --n 3 --k 1 --format yaml").status == 2);
  CHECK(run("verify --n-max 3 --k-max 1 --suite nope").status == 2);
  CHECK(run("branch --N 3 --i 0 --k 1").status == 2);
  CHECK(run("cominuscule --type E --rank 5").status == 2);
  CHECK(run("oracle --n 2 --k 1", "C2ZHU_BUDGET=abc").status == 2);
}

TEST_CASE("exit code 3 when the budget is exceeded") {
  const auto r = run("oracle --n 3 --k 1", "C2ZHU_BUDGET=100");
  CHECK(r.status == 3);
}

TEST_CASE("exit code is 0 exactly when every verdict passes") {
  for (const std::string args : {"dims --n 5 --k 3", "verify --n-max 4 --k-max 3", "oracle --n 3 --k 2 --max-degree 8",
                                 "decompose --n 4 --k 3 --m 6", "branch --N 6 --i 3 --k 4"}) {
    const auto r = run(args + " --format json");
    const auto j = nlohmann::json::parse(r.out);
    bool all = true;
    for (const auto& v : j["verdicts"]) all = all && v["status"] == "pass";
    CHECK(r.status == (all ? 0 : 1));
  }
}

TEST_CASE("output is byte-identical across runs") {
  for (const std::string args : {"dims --n 4 --k 2 --format json", "oracle --n 3 --k 1 --mode characters --format csv",
                                 "verify --n-max 4 --k-max 2", "decompose --n 4 --k 2 --m 4 --format json"}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("JSON output matches golden files") {
  CHECK(run("dims --n 3 --k 1 --format json").out == golden("dims_3_1.json"));
  CHECK(run("decompose --n 3 --k 1 --m 2 --format json").out == golden("decompose_3_1_2.json"));
  CHECK(run("oracle --n 2 --k 1 --mode characters --format json").out == golden("oracle_2_1.json"));
  CHECK(run("branch --N 3 --i 1 --k 2 --format json").out == golden("branch_3_1_2.json"));
  CHECK(run("cominuscule --type D --rank 5 --format json").out == golden("cominuscule_D_5.json"));
}

TEST_CASE("JSON schema") {
  const auto j = nlohmann::json::parse(run("oracle --n 3 --k 1 --format json").out);
  for (const char* key : {"command", "params", "rows", "totals", "verdicts", "elapsed_ms"}) CHECK(j.contains(key));
  CHECK(j["elapsed_ms"] == 0);
  CHECK(j["rows"].size() == 4);
  for (const auto& v : j["verdicts"]) CHECK(v["status"] == "pass");
  const auto timed = nlohmann::json::parse(run("--timing dims --n 2 --k 1 --format json").out);
  CHECK(timed["elapsed_ms"].is_number_integer());
}
