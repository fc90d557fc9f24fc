// Copyright 2026 The phaseshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

/// Runs the command line tool; stderr is discarded.
Run run(const std::string& args) {
  const std::string cmd = std::string(PHASESHIFT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Scratch directory shared by the cases below.
const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("phaseshift_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

std::string make_state(const std::string& spec, const std::string& name) {
  const Run r = run("state " + spec + " --out " + path(name));
  REQUIRE(r.code == 0);
  return path(name);
}

}  // namespace

TEST_CASE("state generation") {
  const auto ghz = nlohmann::json::parse(read_file(make_state("ghz 3", "ghz3.json")));
  CHECK(ghz["dim"] == 8);
  double trace = 0;
  for (int i = 0; i < 8; ++i) trace += ghz["entries"][i * 9][0].get<double>();
  CHECK(std::abs(trace - 1.0) <= 1e-12);

  make_state("ginibre 4 4 1", "g1.json");
  make_state("ginibre 4 4 1", "g1b.json");
  CHECK(read_file(path("g1.json")) == read_file(path("g1b.json")));

  const auto grid = nlohmann::json::parse(read_file(make_state("gaussian-grid 64 -8 8 0 1", "grid.json")));
  CHECK(grid["G"] == 64);

  CHECK(run("state ghz x").code == 1);
  CHECK(run("state teleport 3").code == 1);
  CHECK(run("state ghz 1").code == 3);
  CHECK(run("state ginibre 4 9 1").code == 3);
  CHECK(run("state gaussian-grid 64 -8 8 0 3").code == 2);
  CHECK(run("state").code == 1);
}

TEST_CASE("measure") {
  const std::string ghz2 = make_state("ghz 2", "ghz2.json");
  const auto exact = nlohmann::json::parse(run("measure --state " + ghz2 + " --n 0 --m 3").out);
  CHECK(std::abs(exact["re"].get<double>() - 0.5) <= 1e-12);
  CHECK(std::abs(exact["im"].get<double>()) <= 1e-12);
  CHECK(exact["expectations"].size() == 6);

  const std::string mixed = make_state("mixed 4", "mixed4.json");
  const auto zero = nlohmann::json::parse(run("measure --state " + mixed + " --n 1 --m 2").out);
  CHECK(std::abs(zero["re"].get<double>()) <= 1e-12);

  const Run noisy = run("measure --state " + ghz2 + " --n 0 --m 3 --shots 1000000 --seed 42");
  REQUIRE(noisy.code == 0);
  const auto j = nlohmann::json::parse(noisy.out);
  CHECK(std::abs(j["re"].get<double>() - 0.5) <= 5 * j["re_stderr"].get<double>());
  CHECK(run("measure --state " + ghz2 + " --n 0 --m 3 --shots 1000000 --seed 42").out == noisy.out);

  CHECK(run("measure --state " + ghz2 + " --n 0 --m 3 --shots 100").code == 1);
  CHECK(run("measure --state " + ghz2 + " --n 0 --m 7").code == 3);
  CHECK(run("measure --state " + path("missing.json") + " --n 0 --m 1").code == 1);
  std::ofstream(path("bad.json")) << R"({"dim": 2, "entries": [[1,0],[0,0],[0,0],[1,0]]})";
  CHECK(run("measure --state " + path("bad.json") + " --n 0 --m 1").code == 2);
}

TEST_CASE("circuit") {
  const Run dump = run("circuit -N 2 --n 0 --m 3 --theta pi/2 --phi pi");
  REQUIRE(dump.code == 0);
  CHECK(dump.out ==
        "QUBITS 2\nX q1 q2\nCPHASE(1.5707963267948966) all\nX q1 q2\nCPHASE(3.141592653589793) all\n"
        "H all\nPOSTSELECT 00\n");

  const std::string mixed = make_state("mixed 4", "mixed4c.json");
  const Run verify = run("circuit -N 2 --n 0 --m 3 --theta pi/2 --phi pi --state " + mixed);
  CHECK(verify.code == 0);
  CHECK(verify.out.find("# probability 0.2499999") != std::string::npos);

  const std::string rnd = make_state("ginibre 8 3 5", "g8.json");
  const Run random = run("circuit -N 3 --n 2 --m 5 --theta -pi/2 --phi 0.7 --state " + rnd);
  CHECK(random.code == 0);
  const auto pos = random.out.find("# difference ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(random.out.substr(pos + 13)) <= 1e-10);

  const Run plan = run("circuit -N 2 --n 1 --m 2 --plan canonical");
  CHECK(plan.code == 0);
  std::size_t headers = 0;
  for (std::size_t p = plan.out.find("QUBITS"); p != std::string::npos; p = plan.out.find("QUBITS", p + 1)) ++headers;
  CHECK(headers == 6);

  CHECK(run("circuit -N 11 --n 0 --m 1").code == 3);
  CHECK(run("circuit -N 7 --n 0 --m 1 --state " + rnd).code == 3);
  CHECK(run("circuit -N 2 --n 0 --m 3 --theta half").code == 1);
}

TEST_CASE("full, sweep, fidelity and cv") {
  const std::string g3 = make_state("ginibre 3 3 2", "g3.json");
  CHECK(run("full --state " + g3).code == 0);

  const std::string ghz3 = make_state("ghz 3", "ghz3f.json");
  const auto f = nlohmann::json::parse(run("fidelity ghz --state " + ghz3).out);
  CHECK(std::abs(f["fidelity"].get<double>() - 1.0) <= 1e-10);
  const std::string plus = make_state("plus 2", "plus2.json");
  CHECK(run("fidelity l1 --state " + plus).code == 0);
  CHECK(run("fidelity bell --state " + ghz3).code == 3);
  CHECK(run("fidelity magic --state " + ghz3).code == 1);

  const std::string g4 = make_state("ginibre 4 4 1", "g4.json");
  const Run sweep = run("sweep --state " + g4 + " --n 0 --m 1 --seed 3 --repeats 16");
  REQUIRE(sweep.code == 0);
  std::istringstream lines(sweep.out);
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(header == "M,rmse_real,rmse_imag,mean_stderr");
  const auto col = [](const std::string& row, int k) {
    std::stringstream ss(row);
    std::string cell;
    for (int i = 0; i <= k; ++i) std::getline(ss, cell, ',');
    return std::stod(cell);
  };
  CHECK(col(second, 1) < col(first, 1));
  CHECK(col(second, 2) < col(first, 2));
  CHECK(run("sweep --state " + g4 + " --n 0 --m 1 --seed 3 --repeats 16").out == sweep.out);
  CHECK(run("sweep --state " + g4 + " --n 0 --m 1 --seed 3 --format json").code == 0);
  CHECK(run("sweep --state " + g4 + " --n 0 --m 1 --seed 3 --format xml").code == 1);

  const std::string grid = make_state("gaussian-grid 64 -8 8 0 1", "gridc.json");
  const auto cv = nlohmann::json::parse(run("cv --state " + grid + " --a 32 --b 34").out);
  CHECK(cv["x_b"] == 0.5);
  CHECK(run("cv --state " + g4 + " --a 0 --b 1").code == 1);
}

TEST_CASE("output file matches stdout") {
  const std::string ghz2 = make_state("ghz 2", "ghz2o.json");
  const Run direct = run("measure --state " + ghz2 + " --n 0 --m 3");
  REQUIRE(run("measure --state " + ghz2 + " --n 0 --m 3 --out " + path("m.json")).code == 0);
  CHECK(read_file(path("m.json")) == direct.out);
}
