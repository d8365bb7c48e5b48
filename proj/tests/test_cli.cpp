// Copyright 2026 The lcmlat Authors
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

// Runs the lcmlat binary end to end.

#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

using Json = nlohmann::json;

const std::string kData = LCMLAT_TEST_DATA;

struct Result {
  int status = -1;
  std::string out;
  std::string err;
};

Result run(const std::string& args) {
  const auto err_path = std::filesystem::temp_directory_path() / "lcmlat_cli_stderr.txt";
  const std::string cmd =
      std::string("'") + LCMLAT_CLI + "' " + args + " 2>'" + err_path.string() + "'";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(err_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  return r;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t k = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++k;
  return k;
}

std::vector<Json> lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("build emits DOT with seven nodes and nine covers") {
  const auto r = run("build --ideal " + kData + "/fig3.ideal --format dot");
  CHECK(r.status == 0);
  CHECK(count(r.out, "[label=") == 7);
  CHECK(count(r.out, " -> ") == 9);
  CHECK(r.err.empty());
}

TEST_CASE("build emits JSON by default") {
  const auto r = run("build --hypergraph " + kData + "/fig3.json");
  REQUIRE(r.status == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["elements"].size() == 7);
}

TEST_CASE("check a single property") {
  const auto r = run("check --hypergraph " + kData + "/tetra.json --property modular");
  REQUIRE(r.status == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["holds"] == true);
  CHECK(j["property"] == "modular");
}

TEST_CASE("check all in the fixed order") {
  const auto r = run("check --ideal " + kData + "/fig3.ideal --property all");
  REQUIRE(r.status == 0);
  const auto j = Json::parse(r.out);
  REQUIRE(j.size() == 5);
  CHECK(j[0]["property"] == "boolean");
  CHECK(j[1]["property"] == "modular");
  CHECK(j[2]["property"] == "distributive");
  CHECK(j[3]["property"] == "complemented");
  CHECK(j[4]["property"] == "relatively-complemented");
}

TEST_CASE("assert mode") {
  CHECK(run("check --ideal " + kData + "/fig3.ideal --property modular --assert").status == 1);
  CHECK(run("check --ideal " + kData + "/tetra.ideal --property modular --assert").status == 0);
  CHECK(run("iso --ideal " + kData + "/fig3.ideal --ideal " + kData +
            "/tetra.ideal --assert").status == 1);
}

TEST_CASE("conditions") {
  const auto r = run("conditions --hypergraph " + kData + "/fig5.json --condition degree1-path");
  REQUIRE(r.status == 0);
  CHECK(Json::parse(r.out)["evidence"]["path"] == Json::array({3, 1, 2, 4}));
  const auto all = run("conditions --hypergraph " + kData + "/fig3.json");
  REQUIRE(all.status == 0);
  const auto verdicts = Json::parse(all.out);
  REQUIRE(verdicts.size() == 6);
  CHECK(verdicts[4]["condition"] == "blocking-triplet");
  CHECK(verdicts[4]["holds"] == true);
  CHECK(verdicts[3]["status"] == "precondition-not-met");
  CHECK(run("conditions --hypergraph " + kData + "/fig3.json --condition degree1-path").status == 2);
}

TEST_CASE("audit polarization: 100 agreeing lines and a summary") {
  const auto r = run("audit --theorem polarization-iso --count 100 --seed 7");
  REQUIRE(r.status == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 101);
  for (std::size_t i = 0; i < 100; ++i) CHECK(ls[i]["agree"] == true);
  CHECK(ls[100]["summary"]["agree"] == 100);
  CHECK(run("audit --theorem polarization-iso --count 100 --seed 7").out == r.out);
}

TEST_CASE("audit ranges and corpus") {
  const auto dir = std::filesystem::temp_directory_path() / "lcmlat_cli_corpus";
  std::filesystem::remove_all(dir);
  const auto r = run("audit --theorem boolean --n 2..4 --k 2..2 --m 1..3 --corpus " +
                     dir.string());
  REQUIRE(r.status == 0);
  const auto ls = lines(r.out);
  CHECK(ls.back()["summary"]["mode"] == "exhaustive");
  CHECK(ls.back()["summary"]["disagree"] == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("polarize, product and iso") {
  const auto p = run("polarize --ideal " + kData + "/pol.ideal");
  REQUIRE(p.status == 0);
  CHECK(Json::parse(p.out)["ideal"]["ring"] == 5);
  const auto prod = run("product --ideal " + kData + "/small.ideal --ideal " + kData +
                        "/fig5.ideal");
  REQUIRE(prod.status == 0);
  CHECK(Json::parse(prod.out)["elements"].size() == 4 * 7);
  const auto iso = run("iso --ideal " + kData + "/fig3.ideal --ideal " + kData + "/fig5.ideal");
  REQUIRE(iso.status == 0);
  CHECK(Json::parse(iso.out)["isomorphic"] == true);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "lcmlat_cli_out.json";
  std::filesystem::remove(path);
  const auto r = run("build --ideal " + kData + "/fig5.ideal --out " + path.string());
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(Json::parse(in)["elements"].size() == 7);
  std::filesystem::remove(path);
}

TEST_CASE("errors exit 2 with one JSON line on stderr") {
  for (const std::string& args :
       {"build --ideal " + kData + "/bad.ideal", std::string("build --ideal /nonexistent.ideal"),
        std::string("build --bogus"), "check --ideal " + kData + "/fig3.ideal --property x",
        "build --ideal " + kData + "/fig3.ideal --max-lattice 3",
        "check --ideal " + kData + "/fig3.ideal --format dot",
        "build --ideal " + kData + "/fig3.ideal --hypergraph " + kData + "/fig3.json",
        std::string("audit --theorem boolean --n 5..2"), std::string("frobnicate")}) {
    CAPTURE(args);
    const auto r = run(args);
    CHECK(r.status == 2);
    CHECK(r.out.empty());
    REQUIRE(count(r.err, "\n") == 1);
    const auto j = Json::parse(r.err);
    CHECK(j["error"]["code"].is_string());
    CHECK(j["error"]["message"].is_string());
  }
  const auto cap = run("build --ideal " + kData + "/fig3.ideal --max-lattice 3");
  CHECK(Json::parse(cap.err)["error"]["code"] == "size-limit");
}
