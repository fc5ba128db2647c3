// Copyright 2026 The hcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hcore/applications.hpp"
#include "hcore/cli.hpp"
#include "support/fixtures.hpp"

using namespace hcore;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hcore");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("hcore_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

std::string edge_text(const Graph& g) {
  std::ostringstream os;
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (VertexId v : g.neighbors(u))
      if (u < v) os << g.label(u) << ' ' << g.label(v) << '\n';
  return os.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

const std::string kTrianglePendant = "0 1\n1 2\n2 0\n2 3\n";
const std::string kPath = "0 1\n1 2\n2 3\n3 4\n";

}  // namespace

TEST_CASE("decompose writes one TSV line per vertex and a summary") {
  const auto path = write_temp("tp.txt", kTrianglePendant);
  for (const char* algorithm : {"bz", "lb", "lbub"}) {
    const Run r = run({"decompose", path, "--h", "2", "--algorithm", algorithm});
    CHECK(r.code == 0);
    CHECK(r.out == "0\t3\n1\t3\n2\t3\n3\t3\n");
    CHECK(r.err.find("max_core=3 distinct_cores=1") != std::string::npos);
    CHECK(r.err.find("distance_computations=") != std::string::npos);
  }
}

TEST_CASE("decompose uses external labels") {
  const auto path = write_temp("labels.txt", "alice bob\nbob carol\ncarol alice\ncarol dave\n");
  const Run r = run({"decompose", path, "--h", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "alice\t2\nbob\t2\ncarol\t2\ndave\t1\n");
}

TEST_CASE("verbose decompose adds bound columns") {
  const auto path = write_temp("tp_verbose.txt", kTrianglePendant);
  const Run r = run({"decompose", path, "--h", "2", "--verbose"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "# vertex\tcore\tlb1\tlb2\tlb3\tub\th_degree");
  CHECK(rows[4] == "3\t3\t1\t3\t3\t3\t3");
  CHECK(r.err.find("lb1: mean_relative_error=") != std::string::npos);
}

TEST_CASE("error exit codes") {
  const auto empty = write_temp("empty.txt", "# nothing here\n\n");
  CHECK(run({"decompose", empty}).code == kExitParse);
  const auto bad = write_temp("bad.txt", "0 1\n1 2 3\n");
  const Run parse = run({"decompose", bad});
  CHECK(parse.code == kExitParse);
  CHECK(parse.err.find(":2:") != std::string::npos);
  CHECK(run({"decompose", "/nonexistent/hcore.txt"}).code == kExitIo);
  const auto ok = write_temp("ok.txt", kTrianglePendant);
  CHECK(run({"decompose", ok, "--h", "0"}).code == kExitUsage);
  CHECK(run({"decompose", ok, "--algorithm", "fast"}).code == kExitUsage);
  CHECK(run({"decompose", ok, "--threads", "0"}).code == kExitUsage);
  CHECK(run({"decompose", ok, "--partition-size", "0"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate", ok}).code == kExitUsage);
  CHECK(run({"decompose", ok, "--output", "/nonexistent/dir/out.tsv"}).code == kExitIo);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("output is identical across thread counts and sinks") {
  const Graph g = testing::erdos_renyi(120, 0.06, 3);
  const auto path = write_temp("er.txt", edge_text(g));
  const Run base = run({"decompose", path, "--h", "3", "--threads", "1"});
  REQUIRE(base.code == 0);
  for (const char* threads : {"2", "4", "8"}) CHECK(run({"decompose", path, "--h", "3", "--threads", threads}).out == base.out);

  const auto out_path = (std::filesystem::temp_directory_path() / "hcore_cli_out.tsv").string();
  CHECK(run({"decompose", path, "--h", "3", "--output", out_path}).code == 0);
  std::ifstream in(out_path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == base.out);
}

TEST_CASE("core TSV regroups to the reported distinct-core count") {
  const Graph g = testing::erdos_renyi(80, 0.08, 4);
  const auto path = write_temp("er_round.txt", edge_text(g));
  const Run r = run({"decompose", path, "--h", "2"});
  REQUIRE(r.code == 0);
  std::set<std::string> values;
  for (const auto& row : lines(r.out)) values.insert(row.substr(row.find('\t') + 1));
  CHECK(r.err.find("distinct_cores=" + std::to_string(values.size()) + " ") != std::string::npos);
}

TEST_CASE("stats reports one record per h") {
  const auto path = write_temp("k5.txt", edge_text(testing::clique_graph(5)));
  const Run r = run({"stats", path, "--h-min", "1", "--h-max", "4"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json row = json::parse(rows[i]);
    CHECK(row["h"] == i + 1);
    CHECK(row["max_core"] == 4);
    CHECK(row["distinct_cores"] == 1);
  }
  CHECK(run({"stats", path, "--h-min", "3", "--h-max", "2"}).code == kExitUsage);
}

TEST_CASE("hclub, densest, color and community commands") {
  const auto tp = write_temp("tp_apps.txt", kTrianglePendant);
  const json club = json::parse(run({"hclub", tp, "--h", "2"}).out);
  CHECK(club["size"] == 4);
  CHECK(club["verified"] == true);

  const auto k5 = write_temp("k5_apps.txt", edge_text(testing::clique_graph(5)));
  const json dense = json::parse(run({"densest", k5, "--h", "1"}).out);
  CHECK(dense["density"].get<double>() == doctest::Approx(4.0));
  CHECK(dense["size"] == 5);

  const auto p5 = write_temp("p5_apps.txt", kPath);
  const json color = json::parse(run({"color", p5, "--h", "2"}).out);
  CHECK(color["num_colors"] == 3);
  CHECK(color["valid"] == true);
  CHECK(color["colors"].size() == 5);

  const json community = json::parse(run({"community", tp, "--h", "2", "--query", "3"}).out);
  CHECK(community["min_h_degree"] == 3);
  CHECK(community["members"] == json({"0", "1", "2", "3"}));
  CHECK(run({"community", tp, "--query", "nobody"}).code != 0);

  const auto apart = write_temp("apart.txt", "0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n");
  CHECK(run({"community", apart, "--query", "0", "--query", "3"}).code == kExitNoSolution);
}

TEST_CASE("landmarks command reports per-pair bounds") {
  const auto p5 = write_temp("p5_lm.txt", kPath);
  const Run given = run({"landmarks", p5, "--h", "2", "--landmark", "2", "--pair", "0", "4"});
  REQUIRE(given.code == 0);
  const auto rows = lines(given.out);
  REQUIRE(rows.size() == 2);
  const json pair = json::parse(rows[0]);
  CHECK(pair["lower"] == 0);
  CHECK(pair["upper"] == 4);
  CHECK(pair["estimate"].get<double>() == doctest::Approx(2.0));
  CHECK(pair["distance"] == 4);

  // Find a seed whose core landmark is the middle vertex, then drive the command with it.
  const Graph g = testing::path_graph(5);
  std::uint64_t seed = 0;
  while (choose_landmarks(g, 2, 1, seed) != std::vector<VertexId>{2}) ++seed;
  const Run seeded = run({"landmarks", p5, "--h", "2", "--ell", "1", "--seed", std::to_string(seed), "--pair", "0", "4"});
  REQUIRE(seeded.code == 0);
  const json first = json::parse(lines(seeded.out)[0]);
  CHECK(first["lower"] == 0);
  CHECK(first["upper"] == 4);
  CHECK(first["estimate"].get<double>() == doctest::Approx(2.0));

  const Run sampled = run({"landmarks", p5, "--ell", "2", "--pairs", "25", "--seed", "3", "--strategy", "random"});
  REQUIRE(sampled.code == 0);
  const auto sampled_rows = lines(sampled.out);
  CHECK(sampled_rows.size() == 26);
  const json summary = json::parse(sampled_rows.back());
  CHECK(summary["bound_violations"] == 0);
  CHECK(summary["pairs"] == 25);
  CHECK(run({"landmarks", p5, "--ell", "9"}).code == kExitUsage);
}
