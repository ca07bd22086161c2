/** Copyright 2026 The Pundit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "pundit/model.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using pundit::cli::run;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run pundit_cmd(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("pundit_cli_" + std::to_string(std::rand()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

const std::string W = testing::world_dir();

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

Run extract(const Scratch& s, const std::string& corpus, const std::string& out) {
  return pundit_cmd({"extract", "--corpus", corpus, "--ontology", W + "/ontology.tsv", "--lexicons",
                     W + "/lexicons", "--out", s / out});
}

Run train(const Scratch& s, const std::string& pairs, const std::string& out) {
  return pundit_cmd({"train", "--pairs", s / pairs, "--ontology", W + "/ontology.tsv", "--lexicons",
                     W + "/lexicons", "--out", s / out});
}

}  // namespace

TEST_CASE("cli: usage errors") {
  CHECK(pundit_cmd({}).code == 2);
  CHECK(pundit_cmd({"frobnicate"}).code == 2);
  CHECK(pundit_cmd({"train", "--pairs"}).code == 2);
  CHECK(pundit_cmd({"--help"}).code == 0);
}

TEST_CASE("cli: extract") {
  Scratch s;
  auto r = extract(s, W + "/louisiana.tsv", "pairs.jsonl");
  CHECK(r.code == 0);
  CHECK(line_count(testing::slurp(s / "pairs.jsonl")) == 4);
  CHECK(r.err.find("infix:as\t4\t4\t0") != std::string::npos);

  std::ofstream(s / "empty.tsv").close();
  auto e = extract(s, s / "empty.tsv", "empty.jsonl");
  CHECK(e.code == 0);
  CHECK(fs::exists(s / "empty.jsonl"));
  CHECK(testing::slurp(s / "empty.jsonl").empty());

  auto bad = pundit_cmd({"extract", "--corpus", W + "/louisiana.tsv", "--ontology", s / "missing.tsv",
                         "--lexicons", W + "/lexicons", "--out", s / "never.jsonl"});
  CHECK(bad.code == 2);
  CHECK(!fs::exists(s / "never.jsonl"));
  CHECK(!bad.err.empty());
}

TEST_CASE("cli: train, determinism, predict, inspect, eval") {
  Scratch s;
  REQUIRE(extract(s, W + "/louisiana.tsv", "pairs.jsonl").code == 0);

  auto t1 = train(s, "pairs.jsonl", "m1.json");
  REQUIRE(t1.code == 0);
  CHECK(t1.out.find("nodes\t7\n") != std::string::npos);
  CHECK(t1.out.find("constant_warnings\t0\n") != std::string::npos);
  REQUIRE(train(s, "pairs.jsonl", "m2.json").code == 0);
  CHECK(testing::slurp(s / "m1.json") == testing::slurp(s / "m2.json"));

  auto p1 = pundit_cmd({"predict", "--model", s / "m1.json", "Louisiana flood"});
  auto p2 = pundit_cmd({"predict", "--model", s / "m1.json", "Louisiana flood"});
  REQUIRE(p1.code == 0);
  CHECK(p1.out == p2.out);
  CHECK(p1.out.rfind("0.666667  0  [number] people will flee\n", 0) == 0);

  auto top1 = pundit_cmd({"predict", "--model", s / "m1.json", "--top", "1", "Louisiana flood"});
  CHECK(line_count(top1.out) == 1);
  CHECK(pundit_cmd({"predict", "--model", s / "m1.json", "--top", "0", "Louisiana flood"}).out.empty());

  auto js = pundit_cmd({"predict", "--model", s / "m1.json", "--json", "Louisiana flood"});
  REQUIRE(js.code == 0);
  std::istringstream lines(js.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    ++n;
    for (const char* key : {"\"rendered\"", "\"effect\"", "\"node_id\"", "\"similarity\"", "\"support\"",
                            "\"pmci\"", "\"pruned\""})
      CHECK(line.find(key) != std::string::npos);
  }
  CHECK(n == static_cast<int>(line_count(p1.out)));

  auto none = pundit_cmd({"predict", "--model", s / "m1.json", "the of"});
  CHECK(none.code == 1);
  CHECK(pundit_cmd({"predict", "--model", s / "nope.json", "Louisiana flood"}).code == 2);

  auto tree = pundit_cmd({"inspect", "--model", s / "m1.json"});
  CHECK(tree.code == 0);
  CHECK(tree.out.find("nodes\t7") != std::string::npos);
  auto node = pundit_cmd({"inspect", "--model", s / "m1.json", "--node", "4"});
  CHECK(node.code == 0);
  CHECK(node.out.find("clauses") != std::string::npos);
  CHECK(pundit_cmd({"inspect", "--model", s / "m1.json", "--node", "99"}).code == 2);

  // every training cause gets its own effect first
  auto ev = pundit_cmd({"eval", "--model", s / "m1.json", "--pairs", s / "pairs.jsonl"});
  CHECK(ev.code == 0);
  CHECK(ev.out.find("hit@1\t1.000000") != std::string::npos);
  CHECK(ev.out.find("mrr\t1.000000") != std::string::npos);
  auto mismatch = pundit_cmd({"eval", "--model", s / "m1.json", "--pairs", s / "pairs.jsonl", "--ontology",
                              testing::data_dir() + "/world/ontology.tsv"});
  CHECK(mismatch.code == 0);
}

TEST_CASE("cli: train edge cases") {
  Scratch s;
  std::ofstream(s / "none.jsonl").close();
  auto zero = train(s, "none.jsonl", "m.json");
  CHECK(zero.code == 2);
  CHECK(!fs::exists(s / "m.json"));
  CHECK(pundit_cmd({"eval", "--model", s / "m.json", "--pairs", s / "none.jsonl"}).code == 2);

  {
    std::ofstream out(s / "odd.jsonl");
    out << pundit::encode_pair(testing::pair_of(testing::ev("Hit-18.1", "Storm", "", "", "Atlantis"),
                                                testing::ev("Escape-51.1", "Gnomes")))
        << "\n";
  }
  auto odd = train(s, "odd.jsonl", "odd.json");
  CHECK(odd.code == 0);
  CHECK(odd.out.find("constant_warnings\t2") != std::string::npos);
  auto m = pundit::Model::load(s / "odd.json");
  CHECK(m.pairs[0].cause.location() == pundit::Value::constant("atlantis"));
  CHECK(m.tree.size() == 1);

  // a different ontology only warns
  {
    std::ofstream out(s / "other.tsv");
    out << "a\tIsA\tb\n";
  }
  auto warn = pundit_cmd({"eval", "--model", s / "odd.json", "--pairs", s / "odd.jsonl", "--ontology", s / "other.tsv"});
  CHECK(warn.code == 0);
  CHECK(!warn.err.empty());

  {
    std::ofstream cfg(s / "cfg.tsv");
    cfg << "# overrides\naggregator\tmin\n";
  }
  setenv("PUNDIT_CONFIG", (s / "cfg.tsv").c_str(), 1);
  auto envd = train(s, "odd.jsonl", "env.json");
  unsetenv("PUNDIT_CONFIG");
  REQUIRE(envd.code == 0);
  CHECK(pundit::Model::load(s / "env.json").config.aggregator == pundit::Aggregator::Minimum);
  auto flag = pundit_cmd({"train", "--pairs", s / "odd.jsonl", "--ontology", W + "/ontology.tsv", "--agg",
                          "max", "--out", s / "flag.json"});
  REQUIRE(flag.code == 0);
  CHECK(pundit::Model::load(s / "flag.json").config.aggregator == pundit::Aggregator::Maximum);
  CHECK(pundit_cmd({"train", "--pairs", s / "odd.jsonl", "--ontology", W + "/ontology.tsv", "--agg", "median",
                    "--out", s / "bad.json"})
            .code == 2);
}
