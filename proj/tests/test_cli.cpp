// Copyright 2026 The hamred Authors
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

#include <sstream>

#include "doctest.h"
#include "hamred/cli.hpp"
#include "hamred/reductions.hpp"
#include "support.hpp"

using namespace hamred;
using namespace hamred::cli;

namespace {

std::size_t count_tokens(const std::string& line, const std::string& tok) {
  std::istringstream in(line);
  std::size_t c = 0;
  for (std::string t; in >> t;) c += t == tok;
  return c;
}

std::vector<std::string> lines_with_prefix(const std::string& text, const std::string& prefix) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(prefix, 0) == 0) out.push_back(line);
  return out;
}

std::string result_section(const std::string& formatted) { return formatted.substr(0, formatted.find("stats")); }

}  // namespace

TEST_CASE("instance format round trip") {
  const std::string pm =
      "# sample\n"
      "kind pm\nscore ham\nbound 16\ndims 8 3\n"
      "text 1 2 * 4 5 6 7 8\npattern 1 * 3\n";
  const Instance a = parse_instance(pm);
  CHECK(a.kind == InstanceKind::pm);
  CHECK(a.text.size() == 8);
  CHECK(a.text[2].is_star());
  CHECK(a.pattern.size() == 3);
  CHECK(parse_instance(format_instance(a)) == a);
  CHECK(format_instance(parse_instance(format_instance(a))) == format_instance(a));

  for (InstanceKind k : {InstanceKind::pm, InstanceKind::allpairs, InstanceKind::matmul_sparse})
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      GenOptions g;
      g.kind = k;
      g.seed = seed;
      g.density = 0.3;
      g.max_weight = k == InstanceKind::pm && seed % 2 ? 5 : 0;
      const Instance inst = generate(g);
      const std::string text = format_instance(inst);
      REQUIRE(parse_instance(text) == inst);
      REQUIRE(format_instance(parse_instance(text)) == text);
    }
  CHECK(parse_kind(kind_name(InstanceKind::matmul_sparse)) == InstanceKind::matmul_sparse);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_instance("kind pm\nscore ham\nbound 16\ndims 3 1\ntext 1 x 3\npattern 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(parse_instance("kind pm\nscore ham\nbound 16\ndims 3 1\ntext 1 2\npattern 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("kind triangle\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("kind pm\nscore nope\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("kind pm\nscore ham\nbound 4\ndims 2 1\ntext 1 9\npattern 1\n"), ParseError);
}

TEST_CASE("generation") {
  GenOptions pm;
  pm.n = 8;
  pm.m = 3;
  const Instance a = generate(pm);
  CHECK(a.text.size() == 8);
  CHECK(a.pattern.size() == 3);
  CHECK(generate(pm) == a);

  GenOptions ap;
  ap.kind = InstanceKind::allpairs;
  ap.n = 40;
  ap.d = 25;
  ap.density = 0.5;
  ap.seed = 7;
  const std::string text = format_instance(generate(ap));
  std::size_t stars = 0;
  std::size_t total = 0;
  for (const std::string& l : lines_with_prefix(text, "left ")) {
    stars += count_tokens(l, "*");
    std::istringstream in(l);
    std::string t;
    for (in >> t; in >> t;) ++total;
  }
  CHECK(total == 40 * 25);
  CHECK(static_cast<double>(stars) / total == doctest::Approx(0.5).epsilon(0.1));

  GenOptions sp;
  sp.kind = InstanceKind::matmul_sparse;
  sp.nnz = 6;
  const Instance s = generate(sp);
  CHECK(s.a.rows == 4);
  CHECK(s.a.cols == 8);
  CHECK(s.b.cols == 4);
  CHECK(s.a.nnz() == 6);
  CHECK(s.b.nnz() == 6);
  CHECK(lines_with_prefix(format_instance(s), "dims 4 8 4").size() == 1);

  GenOptions bad;
  bad.m = 20;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}

TEST_CASE("solve agrees across algorithms") {
  const std::vector<std::string> pm_scores = {"ham", "dom", "l1", "l3", "thr:3", "max", "l2"};
  for (const std::string& score : pm_scores)
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      CAPTURE(score);
      GenOptions g;
      g.score = score;
      g.n = 60;
      g.m = 9;
      g.density = 0.2;
      g.seed = seed;
      const Instance inst = generate(g);
      const std::string naive = result_section(format_result(solve(inst, {"naive", 1, 1})));
      CHECK(result_section(format_result(solve(inst, {"fast", 1, 1}))) == naive);
      CHECK(result_section(format_result(solve(inst, {"reduction", 1, 1}))) == naive);
    }
  for (const char* score : {"ham", "l1", "l3", "dom"}) {
    GenOptions g;
    g.kind = InstanceKind::allpairs;
    g.score = score;
    g.n = 10;
    g.d = 6;
    g.density = 0.2;
    const Instance inst = generate(g);
    const SolveResult naive = solve(inst, {"naive", 1, 1});
    CHECK(solve(inst, {"reduction", 1, 1}).values == naive.values);
    CHECK(solve(inst, {"fast", 1, 1}).values == naive.values);
  }
  {
    GenOptions g;
    g.kind = InstanceKind::matmul_sparse;
    g.density = 0.3;
    const Instance inst = generate(g);
    const SolveResult naive = solve(inst, {"naive", 1, 1});
    CHECK(solve(inst, {"fast", 1, 1}).values == naive.values);
    CHECK(solve(inst, {"reduction", 1, 3}).values == naive.values);
  }
  {
    GenOptions g;
    g.max_weight = 9;
    const Instance inst = generate(g);
    CHECK(solve(inst, {"fast", 1, 1}).values == solve(inst, {"naive", 1, 1}).values);
  }
  const std::string stats = format_result(solve(generate(GenOptions{}), {"fast", 1, 1}));
  CHECK(stats.find("stats") != std::string::npos);
  CHECK(stats.find("wall_ns") != std::string::npos);
}

TEST_CASE("reduce command") {
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_reduce({"l1", "dom", 8, 0, true}, out, err) == kOk);
  const LinearReduction r = deserialize(out.str());
  CHECK(r.count_target(ScoreKind::dom) == 16);
  for (Int x = 0; x < 8; ++x)
    for (Int y = 0; y < 8; ++y) REQUIRE(evaluate(r, x, y) == (x > y ? x - y : y - x));
  std::ostringstream o2;
  CHECK(cmd_reduce({"ham", "mult", 8, 0, true}, o2, err) == kUsage);
}

TEST_CASE("verify command") {
  std::ostringstream out;
  std::ostringstream err;
  VerifyOptions v;
  v.trials = 25;
  CHECK(cmd_verify(v, out, err) == kOk);
  CHECK(out.str().find("25/25 pass") != std::string::npos);

  v.kind = "allpairs";
  v.score = "l3";
  v.trials = 10;
  std::ostringstream o2;
  CHECK(cmd_verify(v, o2, err) == kOk);
  CHECK(o2.str().find("10/10 pass") != std::string::npos);

  v.kind = "sparse-bridge";
  v.trials = 5;
  std::ostringstream o3;
  CHECK(cmd_verify(v, o3, err) == kOk);
  CHECK(o3.str().find("resamples") != std::string::npos);
  CHECK(o3.str().find("5/5 pass") != std::string::npos);
}

TEST_CASE("bench command") {
  std::ostringstream out;
  std::ostringstream err;
  BenchOptions b;
  CHECK(cmd_bench(b, out, err) == kOk);
  CHECK(out.str() == std::string(kBenchHeader) + "\n");

  b.sizes = {1 << 8, 1 << 9, 1 << 10};
  b.m_or_d = 16;
  std::ostringstream o2;
  CHECK(cmd_bench(b, o2, err) == kOk);
  CHECK(lines_with_prefix(o2.str(), "").size() == 4);

  b.target = "apham";
  b.sizes = {16};
  b.m_or_d = 8;
  b.algos = {"naive", "expansion"};
  std::ostringstream o3;
  CHECK(cmd_bench(b, o3, err) == kOk);
  CHECK(lines_with_prefix(o3.str(), "naive,").size() == 1);
  CHECK(lines_with_prefix(o3.str(), "expansion,").size() == 1);
}
