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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hamred/cli.hpp"

namespace {

using namespace hamred::cli;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_all(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reductions between (+, score) products and Hamming distance"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  unsigned threads = 1;
  hamred::Int bound = 16;
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();
  app.add_option("--threads", threads, "Backend worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  app.add_option("--bound", bound, "Value bound M")->capture_default_str();

  // gen
  GenOptions gen;
  std::string gen_kind = "pm";
  std::string gen_out;
  auto* g = app.add_subcommand("gen", "Generate a random instance");
  g->add_option("kind", gen_kind, "pm | allpairs | matmul-sparse")->required();
  g->add_option("--score", gen.score, "Score tag")->capture_default_str();
  g->add_option("--n", gen.n, "Text length or vectors per side")->capture_default_str();
  g->add_option("--m", gen.m, "Pattern length")->capture_default_str();
  g->add_option("--d", gen.d, "Vector dimension")->capture_default_str();
  g->add_option("--rows", gen.rows)->capture_default_str();
  g->add_option("--inner", gen.inner)->capture_default_str();
  g->add_option("--cols", gen.cols)->capture_default_str();
  g->add_option("--nnz", gen.nnz, "Nonzeros per sparse matrix")->capture_default_str();
  g->add_option("--density", gen.density, "Star share (pm, allpairs) or fill (matmul-sparse)")->capture_default_str();
  g->add_option("--alphabet", gen.alphabet, "Values are drawn from [0, alphabet)")->capture_default_str();
  g->add_option("--max-weight", gen.max_weight, "Add position weights in [0, w]")->capture_default_str();
  g->add_option("-o,--output", gen_out, "Output path (default stdout)");

  // solve
  std::string solve_in;
  std::string solve_out;
  std::string solve_algo = "fast";
  auto* s = app.add_subcommand("solve", "Solve an instance file");
  s->add_option("file", solve_in, "Instance path or - for stdin")->required();
  s->add_option("--algo", solve_algo, "naive | fast | reduction")
      ->capture_default_str()
      ->check(CLI::IsMember({"naive", "fast", "reduction"}));
  s->add_option("-o,--output", solve_out, "Output path (default stdout)");

  // reduce
  ReduceOptions red;
  auto* r = app.add_subcommand("reduce", "Build a linear reduction");
  r->add_option("--from", red.from, "Source score tag")->required();
  r->add_option("--to", red.to, "Target score tag")->capture_default_str();
  r->add_option("--weight-bound", red.weight_bound, "Weight bound W for weq sources");
  r->add_flag("--emit", red.emit, "Print the serialized plan");

  // verify
  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Cross-check fast paths against the naive oracle");
  v->add_option("kind", ver.kind, "pm | allpairs | sparse-bridge")->required();
  v->add_option("score", ver.score, "Score tag")->capture_default_str();
  v->add_option("--trials", ver.trials)->capture_default_str();
  v->add_option("--n", ver.n)->capture_default_str();
  v->add_option("--m", ver.m, "Pattern length, or inner dimension for sparse-bridge")->capture_default_str();
  v->add_option("--d", ver.d)->capture_default_str();
  v->add_option("--density", ver.density)->capture_default_str();
  v->add_option("--alphabet", ver.alphabet)->capture_default_str();
  v->add_option("--algo", ver.algo)->capture_default_str()->check(CLI::IsMember({"fast", "reduction"}));

  // bench
  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Time solvers and print CSV");
  b->add_option("target", bench.target, "ham-pm | l2p-pm | lessthan-pm | generic-pm | apham | generic-ap | sparse-matmul")
      ->required();
  b->add_option("--sizes", bench.sizes, "Values of n (comma separated)")->delimiter(',');
  b->add_option("--m-or-d", bench.m_or_d, "Pattern length, dimension, or inner size")->capture_default_str();
  b->add_option("--density", bench.density)->capture_default_str();
  b->add_option("--alphabet", bench.alphabet)->capture_default_str();
  b->add_option("--score", bench.score, "Score for generic targets")->capture_default_str();
  b->add_option("--algos", bench.algos, "Algorithms (comma separated)")->delimiter(',');
  b->add_option("--reps", bench.reps, "Repetitions; the fastest is reported")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*g) {
      gen.kind = parse_kind(gen_kind);
      gen.seed = seed;
      write_all(gen_out, format_instance(generate(gen)));
      return kOk;
    }
    if (*s) {
      const Instance inst = parse_instance(read_all(solve_in));
      write_all(solve_out, format_result(solve(inst, {solve_algo, threads, seed})));
      return kOk;
    }
    if (*r) {
      red.bound = bound;
      return cmd_reduce(red, std::cout, std::cerr);
    }
    if (*v) {
      ver.seed = seed;
      ver.threads = threads;
      return cmd_verify(ver, std::cout, std::cerr);
    }
    if (*b) {
      bench.seed = seed;
      bench.threads = threads;
      return cmd_bench(bench, std::cout, std::cerr);
    }
  } catch (const hamred::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
