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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamred/ext_int.hpp"
#include "hamred/numerics.hpp"
#include "hamred/scores.hpp"

namespace hamred::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kVerifyFailed = 3 };

enum class InstanceKind { pm, allpairs, matmul_sparse };

std::string kind_name(InstanceKind k);
InstanceKind parse_kind(const std::string& s);

/// In-memory form of the text instance format:
///
///   kind pm                      kind allpairs          kind matmul-sparse
///   score ham                    score l1               dims 4 8 4
///   bound 16                     bound 16               a 4 8 6
///   dims 8 3                     dims 2 3 4             0 1
///   text 1 2 * 4 5 6 7 8         left 1 2 3 4           ...
///   pattern 1 * 3                left * 2 0 1           b 8 4 6
///   weights 1 1 2   (optional)   right ...              ...
///
/// "*" is ★ and '#' starts a comment.
struct Instance {
  InstanceKind kind = InstanceKind::pm;
  ScoreFunction score;
  Int bound = 0;
  ExtVector text;
  ExtVector pattern;
  std::vector<Int> weights;
  ExtMatrix left;
  ExtMatrix right;
  SparseBinaryMatrix a;
  SparseBinaryMatrix b;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws ParseError with the offending line and column.
Instance parse_instance(const std::string& text);
std::string format_instance(const Instance& inst);

struct GenOptions {
  InstanceKind kind = InstanceKind::pm;
  std::string score = "ham";
  std::size_t n = 16;
  std::size_t m = 4;
  std::size_t d = 4;
  std::size_t rows = 4;
  std::size_t inner = 8;
  std::size_t cols = 4;
  std::size_t nnz = 0;  // per matrix; 0 derives it from density
  double density = 0.0;  // ★ share for pm and allpairs, fill for matmul-sparse
  Int alphabet = 16;     // values drawn from [0, alphabet)
  Int max_weight = 0;    // > 0 adds position weights in [0, max_weight]
  std::uint64_t seed = 1;
};

/// Throws std::invalid_argument on inconsistent parameters.
Instance generate(const GenOptions& opts);

struct SolveOptions {
  std::string algo = "fast";  // naive | fast | reduction
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

struct SolveResult {
  InstanceKind kind = InstanceKind::pm;
  std::size_t rows = 1;
  std::size_t cols = 0;
  WideVector values;
  /// Ordered key/value lines for the stats block.
  std::vector<std::pair<std::string, std::string>> stats;
};

SolveResult solve(const Instance& inst, const SolveOptions& opts);
/// The result section followed by the stats block.
std::string format_result(const SolveResult& r, bool with_stats = true);

struct ReduceOptions {
  std::string from;
  std::string to = "ham";
  Int bound = 16;
  Int weight_bound = 0;  // for weq sources; 0 uses bound
  bool emit = false;
};

int cmd_reduce(const ReduceOptions& opts, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string kind = "pm";  // pm | allpairs | sparse-bridge
  std::string score = "ham";
  unsigned trials = 10;
  std::size_t n = 64;
  std::size_t m = 16;
  std::size_t d = 8;
  double density = 0.0;
  Int alphabet = 8;
  std::string algo = "fast";
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::string target = "ham-pm";  // ham-pm | l2p-pm | lessthan-pm | apham | generic-ap | sparse-matmul
  std::vector<std::size_t> sizes;  // n per row; empty prints only the header
  std::size_t m_or_d = 64;
  double density = 0.0;
  Int alphabet = 1024;
  std::string score = "dom";
  std::vector<std::string> algos;  // empty picks the target's fast algorithm
  unsigned reps = 1;
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

inline constexpr const char* kBenchHeader = "algo,n,m_or_d,density,wall_ns,backend_calls";

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace hamred::cli
