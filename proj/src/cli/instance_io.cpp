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

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "hamred/cli.hpp"
#include "hamred/rng.hpp"
#include "parse_util.hpp"

namespace hamred::cli {

std::string kind_name(InstanceKind k) {
  switch (k) {
    case InstanceKind::pm: return "pm";
    case InstanceKind::allpairs: return "allpairs";
    case InstanceKind::matmul_sparse: return "matmul-sparse";
  }
  return "pm";
}

InstanceKind parse_kind(const std::string& s) {
  if (s == "pm") return InstanceKind::pm;
  if (s == "allpairs") return InstanceKind::allpairs;
  if (s == "matmul-sparse") return InstanceKind::matmul_sparse;
  throw ParseError("unknown instance kind '" + s + "'");
}

namespace {

struct Token {
  std::string text;
  std::size_t col = 0;
};

struct Line {
  std::size_t no = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& src) {
  std::vector<Line> lines;
  std::istringstream in(src);
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{no, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i == raw.size()) break;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(const Line& l, const Token& t, const std::string& what) { throw ParseError(what, l.no, t.col); }

Int to_int(const Line& l, const Token& t) {
  try {
    return detail::parse_int(t.text);
  } catch (const ParseError& e) {
    fail(l, t, e.what());
  }
}

std::size_t to_size(const Line& l, const Token& t) {
  const Int v = to_int(l, t);
  if (v < 0) fail(l, t, "expected a nonnegative count");
  return static_cast<std::size_t>(v);
}

ExtInt to_value(const Line& l, const Token& t, Int bound) {
  if (t.text == "*") return kStar;
  const Int v = to_int(l, t);
  if (v > ExtInt::kMaxMagnitude || v < -ExtInt::kMaxMagnitude) fail(l, t, "value exceeds 2^62");
  if (bound > 0 && (v > bound || v < -bound)) fail(l, t, "value exceeds the declared bound");
  return ExtInt(v);
}

ExtVector values(const Line& l, std::size_t expected, Int bound) {
  if (l.tokens.size() - 1 != expected)
    fail(l, l.tokens.front(),
         "expected " + std::to_string(expected) + " values, found " + std::to_string(l.tokens.size() - 1));
  ExtVector out;
  for (std::size_t i = 1; i < l.tokens.size(); ++i) out.push_back(to_value(l, l.tokens[i], bound));
  return out;
}

void arity(const Line& l, std::size_t n) {
  if (l.tokens.size() != n + 1)
    fail(l, l.tokens.front(), "'" + l.tokens.front().text + "' takes " + std::to_string(n) + " field(s)");
}

std::string join(ExtSpan v) {
  std::string s;
  for (ExtInt x : v) {
    s += ' ';
    s += x.to_string();
  }
  return s;
}

}  // namespace

Instance parse_instance(const std::string& src) {
  const std::vector<Line> lines = tokenize(src);
  if (lines.empty()) throw ParseError("empty instance", 1, 1);
  Instance inst;
  std::size_t at = 0;
  {
    const Line& l = lines[at++];
    if (l.tokens[0].text != "kind") fail(l, l.tokens[0], "instance must start with 'kind'");
    arity(l, 1);
    try {
      inst.kind = parse_kind(l.tokens[1].text);
    } catch (const ParseError& e) {
      fail(l, l.tokens[1], e.what());
    }
  }

  bool have_score = inst.kind == InstanceKind::matmul_sparse;
  std::optional<std::vector<std::size_t>> dims;
  const Line* text_line = nullptr;
  const Line* pattern_line = nullptr;
  const Line* weights_line = nullptr;
  std::vector<const Line*> left_lines;
  std::vector<const Line*> right_lines;

  auto read_sparse = [&](const Line& l, SparseBinaryMatrix& m) {
    arity(l, 3);
    m = SparseBinaryMatrix(to_size(l, l.tokens[1]), to_size(l, l.tokens[2]));
    const std::size_t nnz = to_size(l, l.tokens[3]);
    for (std::size_t k = 0; k < nnz; ++k) {
      if (at == lines.size()) throw ParseError("missing sparse coordinates", l.no + k + 1, 1);
      const Line& c = lines[at++];
      if (c.tokens.size() != 2) fail(c, c.tokens[0], "coordinate lines hold 'row col'");
      const std::size_t r = to_size(c, c.tokens[0]);
      const std::size_t q = to_size(c, c.tokens[1]);
      if (r >= m.rows || q >= m.cols) fail(c, c.tokens[0], "coordinate out of range");
      m.nonzeros.emplace_back(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(q));
    }
    const std::size_t before = m.nonzeros.size();
    m.canonicalize();
    if (m.nonzeros.size() != before) fail(l, l.tokens[0], "duplicate sparse coordinate");
  };

  bool have_a = false;
  bool have_b = false;
  while (at < lines.size()) {
    const Line& l = lines[at++];
    const std::string& key = l.tokens[0].text;
    if (key == "score" && inst.kind != InstanceKind::matmul_sparse) {
      arity(l, 1);
      try {
        inst.score = ScoreFunction::parse(l.tokens[1].text);
      } catch (const Error& e) {
        fail(l, l.tokens[1], e.what());
      }
      have_score = true;
    } else if (key == "bound") {
      arity(l, 1);
      inst.bound = to_int(l, l.tokens[1]);
      if (inst.bound < 0) fail(l, l.tokens[1], "bound must be nonnegative");
    } else if (key == "dims") {
      arity(l, inst.kind == InstanceKind::pm ? 2 : 3);
      std::vector<std::size_t> v;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) v.push_back(to_size(l, l.tokens[i]));
      dims = v;
    } else if (key == "text" && inst.kind == InstanceKind::pm) {
      text_line = &l;
    } else if (key == "pattern" && inst.kind == InstanceKind::pm) {
      pattern_line = &l;
    } else if (key == "weights" && inst.kind == InstanceKind::pm) {
      weights_line = &l;
    } else if (key == "left" && inst.kind == InstanceKind::allpairs) {
      left_lines.push_back(&l);
    } else if (key == "right" && inst.kind == InstanceKind::allpairs) {
      right_lines.push_back(&l);
    } else if (key == "a" && inst.kind == InstanceKind::matmul_sparse) {
      read_sparse(l, inst.a);
      have_a = true;
    } else if (key == "b" && inst.kind == InstanceKind::matmul_sparse) {
      read_sparse(l, inst.b);
      have_b = true;
    } else {
      fail(l, l.tokens[0], "unexpected key '" + key + "'");
    }
  }

  const std::size_t last = lines.back().no;
  if (!have_score) throw ParseError("missing 'score'", last + 1, 1);
  if (!dims) throw ParseError("missing 'dims'", last + 1, 1);
  const auto& dv = *dims;
  switch (inst.kind) {
    case InstanceKind::pm: {
      if (!text_line || !pattern_line) throw ParseError("pm instances need 'text' and 'pattern'", last + 1, 1);
      inst.text = values(*text_line, dv[0], inst.bound);
      inst.pattern = values(*pattern_line, dv[1], inst.bound);
      if (dv[1] == 0 || dv[1] > dv[0]) fail(*pattern_line, pattern_line->tokens[0], "pattern must be nonempty and no longer than the text");
      if (weights_line) {
        if (weights_line->tokens.size() - 1 != dv[1]) fail(*weights_line, weights_line->tokens[0], "one weight per pattern position");
        for (std::size_t i = 1; i < weights_line->tokens.size(); ++i) {
          const Int w = to_int(*weights_line, weights_line->tokens[i]);
          if (w < 0) fail(*weights_line, weights_line->tokens[i], "weights must be nonnegative");
          inst.weights.push_back(w);
        }
      }
      break;
    }
    case InstanceKind::allpairs: {
      auto build = [&](const std::vector<const Line*>& ls, std::size_t rows, const char* side) {
        if (ls.size() != rows)
          throw ParseError(std::string("expected ") + std::to_string(rows) + " '" + side + "' rows, found " +
                               std::to_string(ls.size()),
                           ls.empty() ? last + 1 : ls.back()->no, 1);
        ExtVector data;
        for (const Line* l : ls) {
          ExtVector row = values(*l, dv[2], inst.bound);
          data.insert(data.end(), row.begin(), row.end());
        }
        return ExtMatrix(rows, dv[2], std::move(data));
      };
      inst.left = build(left_lines, dv[0], "left");
      inst.right = build(right_lines, dv[1], "right");
      break;
    }
    case InstanceKind::matmul_sparse:
      if (!have_a || !have_b) throw ParseError("matmul-sparse instances need 'a' and 'b'", last + 1, 1);
      if (inst.a.rows != dv[0] || inst.a.cols != dv[1] || inst.b.rows != dv[1] || inst.b.cols != dv[2])
        throw ParseError("sparse matrix shapes do not match 'dims'", last + 1, 1);
      break;
  }
  return inst;
}

std::string format_instance(const Instance& inst) {
  std::ostringstream os;
  os << "kind " << kind_name(inst.kind) << '\n';
  if (inst.kind != InstanceKind::matmul_sparse) os << "score " << inst.score.tag() << '\n';
  if (inst.bound > 0) os << "bound " << inst.bound << '\n';
  switch (inst.kind) {
    case InstanceKind::pm:
      os << "dims " << inst.text.size() << ' ' << inst.pattern.size() << '\n';
      os << "text" << join(inst.text) << '\n';
      os << "pattern" << join(inst.pattern) << '\n';
      if (!inst.weights.empty()) {
        os << "weights";
        for (Int w : inst.weights) os << ' ' << w;
        os << '\n';
      }
      break;
    case InstanceKind::allpairs:
      os << "dims " << inst.left.rows << ' ' << inst.right.rows << ' ' << inst.left.cols << '\n';
      for (std::size_t i = 0; i < inst.left.rows; ++i) os << "left" << join(inst.left.row_span(i)) << '\n';
      for (std::size_t i = 0; i < inst.right.rows; ++i) os << "right" << join(inst.right.row_span(i)) << '\n';
      break;
    case InstanceKind::matmul_sparse: {
      os << "dims " << inst.a.rows << ' ' << inst.a.cols << ' ' << inst.b.cols << '\n';
      for (const auto* m : {&inst.a, &inst.b}) {
        SparseBinaryMatrix c = *m;
        c.canonicalize();
        os << (m == &inst.a ? "a " : "b ") << c.rows << ' ' << c.cols << ' ' << c.nnz() << '\n';
        for (const auto& [r, q] : c.nonzeros) os << r << ' ' << q << '\n';
      }
      break;
    }
  }
  return os.str();
}

namespace {

ExtVector random_values(SplitMix64& rng, std::size_t n, Int alphabet, double star_share) {
  ExtVector v(n);
  for (auto& x : v) x = rng.chance(star_share) ? kStar : ExtInt(rng.range(0, alphabet - 1));
  return v;
}

SparseBinaryMatrix random_sparse(SplitMix64& rng, std::size_t rows, std::size_t cols, std::size_t nnz) {
  const std::size_t cells = rows * cols;
  if (nnz > cells) throw std::invalid_argument("nnz exceeds the number of cells");
  SparseBinaryMatrix m(rows, cols);
  std::vector<std::size_t> picked;
  if (2 * nnz > cells) {
    std::vector<std::size_t> all(cells);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t i = 0; i < nnz; ++i) std::swap(all[i], all[i + rng.below(cells - i)]);
    picked.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(nnz));
  } else {
    std::unordered_set<std::size_t> seen;
    while (picked.size() < nnz) {
      const std::size_t c = rng.below(cells);
      if (seen.insert(c).second) picked.push_back(c);
    }
  }
  for (std::size_t c : picked)
    m.nonzeros.emplace_back(static_cast<std::uint32_t>(c / cols), static_cast<std::uint32_t>(c % cols));
  m.canonicalize();
  return m;
}

}  // namespace

Instance generate(const GenOptions& o) {
  if (o.density < 0 || o.density > 1) throw std::invalid_argument("density must lie in [0, 1]");
  if (o.alphabet < 1) throw std::invalid_argument("alphabet must be positive");
  SplitMix64 rng(o.seed);
  Instance inst;
  inst.kind = o.kind;
  switch (o.kind) {
    case InstanceKind::pm:
      if (o.m == 0 || o.m > o.n) throw std::invalid_argument("need 1 <= m <= n");
      inst.score = ScoreFunction::parse(o.score);
      inst.bound = o.alphabet;
      inst.text = random_values(rng, o.n, o.alphabet, o.density);
      inst.pattern = random_values(rng, o.m, o.alphabet, o.density);
      if (o.max_weight > 0)
        for (std::size_t j = 0; j < o.m; ++j) inst.weights.push_back(rng.range(0, o.max_weight));
      break;
    case InstanceKind::allpairs:
      if (o.n == 0) throw std::invalid_argument("need n >= 1");
      inst.score = ScoreFunction::parse(o.score);
      inst.bound = o.alphabet;
      inst.left = ExtMatrix(o.n, o.d, random_values(rng, o.n * o.d, o.alphabet, o.density));
      inst.right = ExtMatrix(o.n, o.d, random_values(rng, o.n * o.d, o.alphabet, o.density));
      break;
    case InstanceKind::matmul_sparse: {
      if (o.rows == 0 || o.inner == 0 || o.cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
      auto count = [&](std::size_t cells) {
        return o.nnz != 0 ? o.nnz : static_cast<std::size_t>(o.density * static_cast<double>(cells) + 0.5);
      };
      inst.a = random_sparse(rng, o.rows, o.inner, count(o.rows * o.inner));
      inst.b = random_sparse(rng, o.inner, o.cols, count(o.inner * o.cols));
      break;
    }
  }
  return inst;
}

}  // namespace hamred::cli
