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

#include "hamred/reductions.hpp"
#include "parse_util.hpp"

namespace hamred {

namespace {

void write_term(std::ostringstream& os, const ReductionTerm& t) {
  os << to_string(t.alpha.num()) << ' ' << to_string(t.alpha.den()) << ' ' << t.target.tag() << ' ' << t.f.tag()
     << ' ' << t.g.tag() << '\n';
}

class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  // Next non-blank, non-comment line split on whitespace.
  std::vector<std::string> next(const char* what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream ls(line);
      std::vector<std::string> fields;
      for (std::string f; ls >> f;) fields.push_back(f);
      if (!fields.empty()) return fields;
    }
    throw ParseError(std::string("unexpected end of input, expected ") + what, line_no_ + 1, 1);
  }

  std::vector<std::string> expect(const char* key, std::size_t arity) {
    auto fields = next(key);
    if (fields[0] != key || fields.size() != arity + 1)
      throw ParseError(std::string("expected '") + key + "' with " + std::to_string(arity) + " field(s)", line_no_, 1);
    return fields;
  }

  std::size_t line() const noexcept { return line_no_; }

  bool at_end() {
    std::streampos pos = in_.tellg();
    std::size_t saved = line_no_;
    std::string line;
    while (std::getline(in_, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        in_.clear();
        in_.seekg(pos);
        line_no_ = saved;
        return false;
      }
    }
    return true;
  }

 private:
  std::istringstream in_;
  std::size_t line_no_ = 0;
};

template <typename F>
auto at_line(const LineReader& r, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    if (e.line() != 0) throw;
    throw ParseError(e.what(), r.line(), 1);
  }
}

std::vector<ReductionTerm> read_terms(LineReader& r, const char* key) {
  auto head = r.expect(key, 1);
  const Int k = at_line(r, [&] { return detail::parse_int(head[1]); });
  if (k < 0) throw ParseError("negative term count", r.line(), 1);
  std::vector<ReductionTerm> out;
  for (Int i = 0; i < k; ++i) {
    auto f = r.next("a term");
    if (f.size() != 5) throw ParseError("term needs: num den target f g", r.line(), 1);
    out.push_back(at_line(r, [&] {
      const Wide den = detail::parse_wide(f[1]);
      if (den <= 0) throw ParseError("denominator must be positive");
      return ReductionTerm{Rational(detail::parse_wide(f[0]), den), ScoreFunction::parse(f[2]),
                           FilterChain::parse(f[3]), FilterChain::parse(f[4])};
    }));
  }
  return out;
}

}  // namespace

std::string serialize(const LinearReduction& r) {
  std::ostringstream os;
  os << "reduction " << (r.name.empty() ? "unnamed" : r.name) << '\n';
  os << "source " << r.source.tag() << '\n';
  os << "domain " << to_string(r.lo) << ' ' << to_string(r.hi) << '\n';
  os << "star " << (r.preserves_star ? "preserves" : "breaks") << '\n';
  os << "terms " << r.terms.size() << '\n';
  for (const auto& t : r.terms) write_term(os, t);
  os << "constant " << r.constant_part.size() << '\n';
  for (const auto& t : r.constant_part) write_term(os, t);
  return os.str();
}

LinearReduction deserialize(const std::string& text) {
  LineReader rd(text);
  LinearReduction r;
  r.name = rd.expect("reduction", 1)[1];
  auto src = rd.expect("source", 1);
  r.source = at_line(rd, [&] { return ScoreFunction::parse(src[1]); });
  auto dom = rd.expect("domain", 2);
  r.lo = at_line(rd, [&] { return detail::parse_wide(dom[1]); });
  r.hi = at_line(rd, [&] { return detail::parse_wide(dom[2]); });
  auto star = rd.expect("star", 1);
  if (star[1] != "preserves" && star[1] != "breaks")
    throw ParseError("star must be 'preserves' or 'breaks'", rd.line(), 1);
  r.preserves_star = star[1] == "preserves";
  r.terms = read_terms(rd, "terms");
  r.constant_part = read_terms(rd, "constant");
  if (!rd.at_end()) throw ParseError("trailing content after reduction", rd.line() + 1, 1);
  return r;
}

}  // namespace hamred
