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

#include <unordered_map>

#include "hamred/reductions.hpp"

namespace hamred {

std::size_t LinearReduction::count_target(ScoreKind kind) const {
  std::size_t n = 0;
  for (const auto& t : terms) n += t.target.kind() == kind;
  for (const auto& t : constant_part) n += t.target.kind() == kind;
  return n;
}

Wide evaluate(const LinearReduction& r, ExtInt x, ExtInt y) {
  Rational total;
  auto add = [&](const ReductionTerm& t) {
    Wide v = eval_score(t.target, t.f(x), t.g(y));
    if (v != 0) total += t.alpha * Rational(v);
  };
  for (const auto& t : r.constant_part) add(t);
  for (const auto& t : r.terms) add(t);
  return total.to_integer();
}

bool filters_preserve_star(const LinearReduction& r) {
  for (const auto* list : {&r.terms, &r.constant_part})
    for (const auto& t : *list)
      if (!t.f.preserves_star() || !t.g.preserves_star()) return false;
  return true;
}

LinearReduction identity_reduction(const ScoreFunction& s) {
  LinearReduction r;
  r.name = "identity";
  r.source = s;
  r.terms.push_back({Rational(1), s, {}, {}});
  return r;
}

namespace {

void merge(std::vector<ReductionTerm>& list) {
  std::vector<ReductionTerm> out;
  std::unordered_map<std::string, std::size_t> index;
  for (auto& t : list) {
    if (t.alpha.is_zero() || t.f.is_empty_map() || t.g.is_empty_map()) continue;
    std::string key = t.target.tag() + "|" + t.f.tag() + "|" + t.g.tag();
    auto [it, fresh] = index.emplace(std::move(key), out.size());
    if (fresh) {
      out.push_back(std::move(t));
    } else {
      out[it->second].alpha += t.alpha;
    }
  }
  list.clear();
  for (auto& t : out)
    if (!t.alpha.is_zero()) list.push_back(std::move(t));
}

}  // namespace

void simplify(LinearReduction& r) {
  merge(r.terms);
  merge(r.constant_part);
}

}  // namespace hamred
