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
#include <atomic>
#include <thread>

#include "hamred/oracle.hpp"
#include "hamred/reductions.hpp"

namespace hamred {

std::size_t output_size(Product op, const ExtMatrix& a, const ExtMatrix& b) {
  switch (op) {
    case Product::vprod: return 1;
    case Product::conv: return a.data.size() + b.data.size() - 1;
    case Product::mprod: return a.rows * b.cols;
    case Product::pm: return b.data.size() - a.data.size() + 1;
  }
  return 0;
}

WideVector naive_product(Product op, const ScoreFunction& f, const ExtMatrix& a, const ExtMatrix& b) {
  switch (op) {
    case Product::vprod: return {vprod_naive(f, a.data, b.data)};
    case Product::conv: return conv_naive(f, a.data, b.data);
    case Product::mprod: return mprod_naive(f, a, b);
    case Product::pm: return pm_naive_raw(f, b.data, a.data);
  }
  return {};
}

WideVector SolverRegistry::solve(Product p, const ScoreFunction& f, const ExtMatrix& a, const ExtMatrix& b) const {
  auto it = solvers_.find(f.kind());
  if (it == solvers_.end()) throw ReductionError("no backend solver for '" + f.tag() + "'");
  return it->second(p, f, a, b);
}

SolverRegistry naive_registry() {
  SolverRegistry r;
  for (ScoreKind k : {ScoreKind::ham, ScoreKind::dom, ScoreKind::thr, ScoreKind::l1, ScoreKind::l2p, ScoreKind::l2p1,
                      ScoreKind::min, ScoreKind::max, ScoreKind::eq, ScoreKind::mult, ScoreKind::weighted_eq,
                      ScoreKind::piecewise})
    r.add(k, naive_product);
  return r;
}

namespace {

void check_shapes(Product op, const ExtMatrix& a, const ExtMatrix& b) {
  switch (op) {
    case Product::vprod:
      if (a.data.size() != b.data.size()) throw DimensionError("vprod operands differ in length");
      break;
    case Product::conv:
      if (a.data.empty() || b.data.empty()) throw DimensionError("convolution of an empty vector");
      break;
    case Product::mprod:
      if (a.cols != b.rows) throw DimensionError("inner dimensions disagree");
      break;
    case Product::pm:
      if (a.data.empty()) throw DimensionError("empty pattern");
      if (a.data.size() > b.data.size()) throw DimensionError("pattern longer than text");
      break;
  }
}

struct Range {
  Wide lo = 0;
  Wide hi = -1;
  bool any = false;
  void add(ExtSpan v) {
    for (ExtInt x : v) {
      if (x.is_star()) continue;
      if (!any || x.value() < lo) lo = x.value();
      if (!any || x.value() > hi) hi = x.value();
      any = true;
    }
  }
};

ExtMatrix transform(const ExtMatrix& m, const FilterChain& f, Wide shift) {
  ExtMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) {
    ExtInt x = m.data[i];
    if (shift != 0 && !x.is_star()) x = ExtInt::from_wide(Wide{x.value()} + shift);
    out.data[i] = f(x);
  }
  return out;
}

}  // namespace

WideVector apply_reduction(const LinearReduction& r, Product op, const ExtMatrix& a, const ExtMatrix& b,
                           const SolverRegistry& backend, const EngineOptions& opts, EngineStats* stats) {
  check_shapes(op, a, b);

  Range range;
  range.add(a.data);
  range.add(b.data);
  Wide shift = 0;
  if (range.any && (range.lo < r.lo || range.hi > r.hi)) {
    if (!opts.auto_shift || !r.source.is_shift_invariant())
      throw BoundError("inputs fall outside the reduction domain [" + to_string(r.lo) + ", " + to_string(r.hi) + "]");
    shift = r.lo - range.lo;
    if (range.hi + shift > r.hi) throw BoundError("input spread exceeds the reduction domain");
  }

  std::vector<const ReductionTerm*> all;
  for (const auto& t : r.terms) all.push_back(&t);
  for (const auto& t : r.constant_part) all.push_back(&t);
  std::erase_if(all, [](const ReductionTerm* t) { return t->alpha.is_zero() || t->f.is_empty_map() || t->g.is_empty_map(); });
  for (const ReductionTerm* t : all)
    if (!backend.has(t->target.kind())) throw ReductionError("no backend solver for '" + t->target.tag() + "'");

  const std::size_t outs = output_size(op, a, b);
  std::vector<WideVector> results(all.size());
  auto run = [&](std::size_t i) {
    const ReductionTerm& t = *all[i];
    results[i] = backend.solve(op, t.target, transform(a, t.f, shift), transform(b, t.g, shift));
    if (results[i].size() != outs) throw DimensionError("backend returned a result of the wrong size");
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(all.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < all.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < all.size();) run(i);
        } catch (...) {
          errors[w] = std::current_exception();
          next = all.size();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // Sum over a common denominator so half-integer terms stay exact.
  Wide den = 1;
  for (const ReductionTerm* t : all) den = checked_mul(den / wide_gcd(den, t->alpha.den()), t->alpha.den());
  WideVector acc(outs, 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Wide scale = checked_mul(all[i]->alpha.num(), den / all[i]->alpha.den());
    for (std::size_t k = 0; k < outs; ++k) acc[k] = checked_add(acc[k], checked_mul(scale, results[i][k]));
  }
  if (den != 1)
    for (Wide& v : acc) {
      if (v % den != 0) throw ReductionError("reduction aggregate is not an integer");
      v /= den;
    }

  if (stats) {
    stats->backend_calls += all.size();
    for (const ReductionTerm* t : all) ++stats->calls_by_target[t->target.tag()];
    stats->applied_shift = shift;
  }
  return acc;
}

}  // namespace hamred
