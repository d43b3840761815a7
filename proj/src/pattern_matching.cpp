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

#include "hamred/pattern_matching.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "hamred/oracle.hpp"

namespace hamred {

namespace {

void check_pm(ExtSpan text, ExtSpan pattern) {
  if (pattern.empty()) throw DimensionError("empty pattern");
  if (pattern.size() > text.size()) throw DimensionError("pattern longer than text");
}

// Adds conv(reverse(a), b)[m - 1 + i] to out[i] for every alignment i.
void add_correlation(std::vector<Int> a, std::span<const Int> b, Wide scale, WideVector& out) {
  const std::size_t m = a.size();
  std::reverse(a.begin(), a.end());
  const WideVector c = conv_mult(a, b);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(out[i], checked_mul(scale, c[m - 1 + i]));
}

// Equal non-★ pairs per alignment.
WideVector match_counts(ExtSpan text, ExtSpan pattern, std::size_t threshold, HamPmStats& stats) {
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  const std::size_t outs = n - m + 1;
  std::unordered_map<Int, std::vector<std::uint32_t>> occ;
  for (std::size_t j = 0; j < m; ++j)
    if (!pattern[j].is_star()) occ[pattern[j].value()].push_back(static_cast<std::uint32_t>(j));

  WideVector matches(outs, 0);
  std::vector<Int> a(m);
  std::vector<Int> b(n);
  for (const auto& [sym, pos] : occ) {
    if (pos.size() <= threshold) continue;
    ++stats.frequent_symbols;
    ++stats.convolutions;
    for (std::size_t j = 0; j < m; ++j) a[j] = !pattern[j].is_star() && pattern[j].value() == sym;
    for (std::size_t q = 0; q < n; ++q) b[q] = !text[q].is_star() && text[q].value() == sym;
    add_correlation(a, b, 1, matches);
  }

  std::vector<Wide> counts(outs, 0);
  for (std::size_t q = 0; q < n; ++q) {
    if (text[q].is_star()) continue;
    auto it = occ.find(text[q].value());
    if (it == occ.end() || it->second.size() > threshold) continue;
    for (std::uint32_t j : it->second) {
      ++stats.enumeration_steps;
      if (j <= q && q - j < outs) ++counts[q - j];
    }
  }
  for (std::size_t i = 0; i < outs; ++i) matches[i] += counts[i];
  return matches;
}

}  // namespace

WideVector pm_naive(const PmInstance& inst) { return pm_naive_raw(inst.score, inst.text, inst.pattern); }

std::size_t ham_pm_threshold(std::size_t m) {
  return static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(m) * std::log2(static_cast<double>(m) + 1))));
}

WideVector ham_pm_bucketed(ExtSpan text, ExtSpan pattern, std::size_t threshold, HamPmStats* stats) {
  check_pm(text, pattern);
  HamPmStats local;
  HamPmStats& st = stats ? *stats : local;
  if (threshold == 0) threshold = ham_pm_threshold(pattern.size());
  st.threshold = threshold;

  const bool stars = std::any_of(text.begin(), text.end(), [](ExtInt x) { return x.is_star(); }) ||
                     std::any_of(pattern.begin(), pattern.end(), [](ExtInt x) { return x.is_star(); });
  if (!stars) {
    WideVector out = match_counts(text, pattern, threshold, st);
    for (Wide& v : out) v = Wide(pattern.size()) - v;
    return out;
  }

  // Ham(x, y) = Ham(f(x), f(y)) - Ham(g(x), g(y)) with f: ★ -> 0, t -> t + 1
  // and g: ★ -> 0, t -> 1. Both instances are ★-free, so each is m minus its
  // match count and the m's cancel.
  auto lift = [](ExtSpan v, bool indicator) {
    ExtVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] = v[i].is_star() ? ExtInt(0) : indicator ? ExtInt(1) : ExtInt::from_wide(Wide{v[i].value()} + 1);
    return out;
  };
  const WideVector mf = match_counts(lift(text, false), lift(pattern, false), threshold, st);
  const WideVector mg = match_counts(lift(text, true), lift(pattern, true), threshold, st);
  WideVector out(mf.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mg[i] - mf[i];
  return out;
}

WideVector l2p_pm_fft(ExtSpan text, ExtSpan pattern, unsigned p) {
  check_pm(text, pattern);
  if (p == 0) throw ReductionError("l2p_pm_fft needs p >= 1");
  const unsigned e = 2 * p;
  WideVector out(text.size() - pattern.size() + 1, 0);
  std::vector<Int> a(pattern.size());
  std::vector<Int> b(text.size());
  // (x - y)^e = Σ_k C(e, k) x^k (-y)^(e-k); ★ maps to 0 in every power,
  // including the zeroth.
  for (unsigned k = 0; k <= e; ++k) {
    for (std::size_t j = 0; j < pattern.size(); ++j)
      a[j] = pattern[j].is_star() ? 0 : checked_pow<Int>(pattern[j].value(), k);
    for (std::size_t q = 0; q < text.size(); ++q) b[q] = text[q].is_star() ? 0 : checked_pow<Int>(text[q].value(), e - k);
    Wide c = binomial(e, k);
    if ((e - k) % 2 == 1) c = -c;
    add_correlation(a, b, c, out);
  }
  return out;
}

WideVector sparse_lessthan_pm(ExtSpan text, ExtSpan pattern, std::size_t buckets, SparsePmStats* stats) {
  check_pm(text, pattern);
  SparsePmStats local;
  SparsePmStats& st = stats ? *stats : local;
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  const std::size_t outs = n - m + 1;

  // Distinct ranks via (value, position) order.
  std::vector<std::pair<Int, std::uint32_t>> sorted;
  for (std::size_t j = 0; j < m; ++j)
    if (!pattern[j].is_star()) sorted.emplace_back(pattern[j].value(), static_cast<std::uint32_t>(j));
  std::sort(sorted.begin(), sorted.end());
  const std::size_t sp = sorted.size();
  const std::size_t stt = count_relevant(text);
  WideVector out(outs, 0);
  if (sp == 0 || stt == 0) return out;

  if (buckets == 0) {
    const double lg = std::max(1.0, std::log2(static_cast<double>(m)));
    const double k = std::ceil(std::sqrt(static_cast<double>(stt) * static_cast<double>(sp) / (static_cast<double>(n) * lg)));
    buckets = static_cast<std::size_t>(std::max(1.0, k));
  }
  buckets = std::min(buckets, sp);
  const std::size_t width = (sp + buckets - 1) / buckets;
  buckets = (sp + width - 1) / width;
  st.buckets = buckets;

  // Text element y sees the pattern prefix of rank < L(y); its bucket is
  // the one holding rank L(y), or the last one when L(y) = s_p.
  std::vector<std::size_t> home(n, 0);
  for (std::size_t q = 0; q < n; ++q) {
    if (text[q].is_star()) continue;
    const Int y = text[q].value();
    const std::size_t L = static_cast<std::size_t>(
        std::upper_bound(sorted.begin(), sorted.end(), std::make_pair(y, UINT32_MAX)) - sorted.begin());
    home[q] = std::min(L / width, buckets - 1);
  }

  // Buckets strictly before the text element's own bucket: all entries count.
  std::vector<Int> a(m);
  std::vector<Int> b(n);
  for (std::size_t k = 0; k < buckets; ++k) {
    std::fill(a.begin(), a.end(), 0);
    for (std::size_t r = k * width; r < std::min(sp, (k + 1) * width); ++r) a[sorted[r].second] = 1;
    bool any = false;
    for (std::size_t q = 0; q < n; ++q) {
      b[q] = !text[q].is_star() && home[q] > k;
      any = any || b[q];
    }
    if (!any) continue;
    ++st.convolutions;
    add_correlation(a, b, 1, out);
  }

  // The text element's own bucket by direct comparison.
  for (std::size_t q = 0; q < n; ++q) {
    if (text[q].is_star()) continue;
    const Int y = text[q].value();
    for (std::size_t r = home[q] * width; r < std::min(sp, (home[q] + 1) * width); ++r) {
      ++st.intra_comparisons;
      const auto [x, j] = sorted[r];
      if (x <= y && j <= q && q - j < outs) ++out[q - j];
    }
  }
  return out;
}

WideVector weighted_ham_pm(ExtSpan text, ExtSpan pattern, std::span<const Int> weights) {
  check_pm(text, pattern);
  if (weights.size() != pattern.size()) throw DimensionError("one weight per pattern position is required");
  Int W = 0;
  for (Int w : weights) {
    if (w < 0) throw BoundError("position weights must be nonnegative");
    W = std::max(W, w);
  }
  WideVector out(text.size() - pattern.size() + 1, 0);
  if (W == 0) return out;
  ExtVector sliced(pattern.size());
  for (unsigned bit = 0; bit <= floor_log2(W); ++bit) {
    bool any = false;
    for (std::size_t j = 0; j < pattern.size(); ++j) {
      const bool keep = (weights[j] >> bit) & 1;
      sliced[j] = keep ? pattern[j] : kStar;
      any = any || (keep && !pattern[j].is_star());
    }
    if (!any) continue;
    const WideVector part = ham_pm_bucketed(text, sliced);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(out[i], part[i] << bit);
  }
  return out;
}

WideVector generic_pm(const PmInstance& inst, const LinearReduction& plan, const SolverRegistry& backend,
                      const EngineOptions& opts, EngineStats* stats) {
  check_pm(inst.text, inst.pattern);
  if (!(plan.source == inst.score))
    throw ReductionError("plan source '" + plan.source.tag() + "' does not match score '" + inst.score.tag() + "'");
  return apply_reduction(plan, Product::pm, ExtMatrix::row(inst.pattern), ExtMatrix::row(inst.text), backend, opts,
                         stats);
}

std::pair<Int, Int> value_range(ExtSpan a, ExtSpan b) {
  bool any = false;
  Int lo = 0;
  Int hi = 0;
  for (ExtSpan v : {a, b})
    for (ExtInt x : v) {
      if (x.is_star()) continue;
      lo = any ? std::min(lo, x.value()) : x.value();
      hi = any ? std::max(hi, x.value()) : x.value();
      any = true;
    }
  return {lo, hi};
}

}  // namespace hamred
