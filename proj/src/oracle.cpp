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

#include "hamred/oracle.hpp"

namespace hamred {

Wide vprod_naive(const ScoreFunction& f, ExtSpan a, ExtSpan b) {
  if (a.size() != b.size()) throw DimensionError("vprod operands differ in length");
  Wide total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total = checked_add(total, eval_score(f, a[i], b[i]));
  return total;
}

WideVector conv_naive(const ScoreFunction& f, ExtSpan a, ExtSpan b) {
  if (a.empty() || b.empty()) throw DimensionError("convolution of an empty vector");
  WideVector c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = checked_add(c[i + j], eval_score(f, a[i], b[j]));
  return c;
}

WideVector mprod_naive(const ScoreFunction& f, const ExtMatrix& A, const ExtMatrix& B) {
  if (A.cols != B.rows) throw DimensionError("inner dimensions disagree");
  WideVector C(A.rows * B.cols, 0);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < B.cols; ++j) {
      Wide acc = 0;
      for (std::size_t k = 0; k < A.cols; ++k) acc = checked_add(acc, eval_score(f, A.at(i, k), B.at(k, j)));
      C[i * B.cols + j] = acc;
    }
  return C;
}

WideVector pm_naive_raw(const ScoreFunction& f, ExtSpan text, ExtSpan pattern) {
  if (pattern.size() > text.size()) throw DimensionError("pattern longer than text");
  if (pattern.empty()) throw DimensionError("empty pattern");
  const std::size_t outs = text.size() - pattern.size() + 1;
  WideVector out(outs, 0);
  for (std::size_t i = 0; i < outs; ++i) {
    Wide acc = 0;
    for (std::size_t j = 0; j < pattern.size(); ++j) acc = checked_add(acc, eval_score(f, pattern[j], text[i + j]));
    out[i] = acc;
  }
  return out;
}

}  // namespace hamred
