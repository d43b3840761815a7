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

#include "hamred/reductions.hpp"

namespace hamred {

namespace {

// Same halfplane A u + B v + C > 0 with gcd(A, B) = 1.
Line normalize(const Line& l) {
  const Wide g = wide_gcd(l.A, l.B);
  if (g <= 1) return l;
  const Wide C = -floor_div(-Wide{l.C}, g);  // ceil(C / g)
  return Line{static_cast<Int>(l.A / g), static_cast<Int>(l.B / g), static_cast<Int>(C)};
}

bool parallel(const Line& a, const Line& b) { return Wide{a.A} * b.B == Wide{a.B} * b.A; }

// Solves A g + B d = 1 for gcd(A, B) = 1.
void extended_gcd(Wide a, Wide b, Wide& x, Wide& y) {
  Wide old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Wide q = floor_div(old_r, r);
    Wide tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
}

bool positive(const Line& l, Wide u, Wide v) {
  return checked_add(checked_add(checked_mul<Wide>(l.A, u), checked_mul<Wide>(l.B, v)), Wide{l.C}) > 0;
}

Wide ceil_div(Wide a, Wide b) { return -floor_div(-a, b); }

}  // namespace

bool verify_grid(const std::vector<Line>& raw, const GridParams& g, Wide N) {
  if (g.index >= raw.size()) return false;
  std::vector<Line> lines;
  for (const Line& l : raw) lines.push_back(normalize(l));
  const Line chosen = lines[g.index];
  auto at = [&](const Line& l, Wide x, Wide y) { return positive(l, g.alpha * x + g.gamma, g.beta * y + g.delta); };
  // The diagonal must lie on the chosen line.
  if (Wide{chosen.A} * (g.alpha + g.gamma) + Wide{chosen.B} * (g.beta + g.delta) + chosen.C != 0 ||
      Wide{chosen.A} * g.gamma + Wide{chosen.B} * g.delta + chosen.C != 0)
    return false;
  for (const Line& l : lines) {
    if (l.A == 0 && l.B == 0) continue;
    if (parallel(l, chosen)) {
      // Linear in x - y on the grid; compare the extremes of each side.
      if (at(l, 1, 0) != at(l, N, 0)) return false;
      if (at(l, 0, 1) != at(l, 0, N)) return false;
      continue;
    }
    const bool c0 = at(l, 0, 0);
    if (at(l, N, 0) != c0 || at(l, 0, N) != c0 || at(l, N, N) != c0) return false;
  }
  return true;
}

GridParams lines_lemma_select(const std::vector<Line>& raw, Wide N, const std::vector<std::size_t>& skip) {
  std::vector<Line> lines;
  lines.reserve(raw.size());
  for (const Line& l : raw) lines.push_back(normalize(l));

  std::size_t chosen = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].A == 0 || lines[i].B == 0) continue;
    if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
    chosen = i;
    break;
  }
  if (chosen == lines.size()) throw ReductionError("every candidate line is axis-orthogonal");
  const Line li = lines[chosen];

  Wide Mc = 1;
  for (const Line& l : lines) Mc = std::max({Mc, wide_abs(l.A), wide_abs(l.B), wide_abs(l.C)});

  // k = 3M keeps every parallel line within one grid step of the diagonal;
  // raise it if a parallel pair needs more room.
  Wide k = 3 * Mc;
  const Wide ab = wide_abs(Wide{li.A} * li.B);
  for (const Line& l : lines) {
    if ((l.A == 0 && l.B == 0) || !parallel(l, li)) continue;
    const Wide s = (l.A != 0 ? l.A : l.B) / (li.A != 0 ? li.A : li.B);  // ±1 after normalisation
    const Wide gap = wide_abs(Wide{l.C} - s * li.C);
    k = std::max(k, gap / ab + 1);
  }

  GridParams g;
  g.index = chosen;
  g.alpha = k * li.B;
  g.beta = -k * li.A;

  Wide x0 = 0;
  Wide y0 = 0;
  extended_gcd(li.A, li.B, x0, y0);
  const Wide gamma0 = -x0 * li.C;
  const Wide delta0 = -y0 * li.C;

  // Along the line (gamma0 + B t, delta0 - A t) every corner value of a
  // non-parallel line moves with the same slope, so each line is cleared for
  // all t past a threshold in either direction.
  std::vector<Line> crossing;
  for (const Line& l : lines)
    if (!(l.A == 0 && l.B == 0) && !parallel(l, li)) crossing.push_back(l);

  auto feasible = [&](Wide t) {
    GridParams trial = g;
    trial.gamma = gamma0 + Wide{li.B} * t;
    trial.delta = delta0 - Wide{li.A} * t;
    for (const Line& l : crossing) {
      const bool c0 = positive(l, trial.gamma, trial.delta);
      if (positive(l, trial.alpha * N + trial.gamma, trial.delta) != c0 ||
          positive(l, trial.gamma, trial.beta * N + trial.delta) != c0 ||
          positive(l, trial.alpha * N + trial.gamma, trial.beta * N + trial.delta) != c0)
        return false;
    }
    return true;
  };

  Wide t_pos = 0;
  Wide t_neg = 0;
  const Wide cx[4] = {0, N, 0, N};
  const Wide cy[4] = {0, 0, N, N};
  for (const Line& l : crossing) {
    const Wide sigma = Wide{l.A} * li.B - Wide{l.B} * li.A;
    Wide base[4];
    for (int c = 0; c < 4; ++c)
      base[c] = Wide{l.A} * (g.alpha * cx[c] + gamma0) + Wide{l.B} * (g.beta * cy[c] + delta0) + l.C;
    const Wide bmax = *std::max_element(base, base + 4);
    const Wide bmin = *std::min_element(base, base + 4);
    // t -> +inf: sign of base + sigma t follows sigma.
    if (sigma > 0) {
      t_pos = std::max(t_pos, floor_div(-bmin, sigma) + 1);
      t_neg = std::min(t_neg, floor_div(-bmax, sigma));
    } else {
      t_pos = std::max(t_pos, ceil_div(bmax, -sigma));
      t_neg = std::min(t_neg, -(floor_div(-bmin, -sigma) + 1));
    }
  }
  Wide best = wide_abs(t_pos) <= wide_abs(t_neg) ? t_pos : t_neg;
  if (!feasible(best)) best = best == t_pos ? t_neg : t_pos;
  const Wide limit = std::min<Wide>(wide_abs(best), Wide{1} << 20);
  for (Wide step = 0; step < limit; ++step) {
    if (feasible(step)) {
      best = step;
      break;
    }
    if (step != 0 && feasible(-step)) {
      best = -step;
      break;
    }
  }
  g.gamma = gamma0 + Wide{li.B} * best;
  g.delta = delta0 - Wide{li.A} * best;
  if (!verify_grid(lines, g, N)) throw ReductionError("grid construction failed verification");
  return g;
}

}  // namespace hamred
