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

#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hamred/all_pairs.hpp"
#include "hamred/cli.hpp"
#include "hamred/pattern_matching.hpp"
#include "hamred/reductions.hpp"
#include "hamred/sparse_bridge.hpp"

namespace hamred::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

WideVector flatten(const DenseMatrix& m) { return WideVector(m.data.begin(), m.data.end()); }

void add_stat(SolveResult& r, const std::string& key, const auto& value) {
  std::ostringstream os;
  os << value;
  r.stats.emplace_back(key, os.str());
}

void add_engine_stats(SolveResult& r, const LinearReduction& plan, const EngineStats& es) {
  add_stat(r, "plan", plan.name);
  add_stat(r, "terms", plan.terms.size());
  add_stat(r, "constant_terms", plan.constant_part.size());
  add_stat(r, "backend_calls", es.backend_calls);
  for (const auto& [target, n] : es.calls_by_target) add_stat(r, "calls." + target, n);
}

LinearReduction plan_for(const ScoreFunction& score, ExtSpan a, ExtSpan b) {
  const auto [lo, hi] = value_range(a, b);
  return lower_to_hamming(score, lo, hi);
}

WideVector weighted_naive(const Instance& inst) {
  const std::size_t outs = inst.text.size() - inst.pattern.size() + 1;
  WideVector out(outs, 0);
  for (std::size_t i = 0; i < outs; ++i)
    for (std::size_t j = 0; j < inst.pattern.size(); ++j) {
      const ExtInt x = inst.pattern[j];
      const ExtInt y = inst.text[i + j];
      if (!x.is_star() && !y.is_star() && x.value() != y.value()) out[i] += inst.weights[j];
    }
  return out;
}

SolveResult solve_pm(const Instance& inst, const SolveOptions& o) {
  SolveResult r;
  r.kind = InstanceKind::pm;
  const ScoreKind kind = inst.score.kind();
  if (!inst.weights.empty()) {
    if (kind != ScoreKind::ham) throw std::invalid_argument("position weights need the ham score");
    r.values = o.algo == "naive" ? weighted_naive(inst) : weighted_ham_pm(inst.text, inst.pattern, inst.weights);
  } else if (o.algo == "naive") {
    r.values = pm_naive({inst.text, inst.pattern, inst.score});
  } else if (o.algo == "fast" && kind == ScoreKind::ham) {
    HamPmStats st;
    r.values = ham_pm_bucketed(inst.text, inst.pattern, 0, &st);
    add_stat(r, "threshold", st.threshold);
    add_stat(r, "frequent_symbols", st.frequent_symbols);
    add_stat(r, "backend_calls", st.convolutions);
    add_stat(r, "enumeration_steps", st.enumeration_steps);
  } else if (o.algo == "fast" && kind == ScoreKind::dom) {
    SparsePmStats st;
    r.values = sparse_lessthan_pm(inst.text, inst.pattern, 0, &st);
    add_stat(r, "buckets", st.buckets);
    add_stat(r, "backend_calls", st.convolutions);
    add_stat(r, "intra_comparisons", st.intra_comparisons);
  } else if (o.algo == "fast" && kind == ScoreKind::l2p) {
    r.values = l2p_pm_fft(inst.text, inst.pattern, static_cast<unsigned>(inst.score.param()));
    add_stat(r, "backend_calls", 2 * inst.score.param() + 1);
  } else {
    const LinearReduction plan = plan_for(inst.score, inst.text, inst.pattern);
    EngineStats es;
    r.values = generic_pm({inst.text, inst.pattern, inst.score}, plan, fast_registry(o.threads), {o.threads, true}, &es);
    add_engine_stats(r, plan, es);
  }
  r.cols = r.values.size();
  return r;
}

SolveResult solve_ap(const Instance& inst, const SolveOptions& o) {
  SolveResult r;
  r.kind = InstanceKind::allpairs;
  r.rows = inst.left.rows;
  r.cols = inst.right.rows;
  if (o.algo == "naive") {
    r.values = flatten(ap_naive({inst.left, inst.right, inst.score}));
  } else if (o.algo == "fast" && inst.score.kind() == ScoreKind::ham) {
    ApHamStats st;
    r.values = flatten(apham_via_expansion(inst.left, inst.right, {}, &st));
    add_stat(r, "expansion_width", st.expansion_width);
    add_stat(r, "ell", st.ell);
    add_stat(r, "light_pairs", st.matches.light_pairs);
    add_stat(r, "backend_calls", 1);
  } else {
    const LinearReduction plan = plan_for(inst.score, inst.left.data, inst.right.data);
    EngineStats es;
    r.values = flatten(generic_ap({inst.left, inst.right, inst.score}, plan, fast_registry(o.threads),
                                  {o.threads, true}, &es));
    add_engine_stats(r, plan, es);
  }
  return r;
}

SolveResult solve_sparse(const Instance& inst, const SolveOptions& o) {
  SolveResult r;
  r.kind = InstanceKind::matmul_sparse;
  r.rows = inst.a.rows;
  r.cols = inst.b.cols;
  if (o.algo == "naive") {
    r.values = flatten(matmul_naive(inst.a.to_dense(), inst.b.to_dense()));
  } else if (o.algo == "fast") {
    SparseMatmulStats st;
    r.values = flatten(sparse_matmul(inst.a, inst.b, default_ell(inst.a, inst.b), &st));
    add_stat(r, "heavy_indices", st.heavy_indices);
    add_stat(r, "light_pairs", st.light_pairs);
  } else {
    const SparseToHam s = sparse_to_apham(inst.a, inst.b, o.seed);
    const DenseMatrix ham = apham_via_expansion(s.U, s.V);
    r.values = flatten(s.decode(ham));
    add_stat(r, "seed", s.split.seed);
    add_stat(r, "attempts", s.attempts);
    add_stat(r, "dim", s.split.dim);
    add_stat(r, "u_rows", s.U.rows);
    add_stat(r, "v_rows", s.V.rows);
    add_stat(r, "row_limit", s.row_limit);
  }
  return r;
}

}  // namespace

SolveResult solve(const Instance& inst, const SolveOptions& o) {
  if (o.algo != "naive" && o.algo != "fast" && o.algo != "reduction")
    throw std::invalid_argument("unknown algorithm '" + o.algo + "'");
  const auto start = Clock::now();
  SolveResult r;
  switch (inst.kind) {
    case InstanceKind::pm: r = solve_pm(inst, o); break;
    case InstanceKind::allpairs: r = solve_ap(inst, o); break;
    case InstanceKind::matmul_sparse: r = solve_sparse(inst, o); break;
  }
  r.stats.insert(r.stats.begin(), {"algo", o.algo});
  add_stat(r, "wall_ns", elapsed_ns(start));
  return r;
}

std::string format_result(const SolveResult& r, bool with_stats) {
  std::ostringstream os;
  os << "result " << kind_name(r.kind) << ' ' << r.rows << ' ' << r.cols << '\n';
  for (std::size_t i = 0; i < r.rows; ++i) {
    for (std::size_t j = 0; j < r.cols; ++j) os << (j ? " " : "") << hamred::to_string(r.values[i * r.cols + j]);
    os << '\n';
  }
  if (with_stats) {
    os << "stats\n";
    for (const auto& [k, v] : r.stats) os << k << ' ' << v << '\n';
  }
  return os.str();
}

// reduce

namespace {

std::optional<LinearReduction> catalog_lookup(const ScoreFunction& from, const ScoreFunction& to, const ReduceOptions& o) {
  const ScoreKind f = from.kind();
  const ScoreKind t = to.kind();
  const Int M = o.bound;
  if (f == ScoreKind::l1 && t == ScoreKind::dom) return reduce_l1_to_dom(M);
  if (f == ScoreKind::dom && t == ScoreKind::ham) return reduce_dom_to_ham(M);
  if (f == ScoreKind::ham && t == ScoreKind::ham) return eliminate_stars_ham();
  if (f == ScoreKind::thr && t == ScoreKind::dom) return reduce_thr_to_dom(from.param());
  if (f == ScoreKind::dom && t == ScoreKind::thr) return reduce_dom_to_thr(to.param(), M);
  if (f == ScoreKind::ham && t == ScoreKind::dom) return reduce_ham_to_dom();
  if (f == ScoreKind::dom && t == ScoreKind::l1) return reduce_dom_to_l1();
  if (f == ScoreKind::ham && t == ScoreKind::l1) return reduce_ham_to_l1();
  if (f == ScoreKind::min && t == ScoreKind::l1) return reduce_min_to_l1();
  if (f == ScoreKind::l1 && t == ScoreKind::min) return reduce_l1_to_min();
  if (f == ScoreKind::eq && t == ScoreKind::ham) return reduce_eq_to_ham();
  if (f == ScoreKind::weighted_eq && t == ScoreKind::eq) {
    const Int W = o.weight_bound > 0 ? o.weight_bound : narrow(from.weight().max_over(0, M - 1));
    return reduce_weighted_eq_to_ham(from.weight(), W, 0, M - 1);
  }
  if (t == ScoreKind::mult && f != ScoreKind::weighted_eq && from.expansion().is_axis_orthogonal())
    return reduce_axis_orthogonal_to_mult(from.expansion());
  if ((f == ScoreKind::ham || f == ScoreKind::dom) && t != ScoreKind::weighted_eq && !to.expansion().is_axis_orthogonal()) {
    HamToPiecewisePlan plan = reduce_ham_to_piecewise(to.expansion(), M);
    return f == ScoreKind::ham ? plan.ham_plan : plan.dom_plan;
  }
  if (t == ScoreKind::ham) return lower_to_hamming(from, 0, M - 1);
  return std::nullopt;
}

}  // namespace

int cmd_reduce(const ReduceOptions& o, std::ostream& out, std::ostream& err) {
  if (o.bound <= 0) {
    err << "error: --bound must be positive\n";
    return kUsage;
  }
  const ScoreFunction from = ScoreFunction::parse(o.from);
  const ScoreFunction to = ScoreFunction::parse(o.to);
  const std::optional<LinearReduction> r = catalog_lookup(from, to, o);
  if (!r) {
    err << "error: no reduction from '" << from.tag() << "' to '" << to.tag() << "'\n";
    return kUsage;
  }
  if (o.emit) {
    out << serialize(*r);
    return kOk;
  }
  out << "reduction " << r->name << '\n';
  out << "source " << r->source.tag() << '\n';
  out << "domain " << hamred::to_string(r->lo) << ' ' << hamred::to_string(r->hi) << '\n';
  out << "terms " << r->terms.size() << '\n';
  out << "constant " << r->constant_part.size() << '\n';
  std::map<std::string, std::size_t> by_target;
  for (const auto* part : {&r->terms, &r->constant_part})
    for (const auto& t : *part) ++by_target[t.target.tag()];
  for (const auto& [tag, n] : by_target) out << "target " << tag << ' ' << n << '\n';
  out << "star " << (r->preserves_star ? "preserves" : "breaks") << '\n';
  return kOk;
}

// verify

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  unsigned passed = 0;
  if (o.kind == "sparse-bridge") {
    const double fill = o.density > 0 ? o.density : 0.1;
    unsigned resamples = 0;
    for (unsigned t = 0; t < o.trials; ++t) {
      const std::uint64_t seed = o.seed + t;
      GenOptions g;
      g.kind = InstanceKind::matmul_sparse;
      g.rows = g.cols = o.n;
      g.inner = o.m;
      g.density = fill;
      g.seed = seed;
      const Instance inst = generate(g);
      const SparseToHam s = sparse_to_apham(inst.a, inst.b, seed);
      const DenseMatrix got = s.decode(apham_via_expansion(s.U, s.V));
      const bool ok = got == sparse_matmul(inst.a, inst.b, default_ell(inst.a, inst.b));
      resamples += s.attempts - 1;
      passed += ok;
      out << "trial " << t << " seed " << seed << " sum_c " << s.U.rows << " limit " << s.row_limit << " resamples "
          << (s.attempts - 1) << ' ' << (ok ? "pass" : "FAIL") << '\n';
    }
    out << "resamples " << resamples << '\n';
  } else if (o.kind == "pm" || o.kind == "allpairs") {
    for (unsigned t = 0; t < o.trials; ++t) {
      const std::uint64_t seed = o.seed + t;
      GenOptions g;
      g.kind = o.kind == "pm" ? InstanceKind::pm : InstanceKind::allpairs;
      g.score = o.score;
      g.n = o.n;
      g.m = o.m;
      g.d = o.d;
      g.density = o.density;
      g.alphabet = o.alphabet;
      g.seed = seed;
      const Instance inst = generate(g);
      const SolveResult fast = solve(inst, {o.algo, o.threads, seed});
      const SolveResult naive = solve(inst, {"naive", 1, seed});
      const bool ok = fast.values == naive.values;
      passed += ok;
      out << "trial " << t << " seed " << seed << ' ' << (ok ? "pass" : "FAIL") << '\n';
    }
  } else {
    err << "error: unknown verify kind '" << o.kind << "'\n";
    return kUsage;
  }
  out << passed << '/' << o.trials << " pass\n";
  return passed == o.trials ? kOk : kVerifyFailed;
}

// bench

namespace {

struct BenchPoint {
  std::int64_t wall_ns = 0;
  std::size_t backend_calls = 0;
};

template <typename F>
BenchPoint best_of(unsigned reps, F&& run) {
  BenchPoint best;
  for (unsigned r = 0; r < std::max(1u, reps); ++r) {
    const auto start = Clock::now();
    const std::size_t calls = run();
    const std::int64_t ns = elapsed_ns(start);
    if (r == 0 || ns < best.wall_ns) best = {ns, calls};
  }
  return best;
}

std::vector<std::string> default_algos(const std::string& target) {
  if (target == "ham-pm") return {"bucketed"};
  if (target == "l2p-pm") return {"fft"};
  if (target == "lessthan-pm") return {"sparse"};
  if (target == "apham") return {"expansion"};
  if (target == "generic-ap" || target == "generic-pm") return {"reduction"};
  if (target == "sparse-matmul") return {"heavy-light"};
  throw std::invalid_argument("unknown bench target '" + target + "'");
}

}  // namespace

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> algos;
  try {
    algos = o.algos.empty() ? default_algos(o.target) : o.algos;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  out << kBenchHeader << '\n';
  for (std::size_t n : o.sizes) {
    GenOptions g;
    g.n = n;
    g.m = g.d = o.m_or_d;
    g.density = o.density;
    g.alphabet = o.alphabet;
    g.seed = o.seed;
    const bool pm = o.target.ends_with("-pm");
    const bool sparse = o.target == "sparse-matmul";
    g.kind = pm ? InstanceKind::pm : sparse ? InstanceKind::matmul_sparse : InstanceKind::allpairs;
    if (o.target == "ham-pm" || o.target == "apham") g.score = "ham";
    else if (o.target == "l2p-pm") g.score = "l2p:1";
    else if (o.target == "lessthan-pm") g.score = "dom";
    else g.score = o.score;
    if (sparse) {
      g.rows = g.cols = n;
      g.inner = o.m_or_d;
      g.density = o.density > 0 ? o.density : 0.1;
    }
    const Instance inst = generate(g);

    for (const std::string& algo : algos) {
      BenchPoint p;
      if (algo == "naive") {
        p = best_of(o.reps, [&] {
          (void)solve(inst, {"naive", 1, o.seed});
          return std::size_t{0};
        });
      } else if (algo == "bucketed") {
        p = best_of(o.reps, [&] {
          HamPmStats st;
          (void)ham_pm_bucketed(inst.text, inst.pattern, 0, &st);
          return st.convolutions;
        });
      } else if (algo == "fft") {
        p = best_of(o.reps, [&] {
          (void)l2p_pm_fft(inst.text, inst.pattern, 1);
          return std::size_t{3};
        });
      } else if (algo == "sparse") {
        p = best_of(o.reps, [&] {
          SparsePmStats st;
          (void)sparse_lessthan_pm(inst.text, inst.pattern, 0, &st);
          return st.convolutions;
        });
      } else if (algo == "expansion") {
        p = best_of(o.reps, [&] {
          (void)apham_via_expansion(inst.left, inst.right);
          return std::size_t{1};
        });
      } else if (algo == "reduction") {
        p = best_of(o.reps, [&] {
          const SolveResult r = solve(inst, {"reduction", o.threads, o.seed});
          for (const auto& [k, v] : r.stats)
            if (k == "backend_calls") return static_cast<std::size_t>(std::stoull(v));
          return std::size_t{0};
        });
      } else if (algo == "heavy-light" || algo == "dense" || algo == "las-vegas") {
        p = best_of(o.reps, [&] {
          if (algo == "heavy-light") (void)sparse_matmul(inst.a, inst.b, default_ell(inst.a, inst.b));
          else if (algo == "dense") (void)matmul_dense(inst.a.to_dense(), inst.b.to_dense(), o.threads);
          else (void)solve(inst, {"reduction", o.threads, o.seed});
          return std::size_t{1};
        });
      } else {
        err << "error: unknown bench algorithm '" << algo << "'\n";
        return kUsage;
      }
      out << algo << ',' << n << ',' << o.m_or_d << ',' << o.density << ',' << p.wall_ns << ',' << p.backend_calls
          << '\n';
    }
  }
  return kOk;
}

}  // namespace hamred::cli
