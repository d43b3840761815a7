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

#include "hamred/scores.hpp"
#include "parse_util.hpp"

namespace hamred {

// ---------------------------------------------------------------------------
// WeightFn

WeightFn WeightFn::table(std::map<Int, Int> entries, Int fallback) {
  if (fallback < 0) throw BoundError("negative weight");
  for (const auto& [k, v] : entries)
    if (v < 0) throw BoundError("negative weight");
  WeightFn w;
  w.kind_ = Kind::table;
  w.entries_ = std::move(entries);
  w.fallback_ = fallback;
  return w;
}

WeightFn WeightFn::positive_part(Poly1 p) {
  WeightFn w;
  w.kind_ = Kind::poly_pos;
  w.poly_ = std::move(p);
  return w;
}

WeightFn WeightFn::negative_part(Poly1 p) {
  WeightFn w;
  w.kind_ = Kind::poly_neg;
  w.poly_ = std::move(p);
  return w;
}

Wide WeightFn::operator()(Int x) const {
  switch (kind_) {
    case Kind::table: {
      auto it = entries_.find(x);
      return it == entries_.end() ? fallback_ : it->second;
    }
    case Kind::poly_pos:
      return std::max<Wide>(eval_poly1(poly_, x), 0);
    case Kind::poly_neg:
      return std::max<Wide>(-eval_poly1(poly_, x), 0);
  }
  return 0;
}

Wide WeightFn::max_over(Int lo, Int hi) const {
  if (lo > hi) return 0;
  if (kind_ == Kind::table) {
    Wide best = 0;
    std::size_t covered = 0;
    for (auto it = entries_.lower_bound(lo); it != entries_.end() && it->first <= hi; ++it) {
      best = std::max<Wide>(best, it->second);
      ++covered;
    }
    if (static_cast<Wide>(covered) < static_cast<Wide>(hi) - lo + 1) best = std::max<Wide>(best, fallback_);
    return best;
  }
  const Wide t = std::max(wide_abs(lo), wide_abs(hi));
  Wide acc = 0;
  for (std::size_t i = 0; i < poly_.size(); ++i)
    acc = checked_add(acc, checked_mul(wide_abs(poly_[i]), checked_pow<Wide>(t, static_cast<unsigned>(i))));
  return acc;
}

std::string WeightFn::tag() const {
  std::string out;
  if (kind_ == Kind::table) {
    out = "tab:" + std::to_string(fallback_) + ":";
    bool first = true;
    for (const auto& [k, v] : entries_) {
      if (!first) out += ";";
      first = false;
      out += std::to_string(k) + "=" + std::to_string(v);
    }
    return out;
  }
  out = kind_ == Kind::poly_pos ? "pos:" : "neg:";
  for (std::size_t i = 0; i < poly_.size(); ++i) {
    if (i) out += ";";
    out += to_string(poly_[i]);
  }
  return out;
}

WeightFn WeightFn::parse(const std::string& tag) {
  auto head = detail::split_once(tag, ':');
  if (head.first == "tab") {
    auto rest = detail::split_once(head.second, ':');
    Int fallback = detail::parse_int(rest.first);
    std::map<Int, Int> entries;
    if (!rest.second.empty())
      for (const std::string& kv : detail::split(rest.second, ';')) {
        auto p = detail::split_once(kv, '=');
        entries[detail::parse_int(p.first)] = detail::parse_int(p.second);
      }
    return table(std::move(entries), fallback);
  }
  if (head.first == "pos" || head.first == "neg") {
    Poly1 p;
    for (const std::string& c : detail::split(head.second, ';')) p.push_back(detail::parse_wide(c));
    if (p.empty()) throw ParseError("empty weight polynomial");
    return head.first == "pos" ? positive_part(std::move(p)) : negative_part(std::move(p));
  }
  if (tag == "id") return identity();
  throw ParseError("unknown weight tag '" + tag + "'");
}

// ---------------------------------------------------------------------------
// FilterFn

FilterFn FilterFn::weight_bit(WeightFn w, unsigned bit) {
  FilterFn f(FilterKind::weight_bit);
  f.a_ = bit;
  f.weight_ = std::make_shared<const WeightFn>(std::move(w));
  return f;
}

FilterFn FilterFn::shift_right(unsigned k) {
  if (k == 0) return identity();
  FilterFn f(FilterKind::shift_right);
  f.a_ = k;
  return f;
}

FilterFn FilterFn::shift(Int delta) {
  if (delta == 0) return identity();
  FilterFn f(FilterKind::shift);
  f.a_ = delta;
  return f;
}

FilterFn FilterFn::power(unsigned k) {
  if (k == 1) return identity();
  FilterFn f(FilterKind::power);
  f.a_ = k;
  return f;
}

FilterFn FilterFn::affine(Int a, Int b) {
  if (a == 1) return shift(b);
  if (a == -1 && b == 0) return negate();
  FilterFn f(FilterKind::affine);
  f.a_ = a;
  f.b_ = b;
  return f;
}

FilterFn FilterFn::constant(Int c) {
  FilterFn f(FilterKind::constant);
  f.a_ = c;
  return f;
}

FilterFn FilterFn::half_line(Int a, Int b) {
  FilterFn f(FilterKind::half_line);
  f.a_ = a;
  f.b_ = b;
  return f;
}

FilterFn FilterFn::table(std::map<Int, ExtInt> entries, ExtInt fallback) {
  FilterFn f(FilterKind::table);
  f.table_ = std::make_shared<const std::map<Int, ExtInt>>(std::move(entries));
  f.table_fallback_ = fallback;
  return f;
}

ExtInt FilterFn::operator()(ExtInt x) const {
  if (x.is_star()) {
    if (kind_ == FilterKind::star_zero_succ || kind_ == FilterKind::star_indicator) return ExtInt(0);
    return kStar;
  }
  const Int v = x.value();
  switch (kind_) {
    case FilterKind::identity:
      return x;
    case FilterKind::even:
      return v % 2 == 0 ? x : kStar;
    case FilterKind::odd:
      return v % 2 != 0 ? x : kStar;
    case FilterKind::weight_bit:
      return (((*weight_)(v) >> a_) & 1) ? x : kStar;
    case FilterKind::shift_right:
      return ExtInt(v >> a_);
    case FilterKind::shift:
      return ExtInt(checked_add(v, a_));
    case FilterKind::negate:
      return ExtInt(-v);
    case FilterKind::power:
      return ExtInt(checked_pow(v, static_cast<unsigned>(a_)));
    case FilterKind::affine:
      return ExtInt(checked_add(checked_mul(a_, v), b_));
    case FilterKind::constant:
      return ExtInt(a_);
    case FilterKind::half_line:
      return checked_add<Wide>(checked_mul<Wide>(a_, v), b_) > 0 ? x : kStar;
    case FilterKind::star_zero_succ:
      return ExtInt(checked_add<Int>(v, 1));
    case FilterKind::star_indicator:
      return ExtInt(1);
    case FilterKind::table: {
      auto it = table_->find(v);
      return it == table_->end() ? table_fallback_ : it->second;
    }
  }
  return kStar;
}

std::string FilterFn::tag() const {
  switch (kind_) {
    case FilterKind::identity: return "id";
    case FilterKind::even: return "even";
    case FilterKind::odd: return "odd";
    case FilterKind::weight_bit: return "bit:" + std::to_string(a_) + ":" + weight_->tag();
    case FilterKind::shift_right: return "shr:" + std::to_string(a_);
    case FilterKind::shift: return "add:" + std::to_string(a_);
    case FilterKind::negate: return "neg";
    case FilterKind::power: return "pow:" + std::to_string(a_);
    case FilterKind::affine: return "aff:" + std::to_string(a_) + ":" + std::to_string(b_);
    case FilterKind::constant: return "const:" + std::to_string(a_);
    case FilterKind::half_line: return "half:" + std::to_string(a_) + ":" + std::to_string(b_);
    case FilterKind::star_zero_succ: return "sz";
    case FilterKind::star_indicator: return "si";
    case FilterKind::table: {
      std::string out = "map:" + table_fallback_.to_string() + ":";
      bool first = true;
      for (const auto& [k, v] : *table_) {
        if (!first) out += ";";
        first = false;
        out += std::to_string(k) + "=" + v.to_string();
      }
      return out;
    }
  }
  return "id";
}

namespace {

ExtInt parse_ext(const std::string& s) { return s == "*" ? kStar : ExtInt(detail::parse_int(s)); }

}  // namespace

FilterFn FilterFn::parse(const std::string& tag) {
  auto [name, rest] = detail::split_once(tag, ':');
  if (name == "id") return identity();
  if (name == "even") return even();
  if (name == "odd") return odd();
  if (name == "neg") return negate();
  if (name == "sz") return star_zero_succ();
  if (name == "si") return star_indicator();
  if (name == "bit") {
    auto p = detail::split_once(rest, ':');
    return weight_bit(WeightFn::parse(p.second), static_cast<unsigned>(detail::parse_int(p.first)));
  }
  if (name == "shr") return shift_right(static_cast<unsigned>(detail::parse_int(rest)));
  if (name == "add") return shift(detail::parse_int(rest));
  if (name == "pow") return power(static_cast<unsigned>(detail::parse_int(rest)));
  if (name == "const") return constant(detail::parse_int(rest));
  if (name == "aff" || name == "half") {
    auto p = detail::split_once(rest, ':');
    Int a = detail::parse_int(p.first);
    Int b = detail::parse_int(p.second);
    return name == "aff" ? affine(a, b) : half_line(a, b);
  }
  if (name == "map") {
    auto p = detail::split_once(rest, ':');
    std::map<Int, ExtInt> entries;
    if (!p.second.empty())
      for (const std::string& kv : detail::split(p.second, ';')) {
        auto q = detail::split_once(kv, '=');
        entries[detail::parse_int(q.first)] = parse_ext(q.second);
      }
    return table(std::move(entries), parse_ext(p.first));
  }
  throw ParseError("unknown filter '" + tag + "'");
}

ExtVector apply_filter(const FilterFn& f, ExtSpan v) {
  ExtVector out;
  out.reserve(v.size());
  for (ExtInt x : v) out.push_back(f(x));
  return out;
}

// ---------------------------------------------------------------------------
// FilterChain

namespace {

bool is_linear(const FilterFn& f) {
  return f.kind() == FilterKind::shift || f.kind() == FilterKind::negate || f.kind() == FilterKind::affine;
}

std::pair<Int, Int> linear_coeffs(const FilterFn& f) {
  switch (f.kind()) {
    case FilterKind::shift: return {1, f.a()};
    case FilterKind::negate: return {-1, 0};
    default: return {f.a(), f.b()};
  }
}

}  // namespace

FilterChain FilterChain::then(const FilterFn& next) const {
  FilterChain out = *this;
  if (next.kind() == FilterKind::identity) return out;
  if (!next.preserves_star()) out.empty_ = false;
  if (!out.fns_.empty()) {
    const FilterFn& last = out.fns_.back();
    if (last.kind() == next.kind() && (next.kind() == FilterKind::even || next.kind() == FilterKind::odd)) return out;
    if ((last.kind() == FilterKind::even && next.kind() == FilterKind::odd) ||
        (last.kind() == FilterKind::odd && next.kind() == FilterKind::even)) {
      out.empty_ = true;
      out.fns_.push_back(next);
      return out;
    }
    if (last.kind() == FilterKind::shift_right && next.kind() == FilterKind::shift_right) {
      FilterFn merged = FilterFn::shift_right(static_cast<unsigned>(last.a() + next.a()));
      out.fns_.back() = merged;
      return out;
    }
    if (is_linear(last) && is_linear(next)) {
      auto [a1, b1] = linear_coeffs(last);
      auto [a2, b2] = linear_coeffs(next);
      FilterFn merged = FilterFn::affine(checked_mul(a2, a1), checked_add(checked_mul(a2, b1), b2));
      out.fns_.pop_back();
      if (merged.kind() != FilterKind::identity) out.fns_.push_back(merged);
      return out;
    }
  }
  out.fns_.push_back(next);
  return out;
}

FilterChain FilterChain::then(const FilterChain& next) const {
  FilterChain out = *this;
  for (const FilterFn& f : next.fns_) out = out.then(f);
  if (next.empty_) out.empty_ = true;
  return out;
}

ExtVector FilterChain::apply(ExtSpan v) const {
  ExtVector out(v.begin(), v.end());
  for (const FilterFn& f : fns_)
    for (ExtInt& x : out) x = f(x);
  return out;
}

bool FilterChain::preserves_star() const noexcept {
  return std::all_of(fns_.begin(), fns_.end(), [](const FilterFn& f) { return f.preserves_star(); });
}

namespace {

Wide ceil_div(Wide a, Wide b) { return -floor_div(-a, b); }

ValueRange image_of(const FilterFn& f, ValueRange in) {
  ValueRange out = in;
  if (f.kind() == FilterKind::star_zero_succ) {
    if (in.empty()) return {0, 0, false};
    return {std::min<Wide>(0, in.lo + 1), std::max<Wide>(0, in.hi + 1), false};
  }
  if (f.kind() == FilterKind::star_indicator) return {in.empty() ? 0 : 1, 1, false};
  if (in.empty()) return in;
  switch (f.kind()) {
    case FilterKind::identity:
      break;
    case FilterKind::even:
    case FilterKind::odd: {
      const Wide parity = f.kind() == FilterKind::even ? 0 : 1;
      auto fix = [&](Wide v, int dir) {
        Wide m = ((v % 2) + 2) % 2;
        return m == parity ? v : v + dir;
      };
      out.lo = fix(in.lo, 1);
      out.hi = fix(in.hi, -1);
      out.may_add_star = true;
      break;
    }
    case FilterKind::weight_bit:
      out.may_add_star = true;
      break;
    case FilterKind::shift_right:
      out.lo = floor_div(in.lo, Wide{1} << f.a());
      out.hi = floor_div(in.hi, Wide{1} << f.a());
      break;
    case FilterKind::shift:
    case FilterKind::negate:
    case FilterKind::affine: {
      auto [a, b] = linear_coeffs(f);
      Wide p = checked_add<Wide>(checked_mul<Wide>(a, in.lo), b);
      Wide q = checked_add<Wide>(checked_mul<Wide>(a, in.hi), b);
      out.lo = std::min(p, q);
      out.hi = std::max(p, q);
      break;
    }
    case FilterKind::power: {
      const unsigned k = static_cast<unsigned>(f.a());
      Wide p = checked_pow(in.lo, k);
      Wide q = checked_pow(in.hi, k);
      if (k % 2 == 1) {
        out.lo = p;
        out.hi = q;
      } else {
        out.hi = std::max(p, q);
        out.lo = (in.lo <= 0 && in.hi >= 0) ? (k == 0 ? 1 : 0) : std::min(p, q);
      }
      break;
    }
    case FilterKind::constant:
      out.lo = out.hi = f.a();
      break;
    case FilterKind::half_line: {
      const Wide a = f.a();
      const Wide b = f.b();
      if (a > 0) {
        out.lo = std::max(in.lo, floor_div(-b, a) + 1);
      } else if (a < 0) {
        out.hi = std::min(in.hi, ceil_div(b, -a) - 1);
      } else if (b <= 0) {
        out.lo = 1;
        out.hi = 0;
      }
      out.may_add_star = true;
      break;
    }
    default:
      break;
  }
  return out;
}

}  // namespace

ValueRange FilterChain::image(ValueRange in) const {
  for (const FilterFn& f : fns_) {
    if (f.kind() == FilterKind::table) {
      // Evaluate exhaustively when the range is small, otherwise give up.
      if (in.empty()) continue;
      if (in.hi - in.lo > (Wide{1} << 20)) throw ReductionError("cannot bound the image of a table filter");
      ValueRange out;
      for (Wide v = in.lo; v <= in.hi; ++v) {
        ExtInt r = f(ExtInt(static_cast<Int>(v)));
        if (r.is_star()) {
          out.may_add_star = true;
          continue;
        }
        if (out.empty()) {
          out.lo = out.hi = r.value();
        } else {
          out.lo = std::min<Wide>(out.lo, r.value());
          out.hi = std::max<Wide>(out.hi, r.value());
        }
      }
      out.may_add_star = out.may_add_star || in.may_add_star;
      in = out;
      continue;
    }
    const bool star_before = in.may_add_star;
    in = image_of(f, in);
    if (f.preserves_star()) in.may_add_star = in.may_add_star || star_before;
  }
  return in;
}

std::string FilterChain::tag() const {
  if (fns_.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < fns_.size(); ++i) {
    if (i) out += ",";
    out += fns_[i].tag();
  }
  return out;
}

FilterChain FilterChain::parse(const std::string& tag) {
  FilterChain out;
  for (const std::string& part : detail::split(tag, ',')) out = out.then(FilterFn::parse(part));
  return out;
}

}  // namespace hamred
