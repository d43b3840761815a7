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

#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "hamred/common.hpp"

namespace hamred::detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::pair<std::string, std::string> split_once(const std::string& s, char sep) {
  std::size_t pos = s.find(sep);
  if (pos == std::string::npos) return {s, std::string()};
  return {s.substr(0, pos), s.substr(pos + 1)};
}

inline Int parse_int(const std::string& s) {
  Int v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ParseError("expected an integer, got '" + s + "'");
  return v;
}

inline Wide parse_wide(const std::string& s) {
  if (s.empty()) throw ParseError("expected an integer, got ''");
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ParseError("expected an integer, got '" + s + "'");
  Wide v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("expected an integer, got '" + s + "'");
    v = checked_add<Wide>(checked_mul<Wide>(v, 10), s[i] - '0');
  }
  return negative ? -v : v;
}

}  // namespace hamred::detail
