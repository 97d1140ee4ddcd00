// Copyright 2026 The activeset Authors
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

#include "activeset/line_set.hpp"

#include <charconv>

#include "activeset/error.hpp"

namespace activeset {

namespace {

void check_line(int order, int k) {
  if (k < 1 || k > order - 1) {
    throw Error(ErrorCode::kLineOutOfRange,
                "line " + std::to_string(k) + " is not in [1, " +
                    std::to_string(order - 1) + "]");
  }
}

}  // namespace

LineSet::LineSet(int order) : order_(order) {
  if (order < 0) throw Error(ErrorCode::kInvalidInput, "negative order");
  bits_.assign(static_cast<std::size_t>(std::max(order, 1)), false);
}

LineSet LineSet::full(int order) {
  LineSet s(order);
  for (int k = 1; k < order; ++k) s.bits_[k] = true;
  return s;
}

LineSet LineSet::from_mask(int order, std::uint64_t mask) {
  if (order > 65) {
    throw Error(ErrorCode::kInvalidInput, "mask form needs order <= 65");
  }
  LineSet s(order);
  for (int k = 1; k < order; ++k) s.bits_[k] = (mask >> (k - 1)) & 1U;
  if (order - 1 < 64 && (mask >> std::max(order - 1, 0)) != 0) {
    throw Error(ErrorCode::kLineOutOfRange, "mask selects lines beyond n-1");
  }
  return s;
}

LineSet LineSet::parse(int order, std::string_view text) {
  LineSet s(order);
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto token = text.substr(pos, next - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int k = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), k);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kInvalidInput,
                  "malformed line list '" + std::string(text) + "'");
    }
    s.insert(k);
    pos = next + 1;
  }
  return s;
}

bool LineSet::contains(int k) const noexcept {
  return k >= 1 && k < order_ && bits_[k];
}

void LineSet::insert(int k) {
  check_line(order_, k);
  bits_[k] = true;
}

void LineSet::erase(int k) {
  check_line(order_, k);
  bits_[k] = false;
}

bool LineSet::empty() const noexcept { return size() == 0; }

int LineSet::size() const noexcept {
  int count = 0;
  for (int k = 1; k < order_; ++k) count += bits_[k] ? 1 : 0;
  return count;
}

std::vector<int> LineSet::members() const {
  std::vector<int> out;
  for (int k = 1; k < order_; ++k) {
    if (bits_[k]) out.push_back(k);
  }
  return out;
}

LineSet LineSet::complement() const {
  LineSet s(order_);
  for (int k = 1; k < order_; ++k) s.bits_[k] = !bits_[k];
  return s;
}

std::uint64_t LineSet::mask() const {
  if (order_ > 65) {
    throw Error(ErrorCode::kInvalidInput, "mask form needs order <= 65");
  }
  std::uint64_t m = 0;
  for (int k = 1; k < order_; ++k) {
    if (bits_[k]) m |= std::uint64_t{1} << (k - 1);
  }
  return m;
}

std::string LineSet::to_string() const {
  std::string out;
  for (int k : members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(k);
  }
  return out;
}

}  // namespace activeset
