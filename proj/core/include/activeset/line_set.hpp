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

#ifndef ACTIVESET_LINE_SET_HPP_
#define ACTIVESET_LINE_SET_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace activeset {

/// A subset of the interior lines {1, ..., n-1} of an order-n frame.
class LineSet {
 public:
  explicit LineSet(int order);

  static LineSet full(int order);
  /// Bit k-1 of `mask` selects line k. Requires order <= 64.
  static LineSet from_mask(int order, std::uint64_t mask);
  /// Parses "1,3" (empty text is the empty set).
  static LineSet parse(int order, std::string_view text);

  int order() const noexcept { return order_; }
  bool contains(int k) const noexcept;
  void insert(int k);
  void erase(int k);

  bool empty() const noexcept;
  int size() const noexcept;
  std::vector<int> members() const;
  LineSet complement() const;
  std::uint64_t mask() const;

  /// "1,3"; "" for the empty set.
  std::string to_string() const;

  friend bool operator==(const LineSet&, const LineSet&) = default;
  friend auto operator<=>(const LineSet& a, const LineSet& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.members() <=> b.members();
  }

 private:
  int order_;
  std::vector<bool> bits_;  // bits_[k] for k in [1, order-1]; bits_[0] unused
};

}  // namespace activeset

#endif  // ACTIVESET_LINE_SET_HPP_
