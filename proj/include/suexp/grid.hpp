// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace suexp {

/// Values already fixed for earlier axes, looked up by name.
using Bindings = std::vector<std::pair<std::string, std::int64_t>>;

/// Integer expression over + - * ^ and parentheses; identifiers refer to
/// earlier grid axes, e.g. `2*p^alpha-1`.
class IntExpr {
 public:
  static IntExpr parse(std::string_view text);
  std::int64_t eval(const Bindings& bindings) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

struct AxisItem {
  IntExpr lo;
  std::optional<IntExpr> hi;
  std::optional<IntExpr> step;
};

/// One `name=...` clause: a comma-separated list of values and inclusive
/// ranges `a..b` (optionally `a..b:step`), or the keyword `auto`.
struct Axis {
  std::string name;
  std::vector<AxisItem> items;
  bool is_auto = false;
  std::string text;

  std::vector<std::int64_t> values(const Bindings& bindings) const;
};

/// Semicolon-separated axes, e.g. `p=2,3,5; alpha=0..3; n=1..200`.
class GridSpec {
 public:
  static GridSpec parse(std::string_view text);

  const std::vector<Axis>& axes() const { return axes_; }
  const Axis* find(std::string_view name) const;
  /// Canonical text: axes joined by "; ".
  std::string to_string() const;

 private:
  std::vector<Axis> axes_;
};

}  // namespace suexp
