// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "suexp/grid.hpp"
#include "suexp/verifiers.hpp"

namespace suexp {

class UnknownCheckError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CheckInfo {
  std::string name;
  /// Axis names in canonical order.
  std::vector<std::string> axes;
  /// Conjecture checks report violations without failing by default.
  bool conjecture = false;
  /// Instances are drawn from the axes by a seeded generator.
  bool randomized = false;
  std::string default_grid;
  std::string summary;
};

const std::vector<CheckInfo>& check_catalog();
/// Throws UnknownCheckError.
const CheckInfo& check_info(std::string_view name);

struct SweepOptions {
  unsigned jobs = 1;
  std::uint64_t seed = 1;
};

/// Slack statistics over one value of the leading axes, e.g. p=3 alpha=2.
struct SliceStats {
  std::string key;
  std::uint64_t checked = 0;
  std::uint64_t equalities = 0;
  std::optional<std::int64_t> min_slack;
  std::optional<std::int64_t> max_slack;
};

struct SweepReport {
  std::string check;
  std::string grid;
  std::uint64_t seed = 0;
  bool conjecture = false;
  /// Evaluated instances (skipped ones excluded).
  std::uint64_t checked = 0;
  std::uint64_t undetermined = 0;
  std::uint64_t skipped = 0;
  /// Instances with slack exactly 0.
  std::uint64_t equalities = 0;
  std::vector<CheckOutcome> violations;
  std::vector<CheckOutcome> undetermined_cases;
  std::vector<CheckOutcome> flagged;
  std::vector<SliceStats> slices;
  /// Kept out of every serialized form so reports stay byte-stable.
  double wall_time_s = 0;

  bool clean() const { return violations.empty() && undetermined == 0; }
};

/// Runs a check over the grid. `grid_text` may be "default". The report is
/// identical for every jobs value.
SweepReport sweep(std::string_view check, std::string_view grid_text,
                  const SweepOptions& options = {});
SweepReport sweep(std::string_view check, const GridSpec& grid,
                  const SweepOptions& options = {});

}  // namespace suexp
