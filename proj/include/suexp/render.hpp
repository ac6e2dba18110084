// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "suexp/bounds.hpp"
#include "suexp/sweep.hpp"

namespace suexp {

enum class Format { Markdown, Csv, Json };

/// "md", "csv" or "json"; std::invalid_argument otherwise.
Format parse_format(std::string_view text);

// Every renderer is a pure function of its input, so output is byte-stable.
// JSON documents carry "schema": 1.

std::string render_table1(const std::vector<Table1Row>& rows, Format format);
std::string render_table2(const Table2& table, Format format);
std::string render_delta(const std::vector<DeltaEntry>& entries, const DeltaOptions& options,
                         Format format);
std::string render_mismatches(const std::vector<Mismatch>& mismatches);
/// Markdown or JSON; CSV lists the violations only.
std::string render_report(const SweepReport& report, Format format);

}  // namespace suexp
