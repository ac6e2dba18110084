// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include "suexp/render.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace suexp {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kObservedNote =
    "max_observed is the largest certified e_3(n,k) over k in [n, k_searched_to] and the "
    "stable k; observed, not proven maximal";

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string rate(std::uint64_t part, std::uint64_t whole) {
  if (whole == 0) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * static_cast<double>(part) /
                                               static_cast<double>(whole));
  return buf;
}

std::string opt(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "-";
}

Json outcome_json(const CheckOutcome& o) {
  Json instance = Json::object();
  for (const auto& p : o.instance) instance[p.name] = p.value;
  Json j;
  j["instance"] = instance;
  if (!o.detail.empty()) j["detail"] = o.detail;
  j["lhs"] = to_string(o.lhs);
  j["bound"] = o.bound;
  j["slack"] = o.slack ? Json(*o.slack) : Json(nullptr);
  j["holds"] = to_string(o.holds);
  if (o.flagged) j["flagged"] = true;
  if (!o.note.empty()) j["note"] = o.note;
  return j;
}

void outcome_rows(std::ostringstream& out, const std::vector<CheckOutcome>& list) {
  out << "| instance | lhs | bound | slack | holds | note |\n";
  out << "|---|---|---|---|---|---|\n";
  for (const auto& o : list) {
    out << "| " << o.instance_string() << " | " << to_string(o.lhs) << " | " << o.bound
        << " | " << opt(o.slack) << " | " << to_string(o.holds) << " | " << o.note << " |\n";
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "md") return Format::Markdown;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (md, csv, json)");
}

std::string render_table1(const std::vector<Table1Row>& rows, Format format) {
  const bool observed = !rows.empty() && rows.front().max_observed.has_value();
  std::ostringstream out;
  switch (format) {
    case Format::Markdown:
      out << "| n |";
      if (observed) out << " max observed e_3(n,k) |";
      out << " e_3(n,2*3^L+n-1) | n-1+ord_3(floor(n/3)!) |\n|---|";
      if (observed) out << "---|";
      out << "---|---|\n";
      for (const auto& r : rows) {
        out << "| " << r.n << " |";
        if (observed) out << " " << *r.max_observed << " |";
        out << " " << r.stable << " | " << r.bound << " |\n";
      }
      if (observed) out << "\n" << kObservedNote << ".\n";
      return out.str();
    case Format::Csv:
      out << "n,stable,bound" << (observed ? ",max_observed" : "") << "\n";
      for (const auto& r : rows) {
        out << r.n << "," << r.stable << "," << r.bound;
        if (observed) out << "," << *r.max_observed;
        out << "\n";
      }
      return out.str();
    case Format::Json: {
      Json j;
      j["schema"] = 1;
      j["table"] = "one";
      j["p"] = 3;
      Json list = Json::array();
      for (const auto& r : rows) {
        Json row;
        row["n"] = r.n;
        row["stable"] = r.stable;
        row["L"] = r.stable_L;
        row["bound"] = r.bound;
        if (r.max_observed) {
          row["max_observed"] = *r.max_observed;
          row["k_searched_to"] = r.k_searched_to;
        }
        list.push_back(row);
      }
      j["rows"] = list;
      if (observed) j["note"] = kObservedNote;
      return dump(j);
    }
  }
  return {};
}

std::string render_table2(const Table2& table, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Markdown:
      out << "| {n}_9 \\ {r}_9 |";
      for (int r = 0; r < 9; ++r) out << " " << r << " |";
      out << "\n|---|";
      for (int r = 0; r < 9; ++r) out << "---|";
      out << "\n";
      for (int n = 0; n < 9; ++n) {
        out << "| " << n << " |";
        for (int r = 0; r < 9; ++r) out << " " << table[n][r] << " |";
        out << "\n";
      }
      return out.str();
    case Format::Csv:
      out << "n_mod_9";
      for (int r = 0; r < 9; ++r) out << ",r" << r;
      out << "\n";
      for (int n = 0; n < 9; ++n) {
        out << n;
        for (int r = 0; r < 9; ++r) out << "," << table[n][r];
        out << "\n";
      }
      return out.str();
    case Format::Json: {
      Json j;
      j["schema"] = 1;
      j["table"] = "two";
      j["p"] = 3;
      j["modulus"] = 9;
      Json rows = Json::array();
      for (const auto& row : table) rows.push_back(Json(row));
      j["rows"] = rows;
      return dump(j);
    }
  }
  return {};
}

std::string render_delta(const std::vector<DeltaEntry>& entries, const DeltaOptions& options,
                         Format format) {
  std::ostringstream out;
  auto text = [](const DeltaEntry& e) { return e.delta ? std::to_string(*e.delta) : "inf"; };
  switch (format) {
    case Format::Markdown:
      out << "p=" << options.p << " alpha=" << options.alpha << " n=" << options.n
          << " baseline=" << options.baseline << "\n\n| l | delta |\n|---|---|\n";
      for (const auto& e : entries) out << "| " << e.l << " | " << text(e) << " |\n";
      return out.str();
    case Format::Csv:
      out << "l,delta\n";
      for (const auto& e : entries) out << e.l << "," << text(e) << "\n";
      return out.str();
    case Format::Json: {
      Json j;
      j["schema"] = 1;
      j["table"] = "delta";
      j["p"] = options.p;
      j["alpha"] = options.alpha;
      j["n"] = options.n;
      j["baseline"] = options.baseline;
      Json list = Json::array();
      for (const auto& e : entries) {
        Json row;
        row["l"] = e.l;
        if (e.delta) {
          row["delta"] = *e.delta;
        } else {
          row["delta"] = nullptr;
          row["infinite"] = true;
        }
        list.push_back(row);
      }
      j["values"] = list;
      return dump(j);
    }
  }
  return {};
}

std::string render_mismatches(const std::vector<Mismatch>& mismatches) {
  std::ostringstream out;
  for (const auto& m : mismatches) {
    out << "mismatch " << m.where << ": expected " << m.expected << ", got " << m.actual
        << "\n";
  }
  return out.str();
}

std::string render_report(const SweepReport& report, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Markdown: {
      out << "# verify " << report.check << (report.conjecture ? " (conjecture)" : "") << "\n\n";
      out << "- grid: `" << report.grid << "`\n";
      out << "- seed: " << report.seed << "\n";
      out << "- checked: " << report.checked << "\n";
      out << "- violations: " << report.violations.size() << "\n";
      out << "- undetermined: " << report.undetermined << "\n";
      out << "- skipped: " << report.skipped << "\n";
      out << "- equalities: " << report.equalities << " ("
          << rate(report.equalities, report.checked) << ")\n";
      if (!report.flagged.empty()) out << "- flagged: " << report.flagged.size() << "\n";
      out << "\n## Slack by slice\n\n| slice | checked | equalities | min slack | max slack |\n"
          << "|---|---|---|---|---|\n";
      for (const auto& s : report.slices) {
        out << "| " << s.key << " | " << s.checked << " | " << s.equalities << " | "
            << opt(s.min_slack) << " | " << opt(s.max_slack) << " |\n";
      }
      if (!report.violations.empty()) {
        out << "\n## " << (report.conjecture ? "Non-equality instances" : "Violations")
            << "\n\n";
        outcome_rows(out, report.violations);
      }
      if (!report.undetermined_cases.empty()) {
        out << "\n## Undetermined\n\n";
        outcome_rows(out, report.undetermined_cases);
      }
      if (!report.flagged.empty()) {
        out << "\n## Flagged boundary instances\n\n";
        outcome_rows(out, report.flagged);
      }
      return out.str();
    }
    case Format::Csv:
      out << "instance,lhs,bound,slack,holds,note\n";
      for (const auto& o : report.violations) {
        out << csv_field(o.instance_string()) << "," << to_string(o.lhs) << "," << o.bound
            << "," << opt(o.slack) << "," << to_string(o.holds) << "," << csv_field(o.note)
            << "\n";
      }
      return out.str();
    case Format::Json: {
      Json j;
      j["schema"] = 1;
      j["check"] = report.check;
      j["grid"] = report.grid;
      j["seed"] = report.seed;
      j["conjecture"] = report.conjecture;
      j["checked"] = report.checked;
      j["undetermined"] = report.undetermined;
      j["skipped"] = report.skipped;
      j["equalities"] = report.equalities;
      Json slices = Json::array();
      for (const auto& s : report.slices) {
        Json js;
        js["slice"] = s.key;
        js["checked"] = s.checked;
        js["equalities"] = s.equalities;
        js["min_slack"] = s.min_slack ? Json(*s.min_slack) : Json(nullptr);
        js["max_slack"] = s.max_slack ? Json(*s.max_slack) : Json(nullptr);
        slices.push_back(js);
      }
      j["slices"] = slices;
      auto list = [](const std::vector<CheckOutcome>& v) {
        Json a = Json::array();
        for (const auto& o : v) a.push_back(outcome_json(o));
        return a;
      };
      j["violations"] = list(report.violations);
      j["undetermined_cases"] = list(report.undetermined_cases);
      j["flagged"] = list(report.flagged);
      return dump(j);
    }
  }
  return {};
}

}  // namespace suexp
