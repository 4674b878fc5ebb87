#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

#include <json.hpp>

#include "maxwell/bench.hpp"

namespace maxwell {

namespace {

using json = nlohmann::json;

std::string fixed(double v, int digits = 6) {
  if (!std::isfinite(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json size_json(MeshSize s) { return json::array({s.n, s.m_or_n()}); }

json report_object(const RunResult& r, int k) {
  json j;
  j["case"] = r.case_name;
  j["kind"] = std::string(to_string(r.kind));
  j["size"] = size_json(r.size);
  j["cells"] = r.cells;
  j["nodes"] = r.nodes;
  j["fdof"] = r.fdof;
  j["zero_count"] = r.zero_count;
  j["infinite_count"] = r.infinite_count;
  const std::size_t n = k > 0 ? std::min<std::size_t>(k, r.eigenvalues.size()) : r.eigenvalues.size();
  j["eigenvalues"] = std::vector<double>(r.eigenvalues.begin(), r.eigenvalues.begin() + n);
  json pairs = json::array();
  for (const MatchPair& p : r.match.pairs) {
    pairs.push_back({{"computed", p.computed}, {"reference", p.reference}, {"error_pct", p.error},
                     {"slot", p.slot}});
  }
  j["matches"] = pairs;
  j["missed"] = r.match.missed;
  j["spurious"] = r.match.spurious;
  j["unreached"] = r.match.unreached;
  j["untracked_count"] = r.match.untracked.size();
  j["missed_singular"] = r.match.missed_singular;
  return j;
}

std::string utc_stamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string column_label(const BenchmarkCase& bench, ElementKind kind) {
  std::string label(to_string(kind));
  const Domain d = bench.domain.name;
  if ((d == Domain::circle || d == Domain::cracked_circle) && !traits(kind).is_triangle) {
    label += "&";
    label += to_string(triangle_companion(kind));
  }
  return label;
}

std::string run_report_json(const RunResult& r, int k, bool metadata) {
  json j = report_object(r, k);
  if (metadata) j["metadata"] = {{"seconds", r.seconds}, {"timestamp", utc_stamp()}};
  return j.dump(2);
}

std::string sweep_json(const SweepResult& s) {
  json j;
  j["case"] = s.case_name;
  j["kind"] = std::string(to_string(s.kind));
  j["threshold_pct"] = s.threshold;
  j["k"] = s.k;
  j["start"] = s.start;
  j["fdof_cap"] = s.cap;
  j["min_fdof"] = s.min_fdof ? json(*s.min_fdof) : json("not achieved");
  j["best_error_pct"] = number_or_null(s.best_error);
  j["best_fdof"] = s.best_fdof;
  json levels = json::array();
  for (const SweepLevel& lv : s.levels) {
    json errs = json::array();
    for (double e : lv.errors) errs.push_back(number_or_null(e));
    levels.push_back({{"level", lv.level}, {"size", size_json(lv.size)}, {"fdof", lv.fdof},
                      {"max_error_pct", number_or_null(lv.max_error)}, {"errors_pct", errs},
                      {"spurious", lv.spurious}});
  }
  j["levels"] = levels;
  return j.dump(2);
}

std::string distortion_json(const DistortionResult& d, int k) {
  json j;
  j["case"] = d.normal.case_name;
  j["kind"] = std::string(to_string(d.normal.kind));
  j["size"] = size_json(d.normal.size);
  j["magnitude"] = d.magnitude;
  j["seed"] = d.seed;
  j["normal"] = report_object(d.normal, k);
  j["distorted"] = report_object(d.distorted, k);
  j["shifts_pct"] = d.shifts;
  j["max_shift_pct"] = d.shifts.empty() ? 0.0 : *std::max_element(d.shifts.begin(), d.shifts.end());
  return j.dump(2);
}

std::string runs_csv(const std::vector<RunResult>& runs) {
  std::ostringstream out;
  out << "case,kind,n,m,fdof,zero_count,index,computed,reference,error_pct,status\n";
  for (const RunResult& r : runs) {
    struct Row {
      double key;
      std::string computed, reference, error, status;
    };
    std::vector<Row> rows;
    for (const MatchPair& p : r.match.pairs) {
      rows.push_back({p.computed, fixed(p.computed), fixed(p.reference), fixed(p.error, 4), "matched"});
    }
    for (double v : r.match.spurious) rows.push_back({v, fixed(v), "", "", "spurious"});
    for (double v : r.match.missed) rows.push_back({v, "", fixed(v), "", "missed"});
    for (double v : r.match.unreached) rows.push_back({v, "", fixed(v), "", "unreached"});
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.key < b.key; });
    int index = 1;
    for (const Row& row : rows) {
      out << r.case_name << ',' << to_string(r.kind) << ',' << r.size.n << ',' << r.size.m_or_n() << ','
          << r.fdof << ',' << r.zero_count << ',' << index++ << ',' << row.computed << ','
          << row.reference << ',' << row.error << ',' << row.status << '\n';
    }
  }
  return out.str();
}

std::string min_fdof_csv(const std::vector<SweepResult>& sweeps) {
  std::ostringstream out;
  out << "case,kind,threshold_pct,k,start,fdof_cap,min_fdof,best_error_pct,best_fdof,levels\n";
  for (const SweepResult& s : sweeps) {
    out << s.case_name << ',' << to_string(s.kind) << ',' << s.threshold << ',' << s.k << ',' << s.start
        << ',' << s.cap << ',' << (s.min_fdof ? std::to_string(*s.min_fdof) : "not achieved") << ','
        << fixed(s.best_error, 4) << ',' << s.best_fdof << ',' << s.levels.size() << '\n';
  }
  return out.str();
}

std::string min_fdof_svg(const std::string& title, const std::vector<SweepResult>& sweeps) {
  const int bar = 60, gap = 30, left = 70, top = 40, height = 260;
  const int width = left + static_cast<int>(sweeps.size()) * (bar + gap) + gap;
  double top_value = 1.0;
  for (const SweepResult& s : sweeps) {
    top_value = std::max(top_value, static_cast<double>(s.min_fdof ? *s.min_fdof : s.cap));
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << top + height + 60 << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<text x=\"" << left << "\" y=\"20\" font-size=\"14\">" << title << "</text>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top + height << "\" x2=\"" << width - 10 << "\" y2=\""
      << top + height << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + height
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << left - 8 << "\" y=\"" << top + 4 << "\" text-anchor=\"end\">"
      << static_cast<long>(top_value) << "</text>\n";
  out << "<text x=\"" << left - 8 << "\" y=\"" << top + height << "\" text-anchor=\"end\">0</text>\n";
  int x = left + gap;
  for (const SweepResult& s : sweeps) {
    const bool edge = traits(s.kind).is_edge;
    const std::string label(to_string(s.kind));
    if (s.min_fdof) {
      const int h = static_cast<int>(std::lround(*s.min_fdof / top_value * height));
      out << "<rect x=\"" << x << "\" y=\"" << top + height - h << "\" width=\"" << bar << "\" height=\"" << h
          << "\" fill=\"" << (edge ? "#3b7dd8" : "#d8843b") << "\"/>\n";
      out << "<text x=\"" << x + bar / 2 << "\" y=\"" << top + height - h - 4
          << "\" text-anchor=\"middle\">" << *s.min_fdof << "</text>\n";
    } else {
      const int cx = x + bar / 2, cy = top + 20;
      out << "<path d=\"M" << cx - 10 << ' ' << cy - 10 << " L" << cx + 10 << ' ' << cy + 10 << " M"
          << cx - 10 << ' ' << cy + 10 << " L" << cx + 10 << ' ' << cy - 10
          << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
      out << "<text x=\"" << cx << "\" y=\"" << cy + 26 << "\" text-anchor=\"middle\">not achieved</text>\n";
    }
    out << "<text x=\"" << x + bar / 2 << "\" y=\"" << top + height + 18 << "\" text-anchor=\"middle\">"
        << label << "</text>\n";
    out << "<text x=\"" << x + bar / 2 << "\" y=\"" << top + height + 34 << "\" text-anchor=\"middle\">&lt;"
        << s.threshold << "%</text>\n";
    x += bar + gap;
  }
  out << "</svg>\n";
  return out.str();
}

std::string reference_table_csv(const BenchmarkCase& bench, const std::vector<RunResult>& runs) {
  const std::vector<ReferenceValue> slots = bench.slots();
  const int ns = static_cast<int>(slots.size());
  std::ostringstream out;
  out << "benchmark";
  for (const RunResult& r : runs) out << ',' << column_label(bench, r.kind);
  out << '\n';

  // Computed partner per slot and spurious values grouped by position.
  std::vector<std::vector<std::string>> cell(runs.size(), std::vector<std::string>(ns));
  std::vector<std::vector<std::vector<double>>> extra(runs.size(), std::vector<std::vector<double>>(ns + 1));
  for (std::size_t c = 0; c < runs.size(); ++c) {
    const MatchReport& m = runs[c].match;
    for (int s = 0; s < ns && s < static_cast<int>(m.slot_status.size()); ++s) {
      if (m.slot_status[s] == SlotStatus::missed) cell[c][s] = "-";
    }
    for (const MatchPair& p : m.pairs) cell[c][p.slot] = fixed(p.computed);
    for (std::size_t i = 0; i < m.spurious.size(); ++i) extra[c][m.spurious_after[i]].push_back(m.spurious[i]);
  }
  for (int s = 0; s <= ns; ++s) {
    std::size_t rows = 0;
    for (const auto& e : extra) rows = std::max(rows, e[s].size());
    for (std::size_t i = 0; i < rows; ++i) {
      out << '-';
      for (const auto& e : extra) out << ',' << (i < e[s].size() ? fixed(e[s][i]) : "-");
      out << '\n';
    }
    if (s == ns) break;
    out << fixed(slots[s].value);
    for (std::size_t c = 0; c < runs.size(); ++c) out << ',' << cell[c][s];
    out << '\n';
  }
  out << "cells";
  for (const RunResult& r : runs) out << ',' << r.cells;
  out << "\nfdof";
  for (const RunResult& r : runs) out << ',' << r.fdof;
  out << "\nzeros";
  for (const RunResult& r : runs) out << ',' << r.zero_count;
  out << '\n';
  return out.str();
}

std::string distortion_table_csv(const std::vector<DistortionResult>& studies) {
  std::ostringstream out;
  out << "kind,cells,fdof,index,reference,normal,distorted,shift_pct\n";
  for (const DistortionResult& d : studies) {
    const RunResult& r = d.normal;
    for (std::size_t i = 0; i < d.shifts.size(); ++i) {
      const double v = r.eigenvalues[i];
      std::string ref = "-";
      for (const MatchPair& p : r.match.pairs) {
        if (p.computed == v) ref = fixed(p.reference);
      }
      out << to_string(r.kind) << ',' << r.cells << ',' << r.fdof << ',' << i + 1 << ',' << ref << ','
          << fixed(v) << ',' << fixed(d.distorted.eigenvalues[i]) << ',' << fixed(d.shifts[i], 4) << '\n';
    }
    out << to_string(r.kind) << ',' << r.cells << ',' << r.fdof << ",zeros,," << r.zero_count << ','
        << d.distorted.zero_count << ",\n";
  }
  return out.str();
}

}  // namespace maxwell
