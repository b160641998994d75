// Copyright 2026 The Stylomark Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// SVG charts from the long-format results CSV: an ECDF of equivalent_z per
// configuration, perplexity against equivalent_z, and detection rate against
// sentence count.

#ifndef STYLOMARK_PLOT_HPP_
#define STYLOMARK_PLOT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "stylomark/error.hpp"
#include "stylomark/norms.hpp"

namespace stylomark {

struct LongRecord {
  std::string metric;
  std::string configuration;
  std::string condition;
  std::string sample;     // empty for per-length rows
  std::string sentences;  // empty for per-sample rows
  double value = 0.0;
};

inline std::vector<LongRecord> read_long_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::vector<LongRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = detail::parse_csv_line(line);
    if (lineno == 1) {
      if (f.size() != 6 || f[0] != "metric") throw DataError(path.string() + ": not a long-format results file");
      continue;
    }
    if (f.size() != 6) throw DataError(path.string() + ":" + std::to_string(lineno) + ": expected 6 fields");
    LongRecord r{f[0], f[1], f[2], f[3], f[4], 0.0};
    try {
      std::size_t used = 0;
      r.value = std::stod(f[5], &used);
      if (used != f[5].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": bad value '" + f[5] + "'");
    }
    out.push_back(std::move(r));
  }
  return out;
}

namespace detail {

inline constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

// Axes, ticks, legend and one polyline or point cloud per series.
inline std::string render_chart(const std::string& title, const std::string& xlabel, const std::string& ylabel,
                                const std::vector<Series>& series, bool lines) {
  constexpr double W = 720, H = 480, L = 70, R = 190, T = 40, B = 60;
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 - x0 < 1e-12) x0 -= 0.5, x1 += 0.5;
  if (y1 - y0 < 1e-12) y0 -= 0.5, y1 += 0.5;
  auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
    << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << xml_escape(title)
    << "</text>\n";
  o << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
    << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = x0 + (x1 - x0) * i / 5.0, yv = y0 + (y1 - y0) * i / 5.0;
    o << "<text x=\"" << num(px(xv)) << "\" y=\"" << H - B + 18 << "\" text-anchor=\"middle\">" << tick(xv)
      << "</text>\n";
    o << "<text x=\"" << L - 6 << "\" y=\"" << num(py(yv) + 4) << "\" text-anchor=\"end\">" << tick(yv)
      << "</text>\n";
  }
  o << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\">" << xml_escape(xlabel)
    << "</text>\n";
  o << "<text x=\"18\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
    << (T + H - B) / 2 << ")\">" << xml_escape(ylabel) << "</text>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    const auto& s = series[i];
    if (lines) {
      o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (const auto& [x, y] : s.points) {
        if (std::isfinite(x) && std::isfinite(y)) o << num(px(x)) << ',' << num(py(y)) << ' ';
      }
      o << "\"/>\n";
    } else {
      for (const auto& [x, y] : s.points) {
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        o << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\"2.5\" fill=\"" << color
          << "\" fill-opacity=\"0.6\"/>\n";
      }
    }
    const double ly = T + 10 + 18.0 * static_cast<double>(i);
    o << "<rect x=\"" << W - R + 15 << "\" y=\"" << ly - 9 << "\" width=\"12\" height=\"12\" fill=\"" << color
      << "\"/>\n";
    o << "<text x=\"" << W - R + 32 << "\" y=\"" << ly + 2 << "\">" << xml_escape(s.name) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

inline std::string series_key(const LongRecord& r) {
  return r.condition == "clean" ? r.configuration : r.configuration + " (" + r.condition + ")";
}

}  // namespace detail

inline std::string ecdf_svg(const std::vector<LongRecord>& records) {
  std::map<std::string, std::vector<double>> values;
  for (const auto& r : records) {
    if (r.metric == "equivalent_z") values[detail::series_key(r)].push_back(r.value);
  }
  std::vector<detail::Series> series;
  for (auto& [name, v] : values) {
    std::sort(v.begin(), v.end());
    detail::Series s{name, {}};
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double f0 = static_cast<double>(i) / static_cast<double>(v.size());
      const double f1 = static_cast<double>(i + 1) / static_cast<double>(v.size());
      s.points.emplace_back(v[i], f0);
      s.points.emplace_back(v[i], f1);
    }
    series.push_back(std::move(s));
  }
  return detail::render_chart("ECDF of equivalent z", "equivalent z", "fraction of texts", series, true);
}

inline std::string perplexity_svg(const std::vector<LongRecord>& records) {
  std::map<std::pair<std::string, std::string>, std::pair<double, double>> joined;  // (series, sample) -> (ppl, z)
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& r : records) {
    if (r.metric != "perplexity" && r.metric != "equivalent_z") continue;
    auto [it, _] = joined.try_emplace({detail::series_key(r), r.sample}, nan, nan);
    (r.metric == "perplexity" ? it->second.first : it->second.second) = r.value;
  }
  std::map<std::string, detail::Series> by_name;
  for (const auto& [key, pz] : joined) {
    auto& s = by_name[key.first];
    s.name = key.first;
    s.points.emplace_back(pz.first, pz.second);
  }
  std::vector<detail::Series> series;
  for (auto& [_, s] : by_name) series.push_back(std::move(s));
  return detail::render_chart("Perplexity against equivalent z", "perplexity", "equivalent z", series, false);
}

inline std::string ablation_svg(const std::vector<LongRecord>& records) {
  std::map<std::string, std::vector<std::pair<double, double>>> by_name;
  for (const auto& r : records) {
    if (r.metric == "detection_rate") by_name[r.configuration].emplace_back(std::stod(r.sentences), r.value);
  }
  std::vector<detail::Series> series;
  for (auto& [name, pts] : by_name) {
    std::sort(pts.begin(), pts.end());
    series.push_back({name, std::move(pts)});
  }
  return detail::render_chart("Detection rate by sentence count", "sentences", "detection rate", series, true);
}

// Writes z_ecdf.svg, perplexity_z.svg and, when per-length rows exist,
// ablation.svg into `dir`. Returns the paths written.
inline std::vector<std::filesystem::path> write_plots(const std::filesystem::path& long_csv,
                                                      const std::filesystem::path& dir) {
  const auto records = read_long_csv(long_csv);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  auto put = [&](const char* name, const std::string& svg) {
    const auto p = dir / name;
    std::ofstream f(p, std::ios::binary);
    if (!(f << svg)) throw DataError("cannot write " + p.string());
    written.push_back(p);
  };
  put("z_ecdf.svg", ecdf_svg(records));
  put("perplexity_z.svg", perplexity_svg(records));
  const bool has_ablation =
      std::any_of(records.begin(), records.end(), [](const LongRecord& r) { return r.metric == "detection_rate"; });
  if (has_ablation) put("ablation.svg", ablation_svg(records));
  return written;
}

}  // namespace stylomark

#endif  // STYLOMARK_PLOT_HPP_
