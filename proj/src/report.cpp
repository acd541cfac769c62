// Copyright 2026 The nhvqe Authors
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
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "nhvqe/errors.hpp"
#include "nhvqe/sweep.hpp"

namespace nhvqe {
namespace {

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

double parse_field_double(std::string_view text, std::size_t line) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw DomainError("csv line " + std::to_string(line) + ": bad number '" +
                      s + "'");
  }
  return v;
}

std::uint64_t parse_field_uint(std::string_view text, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DomainError("csv line " + std::to_string(line) + ": bad integer '" +
                      std::string(text) + "'");
  }
  return v;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << body;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// Round step (1, 2 or 5 times a power of ten) giving about `target` ticks.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::string to_csv(const SweepResult& result) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : result.rows) {
    out += to_string(r.model);
    out += ',' + std::to_string(r.n);
    out += ',' + format_full(r.gamma);
    out += ',';
    out += to_string(r.method);
    out += ',' + format_full(r.energy_re);
    out += ',' + format_full(r.energy_im);
    out += ',' + format_full(r.mx);
    out += ',' + format_full(r.chi_x);
    out += ',' + format_full(r.final_cost);
    out += ',' + std::to_string(r.seed);
    out += '\n';
  }
  return out;
}

SweepResult parse_csv(std::string_view text) {
  SweepResult result;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!header_seen) {
      if (line != kCsvHeader) {
        throw DomainError("csv header mismatch: '" + std::string(line) + "'");
      }
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      f.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (f.size() != 10) {
      throw DomainError("csv line " + std::to_string(line_no) +
                        ": expected 10 fields, got " + std::to_string(f.size()));
    }
    SweepRow r;
    r.model = parse_model_kind(f[0]);
    r.n = static_cast<std::size_t>(parse_field_uint(f[1], line_no));
    r.gamma = parse_field_double(f[2], line_no);
    r.method = parse_method(f[3]);
    r.energy_re = parse_field_double(f[4], line_no);
    r.energy_im = parse_field_double(f[5], line_no);
    r.mx = parse_field_double(f[6], line_no);
    r.chi_x = parse_field_double(f[7], line_no);
    r.final_cost = parse_field_double(f[8], line_no);
    r.seed = parse_field_uint(f[9], line_no);
    result.rows.push_back(r);
  }
  if (!header_seen) throw DomainError("csv is empty");
  return result;
}

void write_csv(const SweepResult& result, const std::filesystem::path& path) {
  write_file(path, to_csv(result));
}

SweepResult read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_csv(buf.str());
  } catch (const DomainError& e) {
    throw DomainError(path.string() + ": " + e.what());
  }
}

std::string to_svg(const SweepResult& result, Quantity quantity) {
  if (result.rows.empty()) throw DomainError("nothing to plot");
  constexpr double kWidth = 720, kHeight = 480;
  constexpr double kLeft = 80, kRight = 170, kTop = 40, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  auto value = [quantity](const SweepRow& r) {
    return quantity == Quantity::MX ? r.mx : r.chi_x;
  };

  std::map<std::pair<std::size_t, Method>, std::vector<const SweepRow*>> curves;
  double x_lo = result.rows.front().gamma, x_hi = x_lo;
  double y_lo = value(result.rows.front()), y_hi = y_lo;
  for (const auto& r : result.rows) {
    curves[{r.n, r.method}].push_back(&r);
    x_lo = std::min(x_lo, r.gamma);
    x_hi = std::max(x_hi, r.gamma);
    y_lo = std::min(y_lo, value(r));
    y_hi = std::max(y_hi, value(r));
  }
  if (x_hi <= x_lo) x_hi = x_lo + 1.0;
  if (y_hi - y_lo < 1e-12) {
    y_lo -= 0.5;
    y_hi += 0.5;
  }
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;

  auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto sy = [&](double y) {
    return kTop + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h;
  };

  const bool imaginary = result.rows.front().model == ModelKind::NH_TIM;
  const std::string x_label = imaginary ? "Γ_I" : "Γ";
  const std::string y_label =
      quantity == Quantity::MX ? "⟨M_x⟩" : "χ_x";
  const std::string model(to_string(result.rows.front().model));

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-size=\"15\">" << escape_xml(y_label) << " vs " << x_label
      << " (" << model << ")</text>\n"
      << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  const double xs = nice_step(x_hi - x_lo, 5);
  for (double t = std::ceil(x_lo / xs) * xs; t <= x_hi + 1e-9 * xs; t += xs) {
    svg << "<line x1=\"" << sx(t) << "\" y1=\"" << kTop + plot_h << "\" x2=\""
        << sx(t) << "\" y2=\"" << kTop + plot_h + 5 << "\" stroke=\"black\"/>"
        << "<text x=\"" << sx(t) << "\" y=\"" << kTop + plot_h + 18
        << "\" text-anchor=\"middle\">" << format_short(std::abs(t) < 1e-12 ? 0.0 : t)
        << "</text>\n";
  }
  const double ys = nice_step(y_hi - y_lo, 5);
  for (double t = std::ceil(y_lo / ys) * ys; t <= y_hi + 1e-9 * ys; t += ys) {
    svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << sy(t) << "\" x2=\""
        << kLeft << "\" y2=\"" << sy(t) << "\" stroke=\"black\"/>"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << sy(t) + 4
        << "\" text-anchor=\"end\">" << format_short(std::abs(t) < 1e-12 ? 0.0 : t)
        << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\" font-size=\"14\">" << x_label << "</text>\n"
      << "<text x=\"20\" y=\"" << kTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 "
      << kTop + plot_h / 2 << ")\">" << escape_xml(y_label) << "</text>\n";

  static constexpr const char* kPalette[] = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  std::size_t index = 0;
  for (const auto& [key, rows] : curves) {
    const char* color = kPalette[index % std::size(kPalette)];
    const bool vqe = key.second == Method::VQE;
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.8\"" << (vqe ? " stroke-dasharray=\"6 3\"" : "")
        << " points=\"";
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k > 0) svg << ' ';
      svg << sx(rows[k]->gamma) << ',' << sy(value(*rows[k]));
    }
    svg << "\"/>\n";
    const double ly = kTop + 10 + 18 * static_cast<double>(index);
    const double lx = kLeft + plot_w + 15;
    svg << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 24
        << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"1.8\""
        << (vqe ? " stroke-dasharray=\"6 3\"" : "") << "/>"
        << "<text x=\"" << lx + 30 << "\" y=\"" << ly + 4 << "\">n=" << key.first
        << ' ' << to_string(key.second) << "</text>\n";
    ++index;
  }
  svg << "</svg>\n";
  return svg.str();
}

void render_svg(const SweepResult& result, Quantity quantity,
                const std::filesystem::path& path) {
  write_file(path, to_svg(result, quantity));
}

ComparisonSummary compare(const SweepResult& result) {
  struct Pair {
    const SweepRow* exact = nullptr;
    const SweepRow* vqe = nullptr;
  };
  std::map<std::pair<std::size_t, double>, Pair> points;
  for (const auto& r : result.rows) {
    auto& slot = points[{r.n, r.gamma}];
    const SweepRow*& target = r.method == Method::VQE ? slot.vqe : slot.exact;
    if (r.method == Method::BOTH || target != nullptr) {
      throw DomainError("compare: duplicate or invalid row at n=" +
                        std::to_string(r.n) + " gamma=" + format_full(r.gamma));
    }
    target = &r;
  }
  if (points.empty()) throw DomainError("compare: empty result");

  ComparisonSummary summary;
  std::map<std::size_t, ComparisonRow> per_n;
  for (const auto& [key, pair] : points) {
    if (!pair.exact || !pair.vqe) {
      throw DomainError("compare: grid mismatch at n=" +
                        std::to_string(key.first) + " gamma=" +
                        format_full(key.second) + " (needs both methods)");
    }
    const double dmx = std::abs(pair.vqe->mx - pair.exact->mx);
    const double de = std::hypot(pair.vqe->energy_re - pair.exact->energy_re,
                                 pair.vqe->energy_im - pair.exact->energy_im);
    auto& row = per_n[key.first];
    row.n = key.first;
    ++row.points;
    row.max_mx_deviation = std::max(row.max_mx_deviation, dmx);
    row.mean_mx_deviation += dmx;
    row.max_energy_deviation = std::max(row.max_energy_deviation, de);
    row.mean_energy_deviation += de;
  }
  for (auto& [n, row] : per_n) {
    row.mean_mx_deviation /= static_cast<double>(row.points);
    row.mean_energy_deviation /= static_cast<double>(row.points);
    summary.max_mx_deviation =
        std::max(summary.max_mx_deviation, row.max_mx_deviation);
    summary.rows.push_back(row);
  }
  return summary;
}

std::string ComparisonSummary::to_string() const {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%4s %7s %12s %12s %12s %12s\n", "n",
                "points", "max|dMx|", "mean|dMx|", "max|dE|", "mean|dE|");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof(line), "%4zu %7zu %12.4e %12.4e %12.4e %12.4e\n",
                  r.n, r.points, r.max_mx_deviation, r.mean_mx_deviation,
                  r.max_energy_deviation, r.mean_energy_deviation);
    out << line;
  }
  return out.str();
}

Peak find_peak(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw DimensionError("find_peak: need equal, non-empty x and y");
  }
  const auto k = static_cast<std::size_t>(
      std::max_element(ys.begin(), ys.end()) - ys.begin());
  if (k == 0 || k + 1 == ys.size()) return {xs[k], ys[k], false};
  const double x0 = xs[k - 1], x1 = xs[k], x2 = xs[k + 1];
  const double y0 = ys[k - 1], y1 = ys[k], y2 = ys[k + 1];
  // Lagrange parabola through the three points.
  const double d0 = (x0 - x1) * (x0 - x2);
  const double d1 = (x1 - x0) * (x1 - x2);
  const double d2 = (x2 - x0) * (x2 - x1);
  const double a = y0 / d0 + y1 / d1 + y2 / d2;
  const double b = -(y0 * (x1 + x2) / d0 + y1 * (x0 + x2) / d1 +
                     y2 * (x0 + x1) / d2);
  const double c = y0 * x1 * x2 / d0 + y1 * x0 * x2 / d1 + y2 * x0 * x1 / d2;
  if (!(a < 0.0)) return {x1, y1, true};
  const double xv = -b / (2.0 * a);
  return {xv, c - b * b / (4.0 * a), true};
}

}  // namespace nhvqe
