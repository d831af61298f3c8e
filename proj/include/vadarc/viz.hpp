#pragma once

// Standalone SVG 1.1 output: the VAD trajectory chart and spiral-placed word clouds.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "vadarc/analytics.hpp"
#include "vadarc/error.hpp"
#include "vadarc/lexicon.hpp"
#include "vadarc/utf8.hpp"

namespace vadarc::svg {

inline std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

// Fixed two-decimal coordinates keep output diffable and independent of locale.
inline std::string num(double v) {
  ensure(std::isfinite(v), "non-finite SVG coordinate");
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

inline std::string open_document(double width, double height) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) +
         "\">\n";
}

inline constexpr std::string_view kCloseDocument = "</svg>\n";

}  // namespace vadarc::svg

namespace vadarc {

struct ChartSpec {
  double width = 900;
  double height = 500;
  double margin_left = 70;
  double margin_right = 140;
  double margin_top = 50;
  double margin_bottom = 60;
  std::array<std::string, 3> palette = {"#1f77b4", "#d62728", "#2ca02c"};
  std::string title = "Emotional trajectory of dialogue";
  std::string x_label = "Chapter";
  std::string y_label = "Mean score";
};

// One polyline per run of consecutive scored chapters; a run of one is drawn as a marker.
// The y-axis is fixed to [0,1].
inline std::string render_trajectory_chart(std::vector<ChapterScore> scores,
                                           const ChartSpec& spec = {}) {
  std::sort(scores.begin(), scores.end(),
            [](const ChapterScore& a, const ChapterScore& b) { return a.chapter_index < b.chapter_index; });
  for (std::size_t i = 1; i < scores.size(); ++i) {
    ensure(scores[i].chapter_index != scores[i - 1].chapter_index,
           "duplicate chapter index in trajectory input");
  }
  if (std::none_of(scores.begin(), scores.end(), [](const auto& s) { return s.means.has_value(); })) {
    throw Error("no scored chapters: nothing to chart");
  }

  const double plot_left = spec.margin_left;
  const double plot_right = spec.width - spec.margin_right;
  const double plot_top = spec.margin_top;
  const double plot_bottom = spec.height - spec.margin_bottom;
  ensure(plot_right > plot_left && plot_bottom > plot_top, "chart margins exceed chart size");

  const int first = scores.front().chapter_index;
  const int last = scores.back().chapter_index;
  auto x_of = [&](int chapter) {
    if (first == last) return (plot_left + plot_right) / 2;
    return plot_left + (plot_right - plot_left) * (chapter - first) / double(last - first);
  };
  auto y_of = [&](double v) { return plot_bottom - (plot_bottom - plot_top) * v; };

  using svg::num;
  std::string out = svg::open_document(spec.width, spec.height);
  out += "  <rect x=\"0\" y=\"0\" width=\"" + num(spec.width) + "\" height=\"" + num(spec.height) +
         "\" fill=\"#ffffff\"/>\n";
  out += "  <text x=\"" + num(spec.width / 2) + "\" y=\"" + num(spec.margin_top / 2) +
         "\" font-family=\"sans-serif\" font-size=\"18\" text-anchor=\"middle\">" +
         svg::escape(spec.title) + "</text>\n";

  out += "  <g class=\"y-axis\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double v = i / 5.0;
    const double y = y_of(v);
    out += "    <line x1=\"" + num(plot_left) + "\" y1=\"" + num(y) + "\" x2=\"" + num(plot_right) +
           "\" y2=\"" + num(y) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out += "    <text x=\"" + num(plot_left - 8) + "\" y=\"" + num(y + 4) +
           "\" text-anchor=\"end\">" + num(v) + "</text>\n";
  }
  out += "    <text x=\"" + num(plot_left - 48) + "\" y=\"" + num((plot_top + plot_bottom) / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 " + num(plot_left - 48) + " " +
         num((plot_top + plot_bottom) / 2) + ")\">" + svg::escape(spec.y_label) + "</text>\n";
  out += "  </g>\n";

  out += "  <g class=\"x-axis\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out += "    <line x1=\"" + num(plot_left) + "\" y1=\"" + num(plot_bottom) + "\" x2=\"" +
         num(plot_right) + "\" y2=\"" + num(plot_bottom) + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  for (const auto& s : scores) {
    const double x = x_of(s.chapter_index);
    out += "    <line class=\"tick\" x1=\"" + num(x) + "\" y1=\"" + num(plot_bottom) + "\" x2=\"" +
           num(x) + "\" y2=\"" + num(plot_bottom + 5) + "\" stroke=\"#333333\"/>\n";
    out += "    <text class=\"tick-label\" x=\"" + num(x) + "\" y=\"" + num(plot_bottom + 18) +
           "\" text-anchor=\"middle\">" + std::to_string(s.chapter_index) + "</text>\n";
  }
  out += "    <text x=\"" + num((plot_left + plot_right) / 2) + "\" y=\"" +
         num(spec.height - spec.margin_bottom / 4) + "\" text-anchor=\"middle\">" +
         svg::escape(spec.x_label) + "</text>\n";
  out += "  </g>\n";

  for (std::size_t d = 0; d < kDimensions.size(); ++d) {
    const Dimension dim = kDimensions[d];
    const std::string& color = spec.palette[d];
    out += "  <g class=\"series\" data-dimension=\"" + std::string(dimension_name(dim)) +
           "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"2\">\n";
    std::vector<std::pair<double, double>> run;
    auto flush = [&] {
      if (run.size() == 1) {
        out += "    <circle cx=\"" + num(run[0].first) + "\" cy=\"" + num(run[0].second) +
               "\" r=\"3.5\" fill=\"" + color + "\"/>\n";
      } else if (run.size() > 1) {
        out += "    <polyline points=\"";
        for (std::size_t i = 0; i < run.size(); ++i) {
          if (i) out += ' ';
          out += num(run[i].first) + "," + num(run[i].second);
        }
        out += "\"/>\n";
      }
      run.clear();
    };
    for (const auto& s : scores) {
      if (!s.means) {
        flush();
        continue;
      }
      const double v = component(*s.means, dim);
      ensure(v >= 0.0 && v <= 1.0, "chart value outside [0,1]");
      run.emplace_back(x_of(s.chapter_index), y_of(v));
    }
    flush();
    out += "  </g>\n";
  }

  out += "  <g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t d = 0; d < kDimensions.size(); ++d) {
    const double y = plot_top + 20.0 * static_cast<double>(d) + 10;
    const double x = plot_right + 20;
    out += "    <line x1=\"" + num(x) + "\" y1=\"" + num(y) + "\" x2=\"" + num(x + 24) + "\" y2=\"" +
           num(y) + "\" stroke=\"" + spec.palette[d] + "\" stroke-width=\"2\"/>\n";
    out += "    <text x=\"" + num(x + 30) + "\" y=\"" + num(y + 4) + "\">" +
           std::string(dimension_name(kDimensions[d])) + "</text>\n";
  }
  out += "  </g>\n";
  out += svg::kCloseDocument;
  return out;
}

struct PlacedWord {
  std::string token;
  std::size_t count = 0;
  double font_size = 0;
  double x = 0;  // top-left corner of the box
  double y = 0;
  double box_width = 0;
  double box_height = 0;

  friend bool operator==(const PlacedWord&, const PlacedWord&) = default;
};

struct CloudLayout {
  double canvas_width = 0;
  double canvas_height = 0;
  std::uint64_t seed = 0;
  std::vector<PlacedWord> placed;
  std::vector<std::string> skipped;  // words that found no free spot

  friend bool operator==(const CloudLayout&, const CloudLayout&) = default;
};

struct CloudOptions {
  std::size_t max_words = 100;
  double canvas_width = 800;
  double canvas_height = 600;
  double min_font = 10;
  double max_font = 64;
  std::uint64_t seed = 0;
};

// Box metrics assume an average glyph width of 0.6 em and a line height of 1.2 em.
inline double estimated_box_width(std::string_view token, double font_size) {
  return 0.6 * font_size * static_cast<double>(utf8::length(token));
}
inline double estimated_box_height(double font_size) { return 1.2 * font_size; }

inline bool boxes_overlap(const PlacedWord& a, const PlacedWord& b) {
  return a.x < b.x + b.box_width && b.x < a.x + a.box_width && a.y < b.y + b.box_height &&
         b.y < a.y + a.box_height;
}

// Places the top words largest first, each walking an Archimedean spiral out from the canvas
// centre (random starting angle per word) until its box is inside the canvas and clear of all
// earlier boxes. Font size is linear in sqrt(count) across the selected words.
inline CloudLayout layout_word_cloud(const FrequencyTable& table, const CloudOptions& options = {}) {
  if (table.empty()) throw Error("word cloud needs at least one word");
  if (options.max_words < 1) throw Error("word cloud max_words must be at least 1");
  if (!(options.min_font > 0 && options.max_font >= options.min_font)) {
    throw Error("word cloud font range must satisfy 0 < min_font <= max_font");
  }

  CloudLayout layout;
  layout.canvas_width = options.canvas_width;
  layout.canvas_height = options.canvas_height;
  layout.seed = options.seed;

  const auto words = top_n(table, options.max_words);
  const double hi = std::sqrt(static_cast<double>(words.front().second));
  const double lo = std::sqrt(static_cast<double>(words.back().second));

  std::mt19937_64 rng(options.seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  constexpr double kTurnSpacing = 4.0;  // px between successive spiral turns
  constexpr double kStep = 3.0;         // px of arc between candidates
  const double a = kTurnSpacing / (2 * std::numbers::pi);
  const double cx = options.canvas_width / 2;
  const double cy = options.canvas_height / 2;
  const double r_max = std::hypot(options.canvas_width, options.canvas_height) / 2;

  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& [token, count] = words[i];
    const double start_angle = unit() * 2 * std::numbers::pi;
    double font = options.max_font;
    if (hi > lo) {
      font = options.min_font +
             (options.max_font - options.min_font) * (std::sqrt(double(count)) - lo) / (hi - lo);
    }
    PlacedWord box{token, count, font, 0, 0, estimated_box_width(token, font),
                   estimated_box_height(font)};

    if (box.box_width > options.canvas_width || box.box_height > options.canvas_height) {
      if (i == 0) {
        throw Error("canvas too small: '" + token + "' needs " + svg::num(box.box_width) + "x" +
                    svg::num(box.box_height) + " px");
      }
      layout.skipped.push_back(token);
      continue;
    }

    bool placed = false;
    for (double t = 0;;) {
      const double r = a * t;
      if (r > r_max) break;
      box.x = cx + r * std::cos(start_angle + t) - box.box_width / 2;
      box.y = cy + r * std::sin(start_angle + t) - box.box_height / 2;
      const bool inside = box.x >= 0 && box.y >= 0 && box.x + box.box_width <= options.canvas_width &&
                          box.y + box.box_height <= options.canvas_height;
      if (inside && std::none_of(layout.placed.begin(), layout.placed.end(),
                                 [&](const PlacedWord& p) { return boxes_overlap(p, box); })) {
        placed = true;
        break;
      }
      t += std::min(0.5, kStep / std::max(r, 1.0));
    }
    if (placed) {
      layout.placed.push_back(box);
    } else {
      layout.skipped.push_back(token);
    }
  }
  return layout;
}

namespace detail {

inline constexpr std::array<std::string_view, 8> kCloudPalette = {
    "#1b4f72", "#922b21", "#196f3d", "#7d6608", "#6c3483", "#0e6655", "#a04000", "#283747"};

inline std::string cloud_body(const CloudLayout& layout, std::string_view indent) {
  using svg::num;
  std::string out;
  for (std::size_t i = 0; i < layout.placed.size(); ++i) {
    const auto& w = layout.placed[i];
    out += std::string(indent) + "<text x=\"" + num(w.x + w.box_width / 2) + "\" y=\"" +
           num(w.y + w.box_height / 2) + "\" font-size=\"" + num(w.font_size) + "\" fill=\"" +
           std::string(kCloudPalette[i % kCloudPalette.size()]) + "\">" + svg::escape(w.token) +
           "</text>\n";
  }
  return out;
}

}  // namespace detail

inline std::string render_word_cloud(const CloudLayout& layout) {
  using svg::num;
  const double w = std::max(layout.canvas_width, 1.0);
  const double h = std::max(layout.canvas_height, 1.0);
  std::string out = svg::open_document(w, h);
  out += "  <rect x=\"0\" y=\"0\" width=\"" + num(w) + "\" height=\"" + num(h) +
         "\" fill=\"#ffffff\"/>\n";
  out += "  <g font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
  out += detail::cloud_body(layout, "    ");
  out += "  </g>\n";
  out += svg::kCloseDocument;
  return out;
}

// Tiles clouds row-major, `columns` per row, each cell captioned.
inline std::string render_cloud_grid(const std::vector<CloudLayout>& layouts,
                                     const std::vector<std::string>& captions, std::size_t columns) {
  if (columns < 1) throw Error("cloud grid needs at least one column");
  ensure(captions.size() == layouts.size(), "one caption per cloud required");
  using svg::num;

  constexpr double kCaption = 28;
  double cell_w = 1, cell_h = 1;
  for (const auto& l : layouts) {
    cell_w = std::max(cell_w, l.canvas_width);
    cell_h = std::max(cell_h, l.canvas_height);
  }
  const std::size_t rows = (layouts.size() + columns - 1) / columns;
  const std::size_t cols = std::min(columns, std::max<std::size_t>(layouts.size(), 1));
  const double width = layouts.empty() ? 1 : cell_w * static_cast<double>(cols);
  const double height = layouts.empty() ? 1 : (cell_h + kCaption) * static_cast<double>(rows);

  std::string out = svg::open_document(width, height);
  out += "  <rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" fill=\"#ffffff\"/>\n";
  for (std::size_t i = 0; i < layouts.size(); ++i) {
    const std::size_t row = i / columns;
    const std::size_t col = i % columns;
    const double ox = cell_w * static_cast<double>(col);
    const double oy = (cell_h + kCaption) * static_cast<double>(row);
    out += "  <g class=\"cell\" data-row=\"" + std::to_string(row) + "\" data-col=\"" +
           std::to_string(col) + "\" transform=\"translate(" + num(ox) + " " + num(oy) + ")\">\n";
    out += "    <rect x=\"0\" y=\"0\" width=\"" + num(cell_w) + "\" height=\"" +
           num(cell_h + kCaption) + "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
    out += "    <text class=\"caption\" x=\"" + num(cell_w / 2) + "\" y=\"20\" font-family=\"sans-serif\" "
           "font-size=\"16\" text-anchor=\"middle\">" + svg::escape(captions[i]) + "</text>\n";
    out += "    <g transform=\"translate(" + num((cell_w - layouts[i].canvas_width) / 2) + " " +
           num(kCaption) + ")\" font-family=\"sans-serif\" text-anchor=\"middle\" "
           "dominant-baseline=\"central\">\n";
    out += detail::cloud_body(layouts[i], "      ");
    out += "    </g>\n  </g>\n";
  }
  out += svg::kCloseDocument;
  return out;
}

}  // namespace vadarc
