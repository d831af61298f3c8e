#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "cloud_oracle.hpp"
#include "svg_inspect.hpp"
#include "test_util.hpp"
#include "vadarc/viz.hpp"

namespace {

using vadarc::ChapterScore;
using vadarc_test::count_occurrences;

ChapterScore scored(int index, double v, double a, double d) {
  return {index, vadarc::VadScores{v, a, d}, 10, 5};
}

std::vector<ChapterScore> full_scores(int n) {
  std::vector<ChapterScore> s;
  for (int i = 1; i <= n; ++i) s.push_back(scored(i, 0.05 * i, 1.0 - 0.04 * i, 0.5));
  return s;
}

TEST(TrajectoryChart, ThreeScoredChapters) {
  const std::string svg = vadarc::render_trajectory_chart(full_scores(3));
  const auto series = vadarc_test::chart_series(svg);
  ASSERT_EQ(series.size(), 3u);
  for (const char* dim : {"valence", "arousal", "dominance"}) {
    ASSERT_EQ(series.at(dim).size(), 1u) << dim;
    EXPECT_EQ(series.at(dim)[0].size(), 3u);
  }
  EXPECT_EQ(count_occurrences(svg, "<polyline"), 3u);
  EXPECT_EQ(vadarc_test::view_box(svg), (std::vector<double>{0, 0, 900, 500}));
}

TEST(TrajectoryChart, GapSplitsIntoMarkers) {
  auto s = full_scores(3);
  s[1].means.reset();
  const std::string svg = vadarc::render_trajectory_chart(s);
  const auto series = vadarc_test::chart_series(svg);
  for (const auto& [dim, segments] : series) {
    ASSERT_EQ(segments.size(), 2u) << dim;
    EXPECT_EQ(segments[0].size(), 1u);
    EXPECT_EQ(segments[1].size(), 1u);
  }
  EXPECT_EQ(count_occurrences(svg, "<polyline"), 0u);
  EXPECT_EQ(count_occurrences(svg, "<circle"), 3u * 2);
}

TEST(TrajectoryChart, NineteenTicks) {
  const std::string svg = vadarc::render_trajectory_chart(full_scores(19));
  EXPECT_EQ(count_occurrences(svg, "class=\"tick\""), 19u);
  EXPECT_EQ(count_occurrences(svg, "class=\"tick-label\""), 19u);
  for (int i = 1; i <= 19; ++i) {
    EXPECT_NE(svg.find(">" + std::to_string(i) + "</text>"), std::string::npos) << i;
  }
}

TEST(TrajectoryChart, YAxisFixedToUnitRange) {
  // The same point value maps to the same y whatever the other chapters contain.
  auto a = vadarc::render_trajectory_chart({scored(1, 0.5, 0.5, 0.5), scored(2, 0.6, 0.6, 0.6)});
  auto b = vadarc::render_trajectory_chart({scored(1, 0.5, 0.5, 0.5), scored(2, 0.9, 0.9, 0.9)});
  const double ya = vadarc_test::chart_series(a).at("valence")[0][0].second;
  const double yb = vadarc_test::chart_series(b).at("valence")[0][0].second;
  EXPECT_EQ(ya, yb);
  EXPECT_DOUBLE_EQ(ya, 500 - 60 - (500 - 60 - 50) * 0.5);
}

TEST(TrajectoryChart, Errors) {
  EXPECT_THROW(vadarc::render_trajectory_chart({}), vadarc::Error);
  EXPECT_THROW(vadarc::render_trajectory_chart({{1, std::nullopt, 0, 0}}), vadarc::Error);
  EXPECT_THROW(vadarc::render_trajectory_chart({scored(1, .1, .1, .1), scored(1, .2, .2, .2)}),
               vadarc::InvariantError);
}

TEST(TrajectoryChartProperty, WellFormedMonotonicInBounds) {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<ChapterScore> s;
    int index = 0;
    for (int n = static_cast<int>(rng() % 25) + 1; n > 0; --n) {
      index += static_cast<int>(rng() % 3) + 1;
      if (rng() % 4 == 0) {
        s.push_back({index, std::nullopt, 4, 0});
      } else {
        s.push_back(scored(index, unit(rng), unit(rng), unit(rng)));
      }
    }
    if (!std::any_of(s.begin(), s.end(), [](auto& c) { return c.means.has_value(); })) {
      s.push_back(scored(index + 1, 0, 1, 0.5));
    }
    std::shuffle(s.begin(), s.end(), rng);
    const std::string svg = vadarc::render_trajectory_chart(s);
    ASSERT_TRUE(vadarc_test::well_formed_xml(svg));
    std::size_t scored_count = 0;
    for (const auto& c : s) scored_count += c.means.has_value();
    for (const auto& [dim, segments] : vadarc_test::chart_series(svg)) {
      EXPECT_EQ(vadarc_test::point_count(segments), scored_count);
      double last_x = -1;
      for (const auto& seg : segments) {
        for (const auto& [x, y] : seg) {
          EXPECT_GT(x, last_x);
          last_x = x;
          EXPECT_GE(x, 0);
          EXPECT_LE(x, 900);
          EXPECT_GE(y, 50 - 1e-9);
          EXPECT_LE(y, 440 + 1e-9);
        }
      }
    }
  }
}

TEST(WordCloud, SingletonCenteredAtMaxFont) {
  auto table = vadarc::frequency_table({{"good", "good"}});
  const auto layout = vadarc::layout_word_cloud(table);
  ASSERT_EQ(layout.placed.size(), 1u);
  const auto& w = layout.placed[0];
  EXPECT_EQ(w.font_size, 64);
  EXPECT_NEAR(w.x + w.box_width / 2, 400, 1e-9);
  EXPECT_NEAR(w.y + w.box_height / 2, 300, 1e-9);
  EXPECT_DOUBLE_EQ(w.box_width, 0.6 * 64 * 4);
  EXPECT_DOUBLE_EQ(w.box_height, 1.2 * 64);
}

TEST(WordCloud, FontScalesWithSqrtCount) {
  auto table = vadarc::frequency_table({vadarc::Tokens(100, "big"), vadarc::Tokens(25, "mid"),
                                        vadarc::Tokens(1, "low")});
  const auto layout = vadarc::layout_word_cloud(table);
  ASSERT_EQ(layout.placed.size(), 3u);
  EXPECT_DOUBLE_EQ(layout.placed[0].font_size, 64);
  EXPECT_DOUBLE_EQ(layout.placed[1].font_size, 10 + 54 * (5.0 - 1) / (10 - 1));
  EXPECT_DOUBLE_EQ(layout.placed[2].font_size, 10);
}

TEST(WordCloud, SameSeedSameLayoutDifferentSeedMoves) {
  std::mt19937 rng(41);
  const auto table = vadarc_test::random_table(rng, 40);
  vadarc::CloudOptions opt;
  opt.seed = 7;
  const auto a = vadarc::layout_word_cloud(table, opt);
  const auto b = vadarc::layout_word_cloud(table, opt);
  EXPECT_EQ(a, b);
  EXPECT_EQ(vadarc::render_word_cloud(a), vadarc::render_word_cloud(b));
  opt.seed = 8;
  EXPECT_NE(vadarc::layout_word_cloud(table, opt).placed, a.placed);
}

TEST(WordCloud, FiftyWordsNoOverlap) {
  std::mt19937 rng(43);
  vadarc::FrequencyTable table;
  for (int i = 0; i < 50; ++i) table.add(vadarc::Tokens(50 - i, "word" + std::to_string(i)));
  const auto layout = vadarc::layout_word_cloud(table);
  EXPECT_EQ(layout.placed.size() + layout.skipped.size(), 50u);
  const auto check = vadarc_test::check_layout(layout);
  EXPECT_EQ(check.overlapping_pairs, 0u);
  EXPECT_EQ(check.outside_canvas, 0u);
}

TEST(WordCloud, MaxWordsLimitsSelection) {
  vadarc::FrequencyTable table;
  for (int i = 0; i < 30; ++i) table.add(vadarc::Tokens(i + 1, "w" + std::to_string(i)));
  vadarc::CloudOptions opt;
  opt.max_words = 5;
  const auto layout = vadarc::layout_word_cloud(table, opt);
  EXPECT_EQ(layout.placed.size() + layout.skipped.size(), 5u);
  EXPECT_EQ(layout.placed[0].token, "w29");
}

TEST(WordCloud, CanvasTooSmall) {
  vadarc::CloudOptions opt;
  opt.canvas_width = 50;
  opt.canvas_height = 50;
  try {
    vadarc::layout_word_cloud(vadarc::frequency_table({{"enormous"}}), opt);
    FAIL();
  } catch (const vadarc::Error& e) {
    EXPECT_NE(std::string(e.what()).find("canvas too small"), std::string::npos);
  }
  EXPECT_THROW(vadarc::layout_word_cloud({}), vadarc::Error);
  opt = {};
  opt.max_words = 0;
  EXPECT_THROW(vadarc::layout_word_cloud(vadarc::frequency_table({{"a"}}), opt), vadarc::Error);
}

TEST(WordCloud, CrowdedCanvasSkipsInsteadOfOverlapping) {
  vadarc::FrequencyTable table;
  for (int i = 0; i < 60; ++i) table.add(vadarc::Tokens(60 - i, "longerword" + std::to_string(i)));
  vadarc::CloudOptions opt;
  opt.canvas_width = 300;
  opt.canvas_height = 200;
  opt.max_font = 24;
  const auto layout = vadarc::layout_word_cloud(table, opt);
  EXPECT_FALSE(layout.skipped.empty());
  EXPECT_EQ(vadarc_test::check_layout(layout).overlapping_pairs, 0u);
  EXPECT_EQ(vadarc_test::check_layout(layout).outside_canvas, 0u);
}

TEST(RenderWordCloud, TextElementsAndEscaping) {
  auto layout = vadarc::layout_word_cloud(vadarc::frequency_table({{"a&b", "a&b", "c<d", "ok"}}));
  const std::string svg = vadarc::render_word_cloud(layout);
  EXPECT_EQ(count_occurrences(svg, "<text"), 3u);
  EXPECT_NE(svg.find("a&amp;b"), std::string::npos);
  EXPECT_NE(svg.find("c&lt;d"), std::string::npos);
  EXPECT_TRUE(vadarc_test::well_formed_xml(svg));
}

TEST(RenderWordCloud, EmptyLayoutIsValidSvg) {
  vadarc::CloudLayout empty;
  empty.canvas_width = 100;
  empty.canvas_height = 80;
  const std::string svg = vadarc::render_word_cloud(empty);
  EXPECT_EQ(count_occurrences(svg, "<text"), 0u);
  EXPECT_TRUE(vadarc_test::well_formed_xml(svg));
}

std::vector<vadarc::CloudLayout> small_layouts(std::size_t n) {
  std::vector<vadarc::CloudLayout> out;
  vadarc::CloudOptions opt;
  opt.canvas_width = 200;
  opt.canvas_height = 150;
  opt.max_font = 30;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(vadarc::layout_word_cloud(
        vadarc::frequency_table({{"chapter", "word" + std::to_string(i), "word" + std::to_string(i)}}),
        opt));
  }
  return out;
}

std::vector<std::string> captions(std::size_t n) {
  std::vector<std::string> c;
  for (std::size_t i = 1; i <= n; ++i) c.push_back("Chapter " + std::to_string(i));
  return c;
}

TEST(CloudGrid, NineteenInFourColumns) {
  const std::string svg = vadarc::render_cloud_grid(small_layouts(19), captions(19), 4);
  ASSERT_TRUE(vadarc_test::well_formed_xml(svg));
  EXPECT_EQ(count_occurrences(svg, "class=\"cell\""), 19u);
  EXPECT_EQ(count_occurrences(svg, "data-row=\"4\""), 3u);
  EXPECT_EQ(count_occurrences(svg, "data-row=\"5\""), 0u);
  EXPECT_EQ(count_occurrences(svg, "data-col=\"3\""), 4u);
  EXPECT_NE(svg.find(">Chapter 19</text>"), std::string::npos);
  EXPECT_EQ(vadarc_test::view_box(svg), (std::vector<double>{0, 0, 4 * 200, 5 * (150 + 28)}));
}

TEST(CloudGrid, OneAndZeroLayouts) {
  const std::string one = vadarc::render_cloud_grid(small_layouts(1), captions(1), 4);
  EXPECT_EQ(count_occurrences(one, "class=\"cell\""), 1u);
  EXPECT_TRUE(vadarc_test::well_formed_xml(one));
  const std::string none = vadarc::render_cloud_grid({}, {}, 4);
  EXPECT_EQ(count_occurrences(none, "class=\"cell\""), 0u);
  EXPECT_TRUE(vadarc_test::well_formed_xml(none));
  EXPECT_THROW(vadarc::render_cloud_grid({}, {}, 0), vadarc::Error);
}

}  // namespace
