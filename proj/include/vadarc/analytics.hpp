#pragma once

// Word frequencies, top-N lists and per-dimension peak/trough chapters.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vadarc/error.hpp"
#include "vadarc/lexicon.hpp"
#include "vadarc/preprocess.hpp"

namespace vadarc {

struct FrequencyTable {
  std::map<std::string, std::size_t> counts;
  std::size_t total = 0;

  void add(const Tokens& tokens) {
    for (const auto& t : tokens) ++counts[t];
    total += tokens.size();
  }

  void merge(const FrequencyTable& other) {
    for (const auto& [token, n] : other.counts) counts[token] += n;
    total += other.total;
  }

  bool empty() const { return counts.empty(); }
  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;
};

inline FrequencyTable frequency_table(const std::vector<Tokens>& token_lists) {
  FrequencyTable table;
  for (const auto& tokens : token_lists) table.add(tokens);
  return table;
}

using WordCount = std::pair<std::string, std::size_t>;

// Descending by count, ties in ascending token order.
inline std::vector<WordCount> top_n(const FrequencyTable& table, std::size_t n) {
  if (n < 1) throw Error("top_n: n must be at least 1");
  std::vector<WordCount> all(table.counts.begin(), table.counts.end());
  auto by_rank = [](const WordCount& a, const WordCount& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  };
  const std::size_t k = std::min(n, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k), all.end(), by_rank);
  all.resize(k);
  return all;
}

inline std::string format_freq_csv(const FrequencyTable& table) {
  std::string out = "token,count\n";
  if (table.empty()) return out;
  for (const auto& [token, n] : top_n(table, table.counts.size())) {
    csv::append_record(out, {token, std::to_string(n)});
  }
  return out;
}

enum class Dimension { valence, arousal, dominance };

inline constexpr std::array<Dimension, 3> kDimensions = {Dimension::valence, Dimension::arousal,
                                                         Dimension::dominance};

inline std::string_view dimension_name(Dimension d) {
  switch (d) {
    case Dimension::valence: return "valence";
    case Dimension::arousal: return "arousal";
    case Dimension::dominance: return "dominance";
  }
  return "?";
}

inline double component(const VadScores& s, Dimension d) {
  switch (d) {
    case Dimension::valence: return s.valence;
    case Dimension::arousal: return s.arousal;
    case Dimension::dominance: return s.dominance;
  }
  return 0.0;
}

struct ChapterValue {
  int chapter_index = 0;
  double value = 0.0;
  friend bool operator==(const ChapterValue&, const ChapterValue&) = default;
};

struct ExtremeReport {
  Dimension dimension = Dimension::valence;
  std::vector<ChapterValue> top;     // descending
  std::vector<ChapterValue> bottom;  // ascending
};

// Top-k and bottom-k chapters by mean; equal values rank the lower chapter index first.
inline ExtremeReport find_extremes(const std::vector<ChapterScore>& scores, Dimension dimension,
                                   std::size_t k = 3) {
  if (k < 1) throw Error("find_extremes: k must be at least 1");
  std::vector<ChapterValue> values;
  for (const auto& s : scores) {
    if (s.means) values.push_back({s.chapter_index, component(*s.means, dimension)});
  }
  if (values.empty()) {
    throw Error("no scored chapters: cannot rank " + std::string(dimension_name(dimension)));
  }
  const std::size_t n = std::min(k, values.size());

  ExtremeReport report;
  report.dimension = dimension;
  auto desc = values;
  std::stable_sort(desc.begin(), desc.end(), [](const ChapterValue& a, const ChapterValue& b) {
    return a.value != b.value ? a.value > b.value : a.chapter_index < b.chapter_index;
  });
  report.top.assign(desc.begin(), desc.begin() + static_cast<std::ptrdiff_t>(n));

  auto asc = values;
  std::stable_sort(asc.begin(), asc.end(), [](const ChapterValue& a, const ChapterValue& b) {
    return a.value != b.value ? a.value < b.value : a.chapter_index < b.chapter_index;
  });
  report.bottom.assign(asc.begin(), asc.begin() + static_cast<std::ptrdiff_t>(n));
  return report;
}

inline std::string format_extremes(const std::vector<ChapterScore>& scores, std::size_t k) {
  std::string out;
  for (Dimension d : kDimensions) {
    const std::string name(dimension_name(d));
    out += name + '\n';
    bool any = false;
    for (const auto& s : scores) any = any || s.means.has_value();
    if (!any) {
      out += "  no scored chapters\n";
      continue;
    }
    const auto report = find_extremes(scores, d, k);
    auto list = [&](std::string_view label, const std::vector<ChapterValue>& items) {
      out += "  ";
      out += label;
      out += ':';
      for (std::size_t i = 0; i < items.size(); ++i) {
        out += i ? ", " : " ";
        out += "chapter " + std::to_string(items[i].chapter_index) + " (" +
               format_number(items[i].value) + ")";
      }
      out += '\n';
    };
    list("high", report.top);
    list("low", report.bottom);
  }
  return out;
}

}  // namespace vadarc
