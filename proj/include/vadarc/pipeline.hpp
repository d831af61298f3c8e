#pragma once

// Stage-by-stage pipeline over an output directory. Every stage reads its inputs from the
// files the previous stage wrote, so `all` and the individual stage commands produce the
// same artifacts.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "vadarc/analytics.hpp"
#include "vadarc/corpus.hpp"
#include "vadarc/dialogue.hpp"
#include "vadarc/error.hpp"
#include "vadarc/io.hpp"
#include "vadarc/lexicon.hpp"
#include "vadarc/preprocess.hpp"
#include "vadarc/viz.hpp"

#ifndef VADARC_DATA_DIR
#define VADARC_DATA_DIR "data"
#endif

namespace vadarc {

namespace fs = std::filesystem;

inline fs::path default_data_dir() { return fs::path(VADARC_DATA_DIR); }

// Baseline list plus the extended list of high-frequency non-emotional words.
inline std::vector<fs::path> default_stopword_paths(const fs::path& data_dir = default_data_dir()) {
  return {data_dir / "stopwords" / "english_baseline.txt",
          data_dir / "stopwords" / "english_extended.txt"};
}

struct RunConfig {
  fs::path input_path;
  fs::path output_dir = "out";
  std::optional<std::string> heading_pattern;
  std::vector<std::string> quote_styles;  // empty: straight and typographic double quotes
  std::vector<fs::path> stopword_paths;   // empty: bundled defaults
  std::optional<fs::path> lexicon_path;
  bool rescale = false;
  std::size_t max_words = 100;
  double canvas_width = 800;
  double canvas_height = 600;
  std::uint64_t seed = 0;
  std::size_t k = 3;
  std::size_t grid_columns = 4;
};

struct RunReport {
  std::optional<std::size_t> chapters;
  std::optional<std::size_t> front_matter_bytes;
  std::optional<std::size_t> utterances;
  std::optional<std::size_t> dropped_unbalanced;
  std::optional<std::size_t> tokens_before_filtering;
  std::optional<std::size_t> tokens_after_filtering;
  std::vector<std::string> stopword_sources;
  std::optional<std::size_t> stopword_count;
  std::optional<std::size_t> lexicon_entries;
  std::optional<std::size_t> lexicon_skipped_phrases;
  std::vector<ChapterScore> chapter_scores;
  std::optional<ChapterScore> aggregate_score;
  std::optional<std::size_t> distinct_tokens;
  std::optional<std::size_t> frequency_total;
  std::optional<std::size_t> clouds_rendered;
  std::optional<std::size_t> cloud_words_skipped;
  std::size_t warnings = 0;
  std::vector<std::pair<std::string, double>> stage_seconds;
};

// Deterministic, counts only. Stage timings are reported separately so that repeated runs
// yield byte-identical report files.
inline std::string format_report(const RunReport& r) {
  std::string out;
  auto line = [&](std::string_view key, const std::optional<std::size_t>& v) {
    if (v) out += std::string(key) + ": " + std::to_string(*v) + "\n";
  };
  line("chapters", r.chapters);
  line("front_matter_bytes", r.front_matter_bytes);
  line("utterances", r.utterances);
  line("dropped_unbalanced_quotes", r.dropped_unbalanced);
  line("tokens_before_filtering", r.tokens_before_filtering);
  line("tokens_after_filtering", r.tokens_after_filtering);
  line("stopwords", r.stopword_count);
  for (const auto& s : r.stopword_sources) out += "stopword_source: " + s + "\n";
  line("lexicon_entries", r.lexicon_entries);
  line("lexicon_skipped_phrases", r.lexicon_skipped_phrases);
  for (const auto& s : r.chapter_scores) {
    out += "match_rate chapter " + std::to_string(s.chapter_index) + ": " +
           std::to_string(s.tokens_matched) + "/" + std::to_string(s.tokens_total) + " (" +
           (s.tokens_total ? format_number(s.match_rate()) : std::string("n/a")) + ")\n";
  }
  if (r.aggregate_score) {
    const auto& s = *r.aggregate_score;
    out += "match_rate all: " + std::to_string(s.tokens_matched) + "/" +
           std::to_string(s.tokens_total) + " (" +
           (s.tokens_total ? format_number(s.match_rate()) : std::string("n/a")) + ")\n";
  }
  line("distinct_tokens", r.distinct_tokens);
  line("frequency_total", r.frequency_total);
  line("clouds_rendered", r.clouds_rendered);
  line("cloud_words_skipped", r.cloud_words_skipped);
  out += "warnings: " + std::to_string(r.warnings) + "\n";
  return out;
}

inline std::string format_timings(const RunReport& r) {
  std::string out;
  for (const auto& [stage, secs] : r.stage_seconds) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", secs);
    out += "time " + stage + ": " + buf + " s\n";
  }
  return out;
}

struct OutputLayout {
  fs::path root;

  fs::path chapters() const { return root / "chapters"; }
  fs::path dialogues() const { return root / "dialogues"; }
  fs::path filtered() const { return root / "dialogues_filtered"; }
  fs::path clouds() const { return root / "clouds"; }
  fs::path full_dialogue() const { return root / "full_dialogue.txt"; }
  fs::path scores() const { return root / "scores.csv"; }
  fs::path extremes() const { return root / "extremes.txt"; }
  fs::path freq() const { return root / "freq.csv"; }
  fs::path trajectory() const { return root / "trajectory.svg"; }
  fs::path report() const { return root / "report.txt"; }
};

// Receives warnings and the per-stage summary lines.
struct Diagnostics {
  std::function<void(const std::string&)> warn = [](const std::string&) {};
  std::function<void(const std::string&)> info = [](const std::string&) {};
};

class Pipeline {
 public:
  Pipeline(RunConfig config, Diagnostics diagnostics = {})
      : config_(std::move(config)), diag_(std::move(diagnostics)), out_{config_.output_dir} {}

  const RunReport& report() const { return report_; }
  const OutputLayout& layout() const { return out_; }

  void split() {
    timed("split", [&] {
      if (config_.input_path.empty()) throw Error("split requires --input <file>");
      if (!fs::is_regular_file(config_.input_path)) {
        throw Error("input file not found: '" + config_.input_path.string() + "'");
      }
      const RawCorpus corpus =
          normalize_corpus(io::read_file(config_.input_path), config_.input_path.string());
      const HeadingPattern pattern =
          config_.heading_pattern ? HeadingPattern(*config_.heading_pattern) : HeadingPattern();
      SegmentResult seg = segment_chapters(corpus, pattern);
      forward(seg.warnings);
      io::ensure_directory(out_.chapters());
      remove_matching(out_.chapters(), kChapterFile);
      write_chapter_files(seg.chapters, out_.chapters());
      report_.chapters = seg.chapters.size();
      report_.front_matter_bytes = seg.front_matter_bytes;
      diag_.info("chapters: " + std::to_string(seg.chapters.size()));
    });
  }

  void extract() {
    timed("extract", [&] {
      const auto files = discover(out_.chapters(), kChapterFile, "split");
      QuoteConfig quotes;
      if (!config_.quote_styles.empty()) {
        quotes.styles.clear();
        for (const auto& spec : config_.quote_styles) quotes.styles.push_back(parse_quote_style(spec));
      }
      io::ensure_directory(out_.dialogues());
      remove_matching(out_.dialogues(), kDialogueFile);
      std::vector<fs::path> csvs;
      std::size_t utterances = 0;
      std::size_t dropped = 0;
      for (const auto& [index, path] : files) {
        const Chapter ch = read_chapter_file(path, index);
        ExtractResult res = extract_utterances(ch, quotes);
        forward(res.warnings);
        utterances += res.utterances.size();
        dropped += res.dropped_unbalanced;
        csvs.push_back(write_utterances_csv(res.utterances, out_.dialogues() / dialogue_csv_name(index)));
      }
      compile_full_dialogue(csvs, out_.full_dialogue());
      report_.chapters = files.size();
      report_.utterances = utterances;
      report_.dropped_unbalanced = dropped;
      diag_.info("utterances: " + std::to_string(utterances));
      diag_.info("dropped_unbalanced_quotes: " + std::to_string(dropped));
    });
  }

  void clean() {
    timed("clean", [&] {
      const auto files = discover(out_.dialogues(), kDialogueFile, "extract");
      const auto paths =
          config_.stopword_paths.empty() ? default_stopword_paths() : config_.stopword_paths;
      const StopwordSet stops = load_stopwords(paths);
      io::ensure_directory(out_.filtered());
      remove_matching(out_.filtered(), kFilteredFile);
      std::size_t before = 0;
      std::size_t after = 0;
      for (const auto& [index, path] : files) {
        std::vector<Tokens> lines;
        for (const auto& u : read_utterances_csv(path)) {
          if (u.chapter_index != index) {
            throw Error("'" + path.string() + "' holds a row for chapter " +
                        std::to_string(u.chapter_index));
          }
          PreprocessTrace t = trace_preprocess(u.text, stops);
          before += t.stripped.size();
          after += t.filtered.size();
          lines.push_back(std::move(t.filtered));
        }
        io::write_file(out_.filtered() / filtered_file_name(index), format_filtered(lines));
      }
      report_.stopword_sources = stops.sources;
      report_.stopword_count = stops.size();
      report_.tokens_before_filtering = before;
      report_.tokens_after_filtering = after;
      diag_.info("tokens_before_filtering: " + std::to_string(before));
      diag_.info("tokens_after_filtering: " + std::to_string(after));
    });
  }

  void score() {
    timed("score", [&] {
      if (!config_.lexicon_path) throw Error("score requires a lexicon (--lexicon <file>)");
      const auto chapters = load_filtered();
      const VadLexicon lexicon = load_vad_lexicon(*config_.lexicon_path, {config_.rescale});
      forward(lexicon.warnings);
      const CorpusScores scores = score_corpus(chapters, lexicon);
      io::write_file(out_.scores(), format_scores_csv(scores));
      io::write_file(out_.extremes(), format_extremes(scores.chapters, config_.k));
      report_.lexicon_entries = lexicon.size();
      report_.lexicon_skipped_phrases = lexicon.skipped_phrases;
      report_.chapter_scores = scores.chapters;
      report_.aggregate_score = scores.aggregate;
      diag_.info("lexicon_entries: " + std::to_string(lexicon.size()));
      diag_.info("tokens_matched: " + std::to_string(scores.aggregate.tokens_matched) + "/" +
                 std::to_string(scores.aggregate.tokens_total));
    });
  }

  void freq() {
    timed("freq", [&] {
      FrequencyTable table;
      for (const auto& ch : load_filtered()) table.merge(frequency_table(ch.utterances));
      io::write_file(out_.freq(), format_freq_csv(table));
      report_.distinct_tokens = table.counts.size();
      report_.frequency_total = table.total;
      diag_.info("distinct_tokens: " + std::to_string(table.counts.size()));
      diag_.info("frequency_total: " + std::to_string(table.total));
    });
  }

  void chart() {
    timed("chart", [&] {
      if (!fs::is_regular_file(out_.scores())) {
        throw Error("missing '" + out_.scores().string() + "'; run the 'score' command first");
      }
      const CorpusScores scores =
          parse_scores_csv(io::read_file(out_.scores()), out_.scores().string());
      fs::remove(out_.trajectory());
      const bool any = std::any_of(scores.chapters.begin(), scores.chapters.end(),
                                   [](const ChapterScore& s) { return s.means.has_value(); });
      if (!any) {
        warn("no chapter has lexicon matches; trajectory chart not written");
        return;
      }
      io::write_file(out_.trajectory(), render_trajectory_chart(scores.chapters));
      diag_.info("chart: " + out_.trajectory().string());
    });
  }

  void cloud() {
    timed("cloud", [&] {
      const auto chapters = load_filtered();
      io::ensure_directory(out_.clouds());
      remove_matching(out_.clouds(), kCloudFile);
      fs::remove(out_.clouds() / "cloud_grid.svg");
      fs::remove(out_.clouds() / "cloud_full.svg");

      CloudOptions opts;
      opts.max_words = config_.max_words;
      opts.canvas_width = config_.canvas_width;
      opts.canvas_height = config_.canvas_height;
      opts.seed = config_.seed;

      std::vector<CloudLayout> grid;
      std::vector<std::string> captions;
      FrequencyTable full;
      std::size_t rendered = 0;
      std::size_t skipped = 0;
      auto make = [&](const FrequencyTable& table, const std::string& label) {
        CloudLayout layout = layout_word_cloud(table, opts);
        for (const auto& w : layout.skipped) warn(label + ": word '" + w + "' did not fit, skipped");
        skipped += layout.skipped.size();
        return layout;
      };
      for (const auto& ch : chapters) {
        const FrequencyTable table = frequency_table(ch.utterances);
        full.merge(table);
        const std::string label = "chapter " + std::to_string(ch.chapter_index);
        captions.push_back("Chapter " + std::to_string(ch.chapter_index));
        if (table.empty()) {
          warn(label + ": no tokens, word cloud left empty");
          grid.push_back(CloudLayout{opts.canvas_width, opts.canvas_height, opts.seed, {}, {}});
          continue;
        }
        grid.push_back(make(table, label));
        io::write_file(out_.clouds() / ("cloud_chapter_" + std::to_string(ch.chapter_index) + ".svg"),
                       render_word_cloud(grid.back()));
        ++rendered;
      }
      io::write_file(out_.clouds() / "cloud_grid.svg",
                     render_cloud_grid(grid, captions, config_.grid_columns));
      if (!full.empty()) {
        io::write_file(out_.clouds() / "cloud_full.svg", render_word_cloud(make(full, "full dialogue")));
        ++rendered;
      } else {
        warn("no tokens in any chapter; cloud_full.svg not written");
      }
      report_.clouds_rendered = rendered;
      report_.cloud_words_skipped = skipped;
      diag_.info("clouds: " + std::to_string(rendered));
    });
  }

  // Runs every stage in order and writes report.txt. A failing stage aborts the run; files
  // from earlier stages stay on disk.
  void all() {
    split();
    extract();
    clean();
    score();
    freq();
    chart();
    cloud();
    io::write_file(out_.report(), format_report(report_));
  }

 private:
  static constexpr const char* kChapterFile = R"(chapter_(\d+)\.txt)";
  static constexpr const char* kDialogueFile = R"(chapter_(\d+)_dialogues\.csv)";
  static constexpr const char* kFilteredFile = R"(chapter_(\d+)_filtered\.txt)";
  static constexpr const char* kCloudFile = R"(cloud_chapter_(\d+)\.svg)";

  template <typename Fn>
  void timed(const std::string& stage, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report_.stage_seconds.emplace_back(stage, elapsed.count());
  }

  void warn(const std::string& message) {
    ++report_.warnings;
    diag_.warn(message);
  }

  void forward(const Warnings& warnings) {
    for (const auto& w : warnings) warn(w.message);
  }

  // Files in `dir` named by `pattern`, ordered by the captured chapter number.
  static std::vector<std::pair<int, fs::path>> list_matching(const fs::path& dir,
                                                             const char* pattern) {
    std::vector<std::pair<int, fs::path>> found;
    if (!fs::is_directory(dir)) return found;
    const std::regex re(pattern);
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (!entry.is_regular_file()) continue;
      const std::string name = entry.path().filename().string();
      std::smatch m;
      if (std::regex_match(name, m, re) && m[1].length() <= 9) {
        found.emplace_back(std::stoi(m[1].str()), entry.path());
      }
    }
    std::sort(found.begin(), found.end());
    return found;
  }

  std::vector<std::pair<int, fs::path>> discover(const fs::path& dir, const char* pattern,
                                                 const std::string& producer) const {
    auto found = list_matching(dir, pattern);
    if (found.empty()) {
      throw Error("missing upstream artifacts in '" + dir.string() + "'; run the '" + producer +
                  "' command first");
    }
    return found;
  }

  static void remove_matching(const fs::path& dir, const char* pattern) {
    for (const auto& [index, path] : list_matching(dir, pattern)) fs::remove(path);
  }

  std::vector<ChapterTokens> load_filtered() const {
    std::vector<ChapterTokens> chapters;
    for (const auto& [index, path] : discover(out_.filtered(), kFilteredFile, "clean")) {
      chapters.push_back({index, parse_filtered(io::read_file(path))});
    }
    return chapters;
  }

  RunConfig config_;
  Diagnostics diag_;
  OutputLayout out_;
  RunReport report_;
};

}  // namespace vadarc
