// vadarc: dialogue emotion arcs from chaptered plain-text novels.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include "vadarc/vadarc.hpp"

namespace {

enum ExitCode { kOk = 0, kInputError = 1, kInternalError = 2 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extract dialogue from a chaptered novel, score it on valence/arousal/dominance "
               "and render the emotional trajectory and word clouds as SVG."};
  app.set_config("--config", "", "Key=value config file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  vadarc::RunConfig cfg;
  std::string input;
  std::string out = cfg.output_dir.string();
  std::string lexicon;
  std::string heading;
  std::vector<std::string> stopwords;
  std::string data_dir;

  app.add_option("--input,-i", input, "Plain-text UTF-8 novel");
  app.add_option("--out,-o", out, "Output directory")->capture_default_str();
  app.add_option("--lexicon", lexicon, "NRC-VAD-format TSV lexicon (term, valence, arousal, dominance)");
  app.add_option("--stopwords", stopwords,
                 "Stopword file(s), one word per line; defaults to the bundled baseline + extended lists");
  app.add_option("--data-dir", data_dir, "Directory holding the bundled stopword lists");
  app.add_option("--heading-pattern", heading,
                 "Regular expression for chapter heading lines (group 1 = chapter number)");
  app.add_option("--quote-style", cfg.quote_styles,
                 "Dialogue quote pair such as '\"\"' or '\xE2\x80\x9C\xE2\x80\x9D' (repeatable; replaces defaults)");
  app.add_option("--seed", cfg.seed, "Word-cloud layout seed")->capture_default_str();
  app.add_flag("--rescale", cfg.rescale, "Lexicon scores are in [-1,1]; map them to [0,1]");
  app.add_option("--max-words", cfg.max_words, "Words per cloud")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--k", cfg.k, "Chapters listed per peak/trough category")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--canvas-width", cfg.canvas_width, "Word-cloud canvas width (px)")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--canvas-height", cfg.canvas_height, "Word-cloud canvas height (px)")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--columns", cfg.grid_columns, "Columns in the chapter cloud grid")
      ->check(CLI::PositiveNumber)->capture_default_str();

  struct Stage {
    const char* name;
    const char* help;
    void (vadarc::Pipeline::*run)();
  };
  const std::vector<Stage> stages = {
      {"split", "Split the novel into chapters/chapter_<n>.txt", &vadarc::Pipeline::split},
      {"extract", "Extract quoted dialogue into dialogues/*.csv and full_dialogue.txt",
       &vadarc::Pipeline::extract},
      {"clean", "Normalize, tokenize and filter dialogue into dialogues_filtered/",
       &vadarc::Pipeline::clean},
      {"score", "Score chapters against the lexicon: scores.csv and extremes.txt",
       &vadarc::Pipeline::score},
      {"freq", "Word frequencies over all dialogue: freq.csv", &vadarc::Pipeline::freq},
      {"chart", "Render trajectory.svg from scores.csv", &vadarc::Pipeline::chart},
      {"cloud", "Render per-chapter, grid and full-dialogue word clouds", &vadarc::Pipeline::cloud},
      {"all", "Run every stage in order and write report.txt", &vadarc::Pipeline::all},
  };
  std::vector<CLI::App*> subcommands;
  for (const auto& s : stages) subcommands.push_back(app.add_subcommand(s.name, s.help));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  cfg.input_path = input;
  cfg.output_dir = out;
  if (!lexicon.empty()) cfg.lexicon_path = lexicon;
  if (!heading.empty()) cfg.heading_pattern = heading;
  for (const auto& s : stopwords) cfg.stopword_paths.emplace_back(s);
  if (cfg.stopword_paths.empty() && !data_dir.empty()) {
    cfg.stopword_paths = vadarc::default_stopword_paths(data_dir);
  }

  vadarc::Diagnostics diag;
  diag.warn = [](const std::string& m) { std::cerr << "warning: " << m << '\n'; };
  diag.info = [](const std::string& m) { std::cout << m << '\n'; };

  vadarc::Pipeline pipeline(cfg, diag);
  try {
    for (std::size_t i = 0; i < stages.size(); ++i) {
      if (subcommands[i]->parsed()) (pipeline.*stages[i].run)();
    }
  } catch (const vadarc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cerr << vadarc::format_timings(pipeline.report());
    return kInputError;
  } catch (const vadarc::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  std::cerr << vadarc::format_timings(pipeline.report());
  return kOk;
}
