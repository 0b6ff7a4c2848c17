// Copyright 2026 The bitext-tools Authors
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

// bitext: corpus filtering, statistics, splitting and scoring from one
// binary. Logs go to standard error; data and reports go to standard output
// or to files, so subcommands compose under shell redirection.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bitext/bitext.hpp"

namespace {

using bitext::Bisegment;
using bitext::DataError;
using bitext::ordered_json;

// Flag combinations the parser cannot express; exits 1 like other usage
// errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void log_line(const std::string& msg) { std::cerr << "bitext: " << msg << "\n"; }

bitext::WarnFn warner() {
  return [](const std::string& msg) { log_line("warning: " + msg); };
}

struct InputFlags {
  std::string src;
  std::string tgt;
  std::string tsv;
  std::string src_lang = "src";
  std::string tgt_lang = "tgt";
  std::string name = "corpus";
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
  cmd->add_option("--src", in.src, "source-side file of a line-aligned pair");
  cmd->add_option("--tgt", in.tgt, "target-side file of a line-aligned pair");
  cmd->add_option("--tsv", in.tsv, "two-column TSV input (instead of --src/--tgt)");
  cmd->add_option("--src-lang", in.src_lang, "source language tag");
  cmd->add_option("--tgt-lang", in.tgt_lang, "target language tag");
  cmd->add_option("--name", in.name, "corpus name used in reports");
}

std::function<std::optional<Bisegment>()> make_source(const InputFlags& in) {
  if (!in.tsv.empty()) {
    if (!in.src.empty() || !in.tgt.empty()) {
      throw UsageError("--tsv excludes --src/--tgt");
    }
    auto reader = std::make_shared<bitext::TsvReader>(
        in.tsv, bitext::LangPair{in.src_lang, in.tgt_lang}, in.name, warner());
    return [reader] { return reader->next(); };
  }
  if (in.src.empty() || in.tgt.empty()) {
    throw UsageError("need --src and --tgt, or --tsv");
  }
  auto reader = std::make_shared<bitext::MosesPairReader>(
      in.src, in.tgt, bitext::LangPair{in.src_lang, in.tgt_lang}, in.name, warner());
  return [reader] { return reader->next(); };
}

std::vector<Bisegment> read_all(const InputFlags& in) {
  auto source = make_source(in);
  std::vector<Bisegment> out;
  while (auto bi = source()) out.push_back(std::move(*bi));
  return out;
}

// UTF-8 validated lines, untrimmed; scoring inputs keep their exact content.
std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lines.empty() && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    const size_t bad = bitext::find_invalid_utf8(line);
    if (bad != std::string::npos) {
      throw DataError("invalid UTF-8 in " + path + " line " +
                      std::to_string(lines.size() + 1) + " at byte offset " +
                      std::to_string(bad));
    }
    lines.push_back(line);
  }
  if (in.bad()) throw DataError("read error on " + path);
  return lines;
}

void emit_json(const ordered_json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    bitext::write_json_file(doc, path);
  }
}

std::optional<ordered_json> load_config_doc(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return bitext::read_json_file(path);
}

// ---------------------------------------------------------------------------
// filter

struct FilterCli {
  InputFlags in;
  std::string out_src;
  std::string out_tgt;
  std::string report_path;
  std::string config_path;
  // Flag overrides; count()-checked so flags > config > defaults.
  uint32_t max_bytes = 0;
  double max_ratio = 0;
  uint32_t max_special = 0;
  uint32_t max_uppercase = 0;
  uint32_t max_digits = 0;
  uint32_t run_min = 0;
  std::string length_unit;
  std::string normalize;
  std::vector<std::string> order;
  unsigned threads = 0;
  size_t batch_size = 0;
};

int run_filter(const FilterCli& cli, const CLI::App* cmd) {
  bitext::FilterSettings settings;
  if (auto doc = load_config_doc(cli.config_path)) {
    if (doc->contains("filter")) {
      settings = bitext::filter_settings_from_json(doc->at("filter"));
    }
  }
  if (cmd->count("--max-bytes")) settings.config.max_segment_bytes = cli.max_bytes;
  if (cmd->count("--max-ratio")) settings.config.max_length_ratio = cli.max_ratio;
  if (cmd->count("--max-special")) settings.config.max_special_chars = cli.max_special;
  if (cmd->count("--max-uppercase")) settings.config.max_uppercase = cli.max_uppercase;
  if (cmd->count("--max-digits")) settings.config.max_digits = cli.max_digits;
  if (cmd->count("--run-min")) settings.config.repeated_symbol_run_min = cli.run_min;
  if (cmd->count("--length-unit")) {
    if (cli.length_unit == "bytes") settings.config.length_unit = bitext::LengthUnit::bytes;
    else if (cli.length_unit == "codepoints") settings.config.length_unit = bitext::LengthUnit::codepoints;
    else throw UsageError("--length-unit must be bytes|codepoints");
  }
  if (cmd->count("--normalize")) {
    if (cli.normalize == "none") settings.options.normalize = bitext::Normalize::none;
    else if (cli.normalize == "compat") settings.options.normalize = bitext::Normalize::compat;
    else throw UsageError("--normalize must be none|compat");
  }
  if (cmd->count("--order")) {
    settings.options.order.clear();
    for (const auto& name : cli.order) {
      settings.options.order.push_back(bitext::parse_rule(name));
    }
  }
  if (cmd->count("--threads")) settings.options.threads = cli.threads;
  if (cmd->count("--batch-size")) settings.options.batch_size = cli.batch_size;

  if (cli.out_src.empty() != cli.out_tgt.empty()) {
    throw UsageError("--out-src and --out-tgt go together");
  }

  auto source = make_source(cli.in);
  uint64_t ticker = 0;
  auto ticking_source = [&]() {
    auto bi = source();
    if (bi && (++ticker % 1000000) == 0) {
      log_line("read " + std::to_string(ticker) + " bisegments");
    }
    return bi;
  };

  std::unique_ptr<bitext::MosesPairWriter> writer;
  if (!cli.out_src.empty()) {
    writer = std::make_unique<bitext::MosesPairWriter>(cli.out_src, cli.out_tgt);
  }
  auto sink = [&](Bisegment&& bi) {
    if (writer) writer->write(bi);
  };

  const bitext::FilterReport report =
      bitext::run_pipeline(ticking_source, sink, settings.config, settings.options);
  if (writer) {
    const auto counts = writer->finish();
    if (counts.newlines_repaired) {
      log_line("repaired " + std::to_string(counts.newlines_repaired) + " embedded newlines");
    }
  }
  emit_json(bitext::filter_report_to_json(report), cli.report_path);
  return 0;
}

// ---------------------------------------------------------------------------
// stats

struct StatsCli {
  InputFlags in;
  std::string config_path;
  std::string json_path;
  bool table = false;
  std::string production = "translated";
  std::string cotext = "not-applicable";
  std::string tok_src;
  std::string tok_tgt;
  uint32_t sample_size = 0;
  uint32_t trials = 0;
  uint64_t seed = 0;
};

int run_stats(const StatsCli& cli, const CLI::App* cmd) {
  bitext::StatsConfig cfg;
  bitext::StatsTokenizers toks;
  if (auto doc = load_config_doc(cli.config_path)) {
    if (doc->contains("stats")) {
      cfg = bitext::stats_config_from_json(doc->at("stats"));
      toks = bitext::stats_tokenizers_from_json(doc->at("stats"));
    }
  }
  if (cmd->count("--sample-size")) cfg.richness_sample_size = cli.sample_size;
  if (cmd->count("--trials")) cfg.richness_trials = cli.trials;
  if (cmd->count("--seed")) cfg.seed = cli.seed;
  if (cmd->count("--tokenizer-src")) toks.source = bitext::tokenizer_kind_from_string(cli.tok_src);
  if (cmd->count("--tokenizer-tgt")) toks.target = bitext::tokenizer_kind_from_string(cli.tok_tgt);

  const auto corpus = read_all(cli.in);
  const bitext::CorpusStats stats = bitext::corpus_report(
      corpus, bitext::Tokenizer(toks.source), bitext::Tokenizer(toks.target), cfg);

  const ordered_json doc = bitext::stats_to_json(stats);
  if (cli.table) {
    if (!cli.json_path.empty()) bitext::write_json_file(doc, cli.json_path);
    bitext::StatsTableRow row;
    row.name = cli.in.name;
    row.production = bitext::production_from_string(cli.production) ==
                             bitext::Production::crawled
                         ? "c"
                         : "t";
    row.cotext = bitext::to_string(bitext::cotext_from_string(cli.cotext));
    row.stats = stats;
    std::cout << bitext::render_stats_table({row});
  } else {
    emit_json(doc, cli.json_path);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// split

struct SplitCli {
  InputFlags in;
  std::string config_path;
  std::string out_dir;
  bool force = false;
  uint64_t val_size = 3000;
  uint64_t test_size = 3000;
  uint64_t seed = 0;
  bool carve_before_dedup = false;
  bool allow_undersized = false;
  std::vector<std::string> reserved;  // NAME=SRC,TGT
};

int run_split(const SplitCli& cli, const CLI::App* cmd) {
  std::vector<bitext::NamedCorpus> corpora;
  bitext::DatasetLayout layout;
  std::string out_dir = cli.out_dir;

  if (!cli.config_path.empty()) {
    const auto doc = bitext::read_json_file(cli.config_path);
    bitext::PipelineConfig cfg = bitext::pipeline_config_from_json(
        doc, std::filesystem::path(cli.config_path).parent_path());
    cfg.validate();
    for (const auto& spec : cfg.inputs) {
      corpora.push_back({{spec.name, spec.production, spec.has_cotext},
                         bitext::read_input(spec, warner())});
    }
    layout = cfg.layout;
    layout.reserved_tests = bitext::load_reserved(cfg.reserved, warner());
    if (out_dir.empty()) out_dir = cfg.output_dir;
    if (cmd->count("--seed")) layout.seed = cli.seed;
  } else {
    bitext::NamedCorpus core;
    core.meta = {cli.in.name, bitext::Production::translated, bitext::Cotext::not_applicable};
    core.bisegments = read_all(cli.in);
    corpora.push_back(std::move(core));
    layout.core_members = {cli.in.name};
    layout.val_size = cli.val_size;
    layout.test_size = cli.test_size;
    layout.seed = cli.seed;
    layout.carve_before_dedup = cli.carve_before_dedup;
    layout.allow_undersized = cli.allow_undersized;
    for (const auto& spec : cli.reserved) {
      const size_t eq = spec.find('=');
      const size_t comma = spec.find(',', eq == std::string::npos ? 0 : eq);
      if (eq == std::string::npos || comma == std::string::npos) {
        throw UsageError("--reserved expects NAME=SRC,TGT");
      }
      bitext::ReservedSpec r;
      r.name = spec.substr(0, eq);
      r.src_path = spec.substr(eq + 1, comma - eq - 1);
      r.tgt_path = spec.substr(comma + 1);
      auto loaded = bitext::load_reserved({r}, warner());
      layout.reserved_tests.push_back(std::move(loaded.front()));
    }
  }
  if (out_dir.empty()) throw UsageError("need --out (or output_dir in the config)");

  bitext::SplitResult result = bitext::assemble_and_split(corpora, layout);
  bitext::write_layout(result, out_dir, cli.force);
  std::cout << bitext::manifest_to_json(result.manifest).dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// build

struct BuildCli {
  std::string config_path;
  std::string out_dir;
  bool force = false;
  unsigned threads = 0;
};

int run_build_cmd(const BuildCli& cli, const CLI::App* cmd) {
  if (cli.config_path.empty()) {
    throw UsageError("build needs --config (or the config environment variable)");
  }
  const auto doc = bitext::read_json_file(cli.config_path);
  bitext::PipelineConfig cfg = bitext::pipeline_config_from_json(
      doc, std::filesystem::path(cli.config_path).parent_path());
  if (!cli.out_dir.empty()) cfg.output_dir = cli.out_dir;
  if (cmd->count("--threads")) cfg.filter.options.threads = cli.threads;

  const bitext::BuildOutcome outcome = bitext::run_build(cfg, cli.force, warner());
  for (const auto& input : outcome.inputs) {
    log_line("input " + input.name + ": read " + std::to_string(input.read) +
             ", final " + std::to_string(input.final_count));
  }
  std::cout << bitext::manifest_to_json(outcome.manifest).dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// score

struct ScoreCli {
  std::string metric;
  std::string hyp_path;
  std::string ref_path;
  std::string strip = "none";
  bool sep_punct = false;
  uint32_t max_order = 4;
  bool case_insensitive = false;
  uint32_t char_order = 6;
  uint32_t word_order = 2;
  double beta = 2.0;
  bool f_of_averages = false;
  bool verbose = false;
};

int run_score(const ScoreCli& cli) {
  auto hyps = read_lines(cli.hyp_path);
  auto refs = read_lines(cli.ref_path);

  auto post_process = [&](std::vector<std::string>& lines) {
    for (auto& line : lines) {
      if (cli.strip != "none") {
        line = bitext::strip_segmentation(line, bitext::seg_marker_from_string(cli.strip));
      }
      if (cli.sep_punct) line = bitext::separate_punctuation(line);
    }
  };
  post_process(hyps);
  post_process(refs);

  double score = 0;
  if (cli.metric == "bleu") {
    bitext::BleuConfig cfg;
    cfg.max_order = cli.max_order;
    cfg.case_sensitive = !cli.case_insensitive;
    const auto breakdown = bitext::bleu_breakdown(hyps, refs, cfg);
    score = breakdown.score;
    if (cli.verbose) {
      std::string precisions;
      for (const auto& tally : breakdown.orders) {
        if (!precisions.empty()) precisions += "/";
        precisions += tally.hyp_total
                          ? std::to_string(static_cast<double>(tally.match) / tally.hyp_total)
                          : "n.a.";
      }
      log_line("bleu precisions " + precisions + ", bp " +
               std::to_string(breakdown.brevity_penalty) + ", hyp_len " +
               std::to_string(breakdown.hyp_length) + ", ref_len " +
               std::to_string(breakdown.ref_length));
    }
  } else if (cli.metric == "chrf") {
    bitext::ChrfConfig cfg;
    cfg.char_order = cli.char_order;
    cfg.word_order = cli.word_order;
    cfg.beta = cli.beta;
    cfg.f_of_averages = cli.f_of_averages;
    score = bitext::chrf(hyps, refs, cfg);
  } else {
    throw UsageError("--metric must be bleu|chrf");
  }
  std::printf("%.2f\n", score);
  return 0;
}

// ---------------------------------------------------------------------------
// modernize

struct ModernizeCli {
  InputFlags in;
  std::string out_src;
  std::string out_tgt;
  std::string rules_path;
  std::string report_path;
};

int run_modernize(const ModernizeCli& cli) {
  bitext::ModernizationRules rules = bitext::ModernizationRules::defaults();
  if (!cli.rules_path.empty()) {
    rules = bitext::modernization_rules_from_json(bitext::read_json_file(cli.rules_path));
  }
  if (cli.out_src.empty() != cli.out_tgt.empty()) {
    throw UsageError("--out-src and --out-tgt go together");
  }
  auto corpus = read_all(cli.in);
  bitext::ModernizeReport report;
  const auto kept = bitext::modernize_corpus(std::move(corpus), rules, &report);
  if (!cli.out_src.empty()) {
    bitext::MosesPairWriter writer(cli.out_src, cli.out_tgt);
    for (const auto& bi : kept) writer.write(bi);
    writer.finish();
  }
  emit_json(bitext::modernize_report_to_json(report), cli.report_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bitext: parallel-corpus filtering, statistics, splitting and scoring"};
  app.set_version_flag("--version", "bitext 1.0.0");
  app.require_subcommand(1);

  FilterCli filter_cli;
  CLI::App* filter_cmd = app.add_subcommand("filter", "filter a corpus, write report");
  add_input_flags(filter_cmd, filter_cli.in);
  filter_cmd->add_option("--out-src", filter_cli.out_src, "kept source side output");
  filter_cmd->add_option("--out-tgt", filter_cli.out_tgt, "kept target side output");
  filter_cmd->add_option("--report", filter_cli.report_path,
                         "report JSON file (default: standard output)");
  filter_cmd->add_option("--config", filter_cli.config_path, "pipeline config JSON")
      ->envname("BITEXT_CONFIG");
  filter_cmd->add_option("--max-bytes", filter_cli.max_bytes, "segment size limit");
  filter_cmd->add_option("--max-ratio", filter_cli.max_ratio, "length ratio limit");
  filter_cmd->add_option("--max-special", filter_cli.max_special, "special char budget");
  filter_cmd->add_option("--max-uppercase", filter_cli.max_uppercase, "uppercase budget");
  filter_cmd->add_option("--max-digits", filter_cli.max_digits, "digit budget");
  filter_cmd->add_option("--run-min", filter_cli.run_min, "symbol run threshold");
  filter_cmd->add_option("--length-unit", filter_cli.length_unit, "bytes|codepoints");
  filter_cmd->add_option("--normalize", filter_cli.normalize, "none|compat");
  filter_cmd->add_option("--order", filter_cli.order, "rule order")->delimiter(',');
  filter_cmd->add_option("--threads", filter_cli.threads, "worker thread cap");
  filter_cmd->add_option("--batch-size", filter_cli.batch_size, "pipeline batch size");

  StatsCli stats_cli;
  CLI::App* stats_cmd = app.add_subcommand("stats", "corpus statistics report");
  add_input_flags(stats_cmd, stats_cli.in);
  stats_cmd->add_option("--config", stats_cli.config_path, "pipeline config JSON")
      ->envname("BITEXT_CONFIG");
  stats_cmd->add_option("--json", stats_cli.json_path, "stats JSON file");
  stats_cmd->add_flag("--table", stats_cli.table, "render the characteristics table");
  stats_cmd->add_option("--production", stats_cli.production, "crawled|translated");
  stats_cmd->add_option("--cotext", stats_cli.cotext, "yes|no|not-applicable");
  stats_cmd->add_option("--tokenizer-src", stats_cli.tok_src, "whitespace|script-boundary");
  stats_cmd->add_option("--tokenizer-tgt", stats_cli.tok_tgt, "whitespace|script-boundary");
  stats_cmd->add_option("--sample-size", stats_cli.sample_size, "richness sample size");
  stats_cmd->add_option("--trials", stats_cli.trials, "richness trials");
  stats_cmd->add_option("--seed", stats_cli.seed, "sampling seed");

  SplitCli split_cli;
  CLI::App* split_cmd = app.add_subcommand("split", "assemble and split a dataset");
  add_input_flags(split_cmd, split_cli.in);
  split_cmd->add_option("--config", split_cli.config_path, "pipeline config JSON")
      ->envname("BITEXT_CONFIG");
  split_cmd->add_option("--out", split_cli.out_dir, "output directory");
  split_cmd->add_flag("--force", split_cli.force, "write into a non-empty directory");
  split_cmd->add_option("--val", split_cli.val_size, "validation size");
  split_cmd->add_option("--test", split_cli.test_size, "test size");
  split_cmd->add_option("--seed", split_cli.seed, "shuffle seed");
  split_cmd->add_flag("--carve-before-dedup", split_cli.carve_before_dedup,
                      "carve splits first, dedup afterwards");
  split_cmd->add_flag("--allow-undersized", split_cli.allow_undersized,
                      "clamp val/test when the core is too small");
  split_cmd->add_option("--reserved", split_cli.reserved,
                        "fixed held-out set, NAME=SRC,TGT (repeatable)");

  BuildCli build_cli;
  CLI::App* build_cmd = app.add_subcommand("build", "run the full pipeline from a config");
  build_cmd->add_option("--config", build_cli.config_path, "pipeline config JSON")
      ->envname("BITEXT_CONFIG");
  build_cmd->add_option("--out", build_cli.out_dir, "override output_dir");
  build_cmd->add_flag("--force", build_cli.force, "write into a non-empty directory");
  build_cmd->add_option("--threads", build_cli.threads, "worker thread cap");

  ScoreCli score_cli;
  CLI::App* score_cmd = app.add_subcommand("score", "score hypotheses against references");
  score_cmd->add_option("--metric", score_cli.metric, "bleu|chrf")->required();
  score_cmd->add_option("--hyp", score_cli.hyp_path, "hypothesis file")->required();
  score_cmd->add_option("--ref", score_cli.ref_path, "reference file")->required();
  score_cmd->add_option("--strip", score_cli.strip, "segmentation markers: sp|atat|none");
  score_cmd->add_flag("--sep-punct", score_cli.sep_punct, "separate punctuation first");
  score_cmd->add_option("--max-order", score_cli.max_order, "bleu n-gram order");
  score_cmd->add_flag("--case-insensitive", score_cli.case_insensitive, "lowercase first");
  score_cmd->add_option("--char-order", score_cli.char_order, "chrf character order");
  score_cmd->add_option("--word-order", score_cli.word_order, "chrf word order");
  score_cmd->add_option("--beta", score_cli.beta, "chrf beta");
  score_cmd->add_flag("--f-of-averages", score_cli.f_of_averages,
                      "chrf: F over order-averaged P and R");
  score_cmd->add_flag("--verbose", score_cli.verbose, "log the score breakdown");

  ModernizeCli modernize_cli;
  CLI::App* modernize_cmd =
      app.add_subcommand("modernize", "OCR-noise rejection and kana modernization");
  add_input_flags(modernize_cmd, modernize_cli.in);
  modernize_cmd->add_option("--out-src", modernize_cli.out_src, "kept source side output");
  modernize_cmd->add_option("--out-tgt", modernize_cli.out_tgt, "kept target side output");
  modernize_cmd->add_option("--rules", modernize_cli.rules_path, "rules JSON file");
  modernize_cmd->add_option("--report", modernize_cli.report_path,
                            "report JSON file (default: standard output)");

  try {
    app.parse(argc, argv);
    if (filter_cmd->parsed()) return run_filter(filter_cli, filter_cmd);
    if (stats_cmd->parsed()) return run_stats(stats_cli, stats_cmd);
    if (split_cmd->parsed()) return run_split(split_cli, split_cmd);
    if (build_cmd->parsed()) return run_build_cmd(build_cli, build_cmd);
    if (score_cmd->parsed()) return run_score(score_cli);
    if (modernize_cmd->parsed()) return run_modernize(modernize_cli);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    log_line(std::string("usage error: ") + e.what());
    return 1;
  } catch (const DataError& e) {
    log_line(std::string("error: ") + e.what());
    return 2;
  } catch (const std::exception& e) {
    log_line(std::string("error: ") + e.what());
    return 2;
  }
}
