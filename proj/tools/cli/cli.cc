// Copyright 2026 The gecsynth Authors.
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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "gecsynth/annotate.h"
#include "gecsynth/config.h"
#include "gecsynth/corpus.h"
#include "gecsynth/error.h"
#include "gecsynth/expansion.h"
#include "gecsynth/gecscore.h"
#include "gecsynth/inserter.h"
#include "gecsynth/lexicon.h"
#include "gecsynth/morphology.h"
#include "gecsynth/text.h"

namespace gecsynth::cli {
namespace {

namespace fs = std::filesystem;

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(normalize(line));
  return lines;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path or_default(const fs::path& flag, const fs::path& configured) {
  return flag.empty() ? configured : flag;
}

fs::path in_output_dir(const PipelineConfig& config, const fs::path& flag,
                       std::string_view file_name, std::string_view flag_name) {
  if (!flag.empty()) return flag;
  if (config.output_dir.empty()) {
    throw ConfigError(std::string(flag_name) + " or paths.output_dir is required");
  }
  return config.output_dir / file_name;
}

SpellingDictionary load_dictionary_reporting(const fs::path& path, std::ostream& err) {
  DictionaryLoad load = load_dictionary(path);
  for (const RowIssue& issue : load.rejected) {
    err << path.string() << ":" << issue.line << ": rejected: " << issue.message << '\n';
  }
  for (const RowIssue& issue : load.conflicts) {
    err << path.string() << ":" << issue.line << ": conflict: " << issue.message << '\n';
  }
  return std::move(load.dictionary);
}

AnalyzabilityOracle load_oracle(const PipelineConfig& config) {
  require_file(config.lexicon, "lexicon");
  std::vector<SuffixRule> rules;
  if (config.suffix_rules.empty()) {
    rules = default_suffix_rules();
  } else {
    require_file(config.suffix_rules, "suffix rules");
    rules = load_suffix_rules(config.suffix_rules);
  }
  return load_lexicon(config.lexicon, std::move(rules), config.suffix_depth);
}

SentenceSplitter load_splitter(const PipelineConfig& config) {
  if (config.abbreviations.empty()) return SentenceSplitter();
  require_file(config.abbreviations, "abbreviation list");
  return SentenceSplitter::from_file(config.abbreviations);
}

std::vector<M2Document> to_m2(std::span<const SentencePair> pairs) {
  std::vector<M2Document> docs;
  docs.reserve(pairs.size());
  for (const SentencePair& pair : pairs) {
    M2Document doc{tokenize_words(pair.source), {}};
    doc.edits = annotate(doc.source_tokens, tokenize_words(pair.corrected));
    docs.push_back(std::move(doc));
  }
  return docs;
}

// Options shared by every subcommand, filled before the subcommand runs.
struct Globals {
  fs::path config_path;
  int workers = -1;
};

PipelineConfig load_config(const Globals& globals) {
  PipelineConfig config;
  if (!globals.config_path.empty()) {
    require_file(globals.config_path, "config file");
    config = PipelineConfig::load(globals.config_path);
  }
  if (globals.workers >= 0) config.workers = static_cast<unsigned>(globals.workers);
  return config;
}

void print_table(std::ostream& out,
                 const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [name, value] : rows) width = std::max(width, text::length(name));
  for (const auto& [name, value] : rows) {
    out << name << std::string(width - text::length(name) + 2, ' ') << value << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthetic GEC corpus construction and M2 scoring"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--config", globals.config_path, "Pipeline config (flat TOML)");
  app.add_option("--workers", globals.workers,
                 "Worker threads; 0 uses every core (default from config)")
      ->check(CLI::NonNegativeNumber);

  // index
  auto* index_cmd = app.add_subcommand("index", "Build and save the word index");
  fs::path index_corpus, index_out;
  index_cmd->add_option("--corpus", index_corpus, "Corpus (.txt lines or .jsonl)");
  index_cmd->add_option("-o,--output", index_out, "Index TSV (default <output_dir>/index.tsv)");

  // expand
  auto* expand_cmd =
      app.add_subcommand("expand", "Grow the spelling dictionary to its fixpoint");
  fs::path expand_corpus, expand_seed, expand_lexicon, expand_rules, expand_index,
      expand_dict_out, expand_report_out, expand_out_dir;
  std::size_t max_iterations = 0, deasciify_cap = 0;
  expand_cmd->add_option("--corpus", expand_corpus);
  expand_cmd->add_option("--seed", expand_seed, "Seed dictionary TSV");
  expand_cmd->add_option("--lexicon", expand_lexicon, "Word-per-line lexicon");
  expand_cmd->add_option("--suffix-rules", expand_rules, "suffix<TAB>predicate TSV");
  expand_cmd->add_option("--index", expand_index, "Prebuilt index TSV");
  expand_cmd->add_option("--output-dir", expand_out_dir);
  expand_cmd->add_option("--dictionary-out", expand_dict_out);
  expand_cmd->add_option("--report-out", expand_report_out);
  expand_cmd->add_option("--max-iterations", max_iterations)->check(CLI::PositiveNumber);
  expand_cmd->add_option("--deasciify-cap", deasciify_cap)->check(CLI::PositiveNumber);

  // insert
  auto* insert_cmd =
      app.add_subcommand("insert", "Build a parallel corpus by clean insertions");
  fs::path insert_corpus, insert_dict, insert_out, insert_m2, insert_abbrev;
  insert_cmd->add_option("--corpus", insert_corpus);
  insert_cmd->add_option("--dictionary", insert_dict, "Spelling dictionary TSV");
  insert_cmd->add_option("-o,--output", insert_out, "Parallel TSV (default <output_dir>/parallel.tsv)");
  insert_cmd->add_option("--m2", insert_m2, "Also write the applied edits as M2");
  insert_cmd->add_option("--abbreviations", insert_abbrev);

  // annotate
  auto* annotate_cmd =
      app.add_subcommand("annotate", "Correct sentences with a chat-completion endpoint");
  fs::path annotate_in, annotate_out, annotate_rejects, annotate_checkpoint, annotate_prompt;
  std::string base_url, model;
  std::size_t concurrency = 0;
  int max_attempts = 0;
  annotate_cmd->add_option("--input", annotate_in, "One sentence per line")->required();
  annotate_cmd->add_option("-o,--output", annotate_out, "Parallel TSV of ok records")->required();
  annotate_cmd->add_option("--rejects", annotate_rejects, "Ids that did not come back ok");
  annotate_cmd->add_option("--checkpoint", annotate_checkpoint, "Resumable journal");
  annotate_cmd->add_option("--prompt-file", annotate_prompt, "Template with one {sentence}");
  annotate_cmd->add_option("--base-url", base_url);
  annotate_cmd->add_option("--model", model);
  annotate_cmd->add_option("--concurrency", concurrency)->check(CLI::PositiveNumber);
  annotate_cmd->add_option("--max-attempts", max_attempts)->check(CLI::PositiveNumber);

  // m2
  auto* m2_cmd = app.add_subcommand("m2", "Convert a parallel TSV to M2");
  fs::path m2_in, m2_out;
  m2_cmd->add_option("--input", m2_in, "source<TAB>corrected TSV")->required();
  m2_cmd->add_option("-o,--output", m2_out, "M2 file")->required();

  // score
  auto* score_cmd = app.add_subcommand("score", "Score a hypothesis M2 against gold");
  fs::path gold_path, hyp_path;
  std::string mode_name;
  score_cmd->add_option("--gold", gold_path)->required();
  score_cmd->add_option("--hyp", hyp_path)->required();
  score_cmd->add_option("--mode", mode_name)
      ->check(CLI::IsMember({"span-correction", "span-detection", "token-detection"}));

  // postprocess-tweets
  auto* tweets_cmd = app.add_subcommand(
      "postprocess-tweets", "Capitalize gold sentences, strip hypothesis punctuation");
  fs::path tweets_gold, tweets_hyp, tweets_gold_out, tweets_hyp_out;
  tweets_cmd->add_option("--gold", tweets_gold)->required();
  tweets_cmd->add_option("--hyp", tweets_hyp)->required();
  tweets_cmd->add_option("--gold-out", tweets_gold_out)->required();
  tweets_cmd->add_option("--hyp-out", tweets_hyp_out)->required();

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Summarize a corpus and/or dictionary");
  fs::path stats_corpus, stats_dict, stats_tsv;
  stats_cmd->add_option("--corpus", stats_corpus);
  stats_cmd->add_option("--dictionary", stats_dict);
  stats_cmd->add_option("--tsv", stats_tsv, "Also write metric<TAB>value rows here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    CLI::App* failing = &app;
    for (CLI::App* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return kExitUsage;
  }

  try {
    PipelineConfig config = load_config(globals);

    if (*index_cmd) {
      config.corpus = or_default(index_corpus, config.corpus);
      require_file(config.corpus, "corpus");
      const fs::path target = in_output_dir(config, index_out, "index.tsv", "--output");
      const auto corpus = load_corpus(config.corpus);
      const WordIndex index = build_word_index(corpus, config.workers);
      auto file = open_output(target);
      index.write(file);
      out << "indexed " << corpus.size() << " documents, " << index.size()
          << " words -> " << target.string() << '\n';
    } else if (*expand_cmd) {
      config.corpus = or_default(expand_corpus, config.corpus);
      config.seed_dictionary = or_default(expand_seed, config.seed_dictionary);
      config.lexicon = or_default(expand_lexicon, config.lexicon);
      config.suffix_rules = or_default(expand_rules, config.suffix_rules);
      config.output_dir = or_default(expand_out_dir, config.output_dir);
      if (max_iterations > 0) config.max_iterations = max_iterations;
      if (deasciify_cap > 0) config.deasciify_cap = deasciify_cap;
      config.validate();
      require_file(config.corpus, "corpus");
      require_file(config.seed_dictionary, "seed dictionary");
      const fs::path dict_target =
          in_output_dir(config, expand_dict_out, "dictionary.tsv", "--dictionary-out");
      const fs::path report_target =
          in_output_dir(config, expand_report_out, "report.tsv", "--report-out");

      const auto corpus = load_corpus(config.corpus);
      const SpellingDictionary seed =
          load_dictionary_reporting(config.seed_dictionary, err);
      const AnalyzabilityOracle oracle = load_oracle(config);
      WordIndex index;
      if (!expand_index.empty()) {
        require_file(expand_index, "index");
        index = WordIndex::load(expand_index);
      } else {
        index = build_word_index(corpus, config.workers);
      }

      ExpansionOptions options;
      options.max_iterations = config.max_iterations;
      options.candidates.deasciify_cap = config.deasciify_cap;
      options.workers = config.workers;
      if (seed.empty()) throw DataError("nothing to expand: the seed dictionary is empty");
      const ExpansionRun run_result =
          expand_to_fixpoint(seed, ExpansionInputs{index, corpus, oracle}, options);

      {
        auto file = open_output(dict_target);
        write_dictionary(run_result.final_dictionary, file);
      }
      {
        auto file = open_output(report_target);
        write_report(run_result.reports, file);
      }
      write_report(run_result.reports, out);
      if (run_result.capped_words > 0) {
        err << run_result.capped_words
            << " words skipped by the deasciifier combinatorial cap\n";
      }
      if (!run_result.converged) {
        err << "warning: stopped after " << config.max_iterations
            << " iterations without converging\n";
      }
    } else if (*insert_cmd) {
      config.corpus = or_default(insert_corpus, config.corpus);
      config.abbreviations = or_default(insert_abbrev, config.abbreviations);
      const fs::path dict_path = !insert_dict.empty() ? insert_dict
                                 : config.output_dir.empty()
                                     ? fs::path()
                                     : config.output_dir / "dictionary.tsv";
      require_file(config.corpus, "corpus");
      require_file(dict_path, "dictionary");
      const fs::path target = in_output_dir(config, insert_out, "parallel.tsv", "--output");

      const SentenceSplitter splitter = load_splitter(config);
      std::vector<std::string> sentences;
      for (const Document& doc : load_corpus(config.corpus)) {
        for (std::string& s : splitter.split(doc.text)) sentences.push_back(std::move(s));
      }
      sentences = dedup(sentences);
      const SpellingDictionary dictionary = load_dictionary_reporting(dict_path, err);
      const auto pairs = build_parallel_corpus(sentences, dictionary, config.workers);
      {
        auto file = open_output(target);
        write_parallel_tsv(pairs, file);
      }
      if (!insert_m2.empty()) {
        std::vector<M2Document> docs;
        docs.reserve(pairs.size());
        for (const ParallelPair& pair : pairs) {
          M2Document doc{tokenize_words(pair.source), pair.edits};
          for (EditSpan& e : doc.edits) e.error_type = classify(e, doc.source_tokens);
          docs.push_back(std::move(doc));
        }
        auto file = open_output(insert_m2);
        write_m2(docs, file);
      }
      const auto edited = std::count_if(pairs.begin(), pairs.end(),
                                        [](const ParallelPair& p) { return !p.edits.empty(); });
      out << pairs.size() << " sentences, " << edited << " with insertions -> "
          << target.string() << '\n';
    } else if (*annotate_cmd) {
      if (!base_url.empty()) config.endpoint.base_url = base_url;
      if (!model.empty()) config.endpoint.model = model;
      if (concurrency > 0) config.endpoint.concurrency = concurrency;
      if (max_attempts > 0) config.endpoint.retry.max_attempts = max_attempts;
      config.prompt_file = or_default(annotate_prompt, config.prompt_file);
      config.checkpoint = or_default(annotate_checkpoint, config.checkpoint);
      require_file(annotate_in, "input");

      AnnotationJob job;
      std::ifstream in(annotate_in, std::ios::binary);
      job.sentences = read_sentences(in);
      if (!config.prompt_file.empty()) {
        require_file(config.prompt_file, "prompt file");
        job.prompt_template = read_text(config.prompt_file);
        while (!job.prompt_template.empty() && job.prompt_template.back() == '\n') {
          job.prompt_template.pop_back();
        }
      }
      job.endpoint = config.endpoint;
      job.checkpoint = config.checkpoint;
      if (!job.checkpoint.empty() && job.checkpoint.has_parent_path()) {
        fs::create_directories(job.checkpoint.parent_path());
      }

      const auto records = annotate_batch(job);
      auto pairs = open_output(annotate_out);
      const fs::path rejects_path = annotate_rejects.empty()
                                        ? fs::path(annotate_out.string() + ".rejects")
                                        : annotate_rejects;
      auto rejects = open_output(rejects_path);
      export_pairs(records, pairs, rejects);
      std::map<AnnotationStatus, std::size_t> by_status;
      for (const auto& r : records) ++by_status[r.status];
      out << records.size() << " sentences: " << by_status[AnnotationStatus::kOk] << " ok, "
          << by_status[AnnotationStatus::kRefused] << " refused, "
          << by_status[AnnotationStatus::kTransportError] << " transport errors\n";
    } else if (*m2_cmd) {
      require_file(m2_in, "parallel corpus");
      const auto pairs = load_parallel_tsv(m2_in);
      auto file = open_output(m2_out);
      write_m2(to_m2(pairs), file);
    } else if (*score_cmd) {
      if (!mode_name.empty()) config.score_mode = *parse_score_mode(mode_name);
      require_file(gold_path, "gold M2");
      require_file(hyp_path, "hypothesis M2");
      const M2Parse gold = parse_m2(gold_path);
      const M2Parse hyp = parse_m2(hyp_path);
      for (const auto* parse : {&gold, &hyp}) {
        if (!parse->rejected.empty()) {
          const M2Issue& issue = parse->rejected.front();
          throw DataError("document " + std::to_string(issue.document) + ": " +
                              issue.message,
                          issue.line);
        }
      }
      ScoreOptions options;
      options.workers = config.workers;
      out << format_scores(score(gold.documents, hyp.documents, config.score_mode, options));
    } else if (*tweets_cmd) {
      require_file(tweets_gold, "gold sentences");
      require_file(tweets_hyp, "hypothesis sentences");
      const TweetSets sets = postprocess_tweets(read_lines(tweets_gold), read_lines(tweets_hyp));
      auto gold_file = open_output(tweets_gold_out);
      for (const auto& s : sets.gold) gold_file << s << '\n';
      auto hyp_file = open_output(tweets_hyp_out);
      for (const auto& s : sets.hyp) hyp_file << s << '\n';
    } else if (*stats_cmd) {
      if (stats_corpus.empty() && stats_dict.empty()) {
        throw ConfigError("stats needs --corpus and/or --dictionary");
      }
      std::vector<std::pair<std::string, std::string>> rows;
      if (!stats_corpus.empty()) {
        require_file(stats_corpus, "corpus");
        const auto corpus = load_corpus(stats_corpus);
        std::size_t tokens = 0, sentences = 0;
        std::vector<std::string> all_sentences;
        for (const Document& doc : corpus) {
          tokens += tokenize_words(doc.text).size();
          for (std::string& s : split_sentences(doc.text)) {
            ++sentences;
            all_sentences.push_back(std::move(s));
          }
        }
        const WordIndex index = build_word_index(corpus, config.workers);
        rows.emplace_back("corpus.documents", std::to_string(corpus.size()));
        rows.emplace_back("corpus.tokens", std::to_string(tokens));
        rows.emplace_back("corpus.distinct_words", std::to_string(index.size()));
        rows.emplace_back("corpus.sentences", std::to_string(sentences));
        rows.emplace_back("corpus.unique_sentences",
                          std::to_string(dedup(all_sentences).size()));
      }
      if (!stats_dict.empty()) {
        require_file(stats_dict, "dictionary");
        const DictionaryLoad load = load_dictionary(stats_dict);
        std::map<std::string, std::size_t> by_provenance;
        std::size_t phrases = 0;
        std::uint32_t last_iteration = 0;
        for (const auto& [key, entry] : load.dictionary.entries()) {
          ++by_provenance[std::string(to_string(entry.provenance))];
          if (entry.incorrect.size() > 1 || entry.correct.size() > 1) ++phrases;
          last_iteration = std::max(last_iteration, entry.iteration);
        }
        rows.emplace_back("dictionary.entries", std::to_string(load.dictionary.size()));
        rows.emplace_back("dictionary.phrase_entries", std::to_string(phrases));
        for (const char* p : {"manual", "deasciifier", "spellchecker", "llm"}) {
          rows.emplace_back(std::string("dictionary.provenance.") + p,
                            std::to_string(by_provenance[p]));
        }
        rows.emplace_back("dictionary.max_iteration", std::to_string(last_iteration));
        rows.emplace_back("dictionary.rejected_rows", std::to_string(load.rejected.size()));
        rows.emplace_back("dictionary.conflicts", std::to_string(load.conflicts.size()));
      }
      print_table(out, rows);
      if (!stats_tsv.empty()) {
        auto file = open_output(stats_tsv);
        for (const auto& [name, value] : rows) file << name << '\t' << value << '\n';
      }
    }
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace gecsynth::cli
