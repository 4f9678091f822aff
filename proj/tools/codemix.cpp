// Copyright 2026 Codemix Authors
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

#include <cstdio>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "codemix/gradcheck.hpp"
#include "codemix/metrics.hpp"
#include "codemix/model_io.hpp"
#include "codemix/pipeline.hpp"

namespace {

using namespace codemix;

int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::ConfigError ? 2 : 1;
}

std::set<size_t> load_id_set(const std::string& path) {
  std::set<size_t> ids;
  for (const std::string& line : read_lines(path)) {
    if (line.empty()) continue;
    try {
      ids.insert(static_cast<size_t>(std::stoull(line)));
    } catch (const std::exception&) {
      raise(ErrorKind::FormatError, path + ": bad sentence id '" + line + "'");
    }
  }
  return ids;
}

struct PipelineFlags {
  std::string config_path;
  std::string tagger_model, translit_model, mt_model, pl, bn_trans, lm;
  std::string mode = "cmt1";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--config", config_path,
                    "JSON config file; flags override its values");
    cmd->add_option("--tagger-model", tagger_model, "tagger model file");
    cmd->add_option("--translit-model", translit_model,
                    "transliteration model file");
    cmd->add_option("--mt-model", mt_model, "translation model file");
    cmd->add_option("--pl", pl, "PL lexicon (roman\\tITRANS)");
    cmd->add_option("--bn-trans", bn_trans, "BN_TRANS lexicon (ITRANS\\tnative)");
    cmd->add_option("--lm", lm, "language model file (required for cmt2)");
    cmd->add_option("--mode", mode, "cmt1 (no reordering) or cmt2")
        ->check(CLI::IsMember({"cmt1", "cmt2"}));
  }

  PipelineConfig resolve() const {
    PipelineConfig config;
    if (!config_path.empty()) config = PipelineConfig::from_file(config_path);
    if (!tagger_model.empty()) config.tagger_model = tagger_model;
    if (!translit_model.empty()) config.translit_model = translit_model;
    if (!mt_model.empty()) config.mt_model = mt_model;
    if (!pl.empty()) config.pl = pl;
    if (!bn_trans.empty()) config.bn_trans = bn_trans;
    if (!lm.empty()) config.lm = lm;
    config.mode = parse_pipeline_mode(mode);
    return config;
  }
};

int run_train_tagger(const std::string& words_path, const std::string& out,
                     TaggerTrainSpec spec) {
  const auto words = load_tagged_words(words_path);
  const TaggerTrainResult result = train_tagger(words, spec);
  save_tagger_model(out, result.model, spec.to_train_config());
  std::printf("trained tagger on %zu words: accuracy %.4f, final loss %.6f\n",
              words.size(), result.train_accuracy,
              result.log.epoch_loss.back());
  std::printf("model written to %s\n", out.c_str());
  return 0;
}

int run_train_translit(const std::string& lexicon_path, const std::string& out,
                       TranslitTrainSpec spec) {
  const ParallelLexicon bn_trans =
      ParallelLexicon::load(lexicon_path, "BN_TRANS", "itrans->native");
  const TranslitTrainResult result = train_translit(bn_trans, spec);
  TrainConfig config = spec.to_train_config();
  save_seq2seq_model(out, "translit", result.model.net, config);
  std::printf(
      "trained transliterator on %zu entries: exact-match %.4f, "
      "per-char %.4f, final loss %.6f\n",
      bn_trans.size(), result.sequence_accuracy, result.char_accuracy,
      result.log.epoch_loss.back());
  std::printf("model written to %s\n", out.c_str());
  return 0;
}

int run_train_mt(const std::string& pairs_path, const std::string& out,
                 MtTrainSpec spec) {
  const auto pairs = load_parallel_corpus(pairs_path);
  const MtTrainResult result = train_mt(pairs, spec);
  TrainConfig config = spec.to_train_config();
  save_seq2seq_model(out, "mt", result.model.net, config);
  std::printf(
      "trained translator on %zu pairs (%zu skipped): exact-match %.4f, "
      "final loss %.6f\n",
      pairs.size() - result.skipped_too_long, result.skipped_too_long,
      result.sequence_accuracy, result.log.epoch_loss.back());
  std::printf("model written to %s\n", out.c_str());
  return 0;
}

int run_build_lm(const std::string& corpus_path, const std::string& out,
                 double k, int order) {
  if (order != 2 && order != 3) {
    raise(ErrorKind::ConfigError, "--order must be 2 or 3");
  }
  std::vector<std::vector<std::string>> sentences;
  for (const std::string& line : read_lines(corpus_path)) {
    if (line.empty()) continue;
    sentences.push_back(token_surfaces(tokenize(line)));
  }
  const NgramLM lm = NgramLM::build(sentences, k);
  lm.save(out);
  std::printf("built LM over %zu sentences: V=%zu, k=%g\n", sentences.size(),
              lm.vocab_size(), lm.smoothing_k());
  std::printf("model written to %s\n", out.c_str());
  return 0;
}

int run_translate(const PipelineFlags& flags, const std::string& in_path,
                  const std::string& out_path, const std::string& trace_path) {
  const Pipeline pipeline = Pipeline::load(flags.resolve());
  if (!in_path.empty()) {
    const std::string out_file = out_path.empty() ? in_path + ".out" : out_path;
    const BatchSummary summary =
        pipeline.run_batch(in_path, out_file, trace_path);
    std::printf("%s\n", summary.to_string().c_str());
    std::printf("output written to %s\n", out_file.c_str());
    return summary.errors == summary.lines && summary.lines > 0 ? 1 : 0;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) {
      std::printf("\n");
      continue;
    }
    try {
      auto [output, trace] = pipeline.translate(line);
      std::printf("%s\n", output.c_str());
    } catch (const Error& e) {
      log_error(e.what());
      std::printf("\n");
    }
  }
  return 0;
}

int run_trace(const PipelineFlags& flags, const std::string& sentence) {
  const Pipeline pipeline = Pipeline::load(flags.resolve());
  auto [output, trace] = pipeline.translate(sentence);
  std::printf("%s", trace.pretty().c_str());
  return 0;
}

int run_evaluate(const std::string& hyp, const std::string& ref,
                 const std::string& ids_path, const std::string& judgments_path,
                 const std::string& report_path) {
  std::set<size_t> ids;
  const EvalReport report =
      ids_path.empty()
          ? evaluate_corpus(hyp, ref)
          : evaluate_corpus(hyp, ref, &(ids = load_id_set(ids_path)));
  std::printf("sentences: %zu\n", report.n_sentences);
  std::printf("BLEU: %.2f\n", report.bleu * 100.0);
  std::printf("TER:  %.2f\n", report.ter * 100.0);
  if (!judgments_path.empty()) {
    const JudgmentSummary judgments =
        summarize_judgments(load_judgments(judgments_path));
    std::printf("Adequacy: %.2f  Fluency: %.2f  (over %zu judgments)\n",
                judgments.mean_adequacy, judgments.mean_fluency,
                judgments.n_records);
  }
  if (!report_path.empty()) {
    std::vector<std::string> lines;
    lines.push_back("id\tbleu\tedits\tref_tokens\tter");
    char buf[128];
    for (const SentenceEval& s : report.sentences) {
      std::snprintf(buf, sizeof(buf), "%zu\t%.6f\t%llu\t%zu\t%.6f", s.id,
                    s.bleu, static_cast<unsigned long long>(s.edits),
                    s.ref_tokens, s.ter);
      lines.emplace_back(buf);
    }
    write_lines(report_path, lines);
    std::printf("per-sentence report written to %s\n", report_path.c_str());
  }
  return 0;
}

int run_gradcheck(double eps) {
#ifdef CODEMIX_REAL_FLOAT32
  std::fprintf(stderr, "gradcheck requires a double-precision build\n");
  return 1;
#else
  // Tagger-shaped stack.
  const CharVocab vocab =
      build_char_vocab({"abcdefghijklm", "nopqrstuvwxyz"});
  const auto classifier = make_classifier<real_t>(vocab, 15, {35, 25}, 42);
  std::vector<ClassifierSample> words;
  words.push_back({vocab.encode("abcf"), 0});
  words.push_back({vocab.encode("npqrz"), 1});
  const GradCheckReport tagger_report = gradient_check(classifier, words, eps);
  std::printf("tagger 15-35-25-1: max relative error %.3e over %zu entries\n",
              tagger_report.max_rel_error, tagger_report.checked);

  // Small attention seq2seq.
  const CharVocab v6 = build_char_vocab({"abcdef"});
  const auto s2s =
      make_seq2seq<real_t>(v6, v6, {8}, true, EmbeddingMode::OneHot, 0, 7);
  std::vector<IndexPair> pairs;
  pairs.push_back({v6.encode("abc"), v6.encode("fed")});
  pairs.push_back({v6.encode("fa"), v6.encode("cb")});
  const GradCheckReport s2s_report = gradient_check(s2s, pairs, eps);
  std::printf("seq2seq vocab-6 hidden-8: max relative error %.3e over %zu entries\n",
              s2s_report.max_rel_error, s2s_report.checked);

  const bool ok =
      tagger_report.max_rel_error <= 1e-5 && s2s_report.max_rel_error <= 1e-5;
  std::printf("%s\n", ok ? "PASS (<= 1e-5)" : "FAIL (> 1e-5)");
  return ok ? 0 : 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"code-mixed to monolingual translation toolkit"};
  app.require_subcommand(1);

  // train-tagger
  auto* tagger_cmd =
      app.add_subcommand("train-tagger", "train the Bn/En word tagger");
  std::string tagger_words, tagger_out = "tagger.json";
  TaggerTrainSpec tagger_spec;
  tagger_cmd->add_option("--words", tagger_words, "word\\ttag TSV")->required();
  tagger_cmd->add_option("--out", tagger_out, "output model file");
  tagger_cmd->add_option("--epochs", tagger_spec.epochs);
  tagger_cmd->add_option("--batch", tagger_spec.batch_size);
  tagger_cmd->add_option("--lr", tagger_spec.learning_rate);
  tagger_cmd->add_option("--seed", tagger_spec.seed);
  tagger_cmd->add_option("--threshold", tagger_spec.threshold);

  // train-translit
  auto* translit_cmd = app.add_subcommand(
      "train-translit", "train the back-transliteration fallback model");
  std::string translit_lexicon, translit_out = "translit.json";
  TranslitTrainSpec translit_spec;
  translit_cmd->add_option("--bn-trans", translit_lexicon, "ITRANS\\tnative TSV")
      ->required();
  translit_cmd->add_option("--out", translit_out, "output model file");
  translit_cmd->add_option("--latent", translit_spec.latent_dim);
  translit_cmd->add_option("--epochs", translit_spec.epochs);
  translit_cmd->add_option("--batch", translit_spec.batch_size);
  translit_cmd->add_option("--lr", translit_spec.learning_rate);
  translit_cmd->add_option("--seed", translit_spec.seed);

  // train-mt
  auto* mt_cmd =
      app.add_subcommand("train-mt", "train the En->Bn character translator");
  std::string mt_pairs, mt_out = "mt.json";
  MtTrainSpec mt_spec;
  mt_cmd->add_option("--pairs", mt_pairs, "source\\ttarget TSV")->required();
  mt_cmd->add_option("--out", mt_out, "output model file");
  mt_cmd->add_option("--latent", mt_spec.latent_dim);
  mt_cmd->add_option("--epochs", mt_spec.epochs);
  mt_cmd->add_option("--batch", mt_spec.batch_size);
  mt_cmd->add_option("--lr", mt_spec.learning_rate);
  mt_cmd->add_option("--max-chars", mt_spec.max_chars);
  mt_cmd->add_option("--seed", mt_spec.seed);

  // build-lm
  auto* lm_cmd =
      app.add_subcommand("build-lm", "count n-grams over a target corpus");
  std::string lm_corpus, lm_out = "lm.json";
  double lm_k = 1.0;
  int lm_order = 3;
  lm_cmd->add_option("--corpus", lm_corpus, "sentence-per-line text")
      ->required();
  lm_cmd->add_option("--out", lm_out, "output LM file");
  lm_cmd->add_option("--k", lm_k, "add-k smoothing constant");
  lm_cmd->add_option("--order", lm_order, "maximum scoring order (2 or 3)");

  // translate
  auto* translate_cmd = app.add_subcommand(
      "translate", "translate code-mixed text (stdin or --in file)");
  PipelineFlags translate_flags;
  translate_flags.add_to(translate_cmd);
  std::string translate_in, translate_out, translate_trace;
  translate_cmd->add_option("--in", translate_in, "input file, one sentence per line");
  translate_cmd->add_option("--out", translate_out, "output file");
  translate_cmd->add_option("--trace", translate_trace,
                            "write per-sentence JSON trace records here");

  // trace
  auto* trace_cmd =
      app.add_subcommand("trace", "show every pipeline stage for one sentence");
  PipelineFlags trace_flags;
  trace_flags.add_to(trace_cmd);
  std::string trace_sentence;
  trace_cmd->add_option("sentence", trace_sentence, "input sentence")
      ->required();

  // evaluate
  auto* eval_cmd =
      app.add_subcommand("evaluate", "corpus BLEU/TER against references");
  std::string eval_hyp, eval_ref, eval_ids, eval_judgments, eval_report;
  eval_cmd->add_option("--hyp", eval_hyp, "hypothesis file")->required();
  eval_cmd->add_option("--ref", eval_ref, "reference file")->required();
  eval_cmd->add_option("--ids", eval_ids, "1-based line ids to keep");
  eval_cmd->add_option("--judgments", eval_judgments,
                       "adequacy/fluency judgment TSV");
  eval_cmd->add_option("--out", eval_report, "per-sentence TSV report");

  // gradcheck
  auto* grad_cmd = app.add_subcommand(
      "gradcheck", "finite-difference check of the training gradients");
  double grad_eps = kGradCheckEps;
  grad_cmd->add_option("--eps", grad_eps, "central-difference step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (tagger_cmd->parsed()) {
      return run_train_tagger(tagger_words, tagger_out, tagger_spec);
    }
    if (translit_cmd->parsed()) {
      return run_train_translit(translit_lexicon, translit_out, translit_spec);
    }
    if (mt_cmd->parsed()) {
      return run_train_mt(mt_pairs, mt_out, mt_spec);
    }
    if (lm_cmd->parsed()) {
      return run_build_lm(lm_corpus, lm_out, lm_k, lm_order);
    }
    if (translate_cmd->parsed()) {
      return run_translate(translate_flags, translate_in, translate_out,
                           translate_trace);
    }
    if (trace_cmd->parsed()) {
      return run_trace(trace_flags, trace_sentence);
    }
    if (eval_cmd->parsed()) {
      return run_evaluate(eval_hyp, eval_ref, eval_ids, eval_judgments,
                          eval_report);
    }
    if (grad_cmd->parsed()) {
      return run_gradcheck(grad_eps);
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
