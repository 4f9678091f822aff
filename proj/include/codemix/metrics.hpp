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

#ifndef CODEMIX_METRICS_HPP_
#define CODEMIX_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace codemix {

using TokenList = std::vector<std::string>;

struct BleuOptions {
  int max_n = 4;
  // Zero precisions are replaced by 1/(2 * corpus n-gram count); with
  // smoothing off any zero precision makes the score 0.
  bool smooth = true;
};

// Corpus BLEU in [0, 1]: pooled clipped n-gram precisions, geometric mean,
// brevity penalty min(1, e^(1 - r/c)).
double bleu(const std::vector<TokenList>& hypotheses,
            const std::vector<TokenList>& references,
            const BleuOptions& options = {});

struct TerResult {
  uint64_t edits = 0;
  double rate = 0.0;
};

// Translation edit rate: Levenshtein distance plus a greedy block-shift
// search. A shifted span must match the reference somewhere; each shift
// costs one edit and is applied only while it lowers the total.
TerResult ter(const TokenList& hypothesis, const TokenList& reference);

// Rater-count table, items x categories; every row must sum to the same
// number of raters.
double fleiss_kappa(const std::vector<std::vector<int>>& table);

struct SentenceEval {
  size_t id = 0;  // 1-based input line number
  double bleu = 0.0;
  uint64_t edits = 0;
  size_t ref_tokens = 0;
  double ter = 0.0;
};

struct EvalReport {
  double bleu = 0.0;       // in [0, 1]
  double ter = 0.0;        // total edits / total reference tokens
  size_t n_sentences = 0;
  uint64_t total_edits = 0;
  uint64_t total_ref_tokens = 0;
  std::vector<SentenceEval> sentences;
};

// Line-aligned UTF-8 files, tokenized with the shared tokenizer. The
// optional id set (1-based line numbers) restricts scoring to a subset.
EvalReport evaluate_corpus(const std::string& hyp_path,
                           const std::string& ref_path,
                           const std::set<size_t>* ids = nullptr);

EvalReport evaluate_pairs(const std::vector<TokenList>& hypotheses,
                          const std::vector<TokenList>& references);

struct JudgmentRecord {
  std::string sentence_id;
  int adequacy = 1;  // 1..5
  int fluency = 1;   // 1..5
  std::string judge;
};

// TSV: id<TAB>adequacy<TAB>fluency<TAB>judge.
std::vector<JudgmentRecord> load_judgments(const std::string& path);

struct JudgmentSummary {
  double mean_adequacy = 0.0;
  double mean_fluency = 0.0;
  size_t n_records = 0;
};

JudgmentSummary summarize_judgments(const std::vector<JudgmentRecord>& records);

}  // namespace codemix

#endif  // CODEMIX_METRICS_HPP_
