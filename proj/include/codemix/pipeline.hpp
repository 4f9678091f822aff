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

#ifndef CODEMIX_PIPELINE_HPP_
#define CODEMIX_PIPELINE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codemix/lexicon.hpp"
#include "codemix/mt.hpp"
#include "codemix/ngram.hpp"
#include "codemix/tagger.hpp"
#include "codemix/translit.hpp"

namespace codemix {

enum class PipelineMode { Cmt1, Cmt2 };  // without / with token reordering

const char* pipeline_mode_name(PipelineMode mode);
PipelineMode parse_pipeline_mode(const std::string& name);

struct PipelineConfig {
  std::string tagger_model;
  std::string translit_model;
  std::string mt_model;
  std::string pl;
  std::string bn_trans;
  std::string lm;
  PipelineMode mode = PipelineMode::Cmt1;
  bool trace = false;

  static PipelineConfig from_file(const std::string& path);
  // All referenced files must exist; CMT2 additionally needs an LM.
  void validate() const;
};

struct SegmentTrace {
  LangTag tag = LangTag::Bn;
  std::string route;                      // "transliterate" | "translate"
  std::vector<std::string> input_tokens;
  std::vector<std::string> output_tokens;
  std::vector<std::string> provenance;    // parallel to output_tokens
};

// One record per sentence: every stage output in pipeline order, with each
// output word accounted for by exactly one provenance.
struct TraceRecord {
  std::string input;
  std::vector<TaggedToken> tagged;
  std::vector<SegmentTrace> segments;
  std::string joined;
  std::string reordered;  // CMT2 only
  std::string output;
  double tag_ms = 0.0;
  double route_ms = 0.0;
  double reorder_ms = 0.0;
  size_t echo_count = 0;
  size_t bn_words = 0;
  size_t lexicon_hits = 0;

  std::string to_json() const;
  std::string pretty() const;
};

struct BatchSummary {
  size_t lines = 0;
  size_t errors = 0;
  size_t bn_segments = 0;
  size_t en_segments = 0;
  size_t bn_words = 0;
  size_t lexicon_hits = 0;
  size_t echo_count = 0;

  double lexicon_hit_rate() const {
    return bn_words == 0
               ? 0.0
               : static_cast<double>(lexicon_hits) / static_cast<double>(bn_words);
  }
  std::string to_string() const;
};

class Pipeline {
 public:
  Pipeline(TaggerModel tagger, TranslitModel translit, MtModel mt,
           ParallelLexicon pl, ParallelLexicon bn_trans,
           std::optional<NgramLM> lm, PipelineMode mode);

  static Pipeline load(const PipelineConfig& config);

  // tokenize -> tag -> segment -> route -> join (-> reorder for CMT2).
  // Stage failures surface as errors prefixed with the stage name.
  std::pair<std::string, TraceRecord> translate(
      const std::string& sentence) const;

  // Line-aligned batch translation. Per-line errors yield an empty output
  // line and a log entry; processing continues.
  BatchSummary run_batch(const std::string& input_path,
                         const std::string& output_path,
                         const std::string& trace_path = "") const;

  PipelineMode mode() const { return mode_; }

 private:
  TaggerModel tagger_;
  TranslitModel translit_;
  MtModel mt_;
  ParallelLexicon pl_;
  ParallelLexicon bn_trans_;
  std::optional<NgramLM> lm_;
  PipelineMode mode_;
};

}  // namespace codemix

#endif  // CODEMIX_PIPELINE_HPP_
