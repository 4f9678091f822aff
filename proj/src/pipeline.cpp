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

#include "codemix/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "codemix/log.hpp"
#include "codemix/model_io.hpp"

namespace codemix {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

Token classify_surface(const std::string& surface) {
  return {surface,
          is_punct_token(surface) ? TokenKind::Punct : TokenKind::Word};
}

template <class Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(name) + " stage: " + e.what());
  }
}

}  // namespace

const char* pipeline_mode_name(PipelineMode mode) {
  return mode == PipelineMode::Cmt1 ? "cmt1" : "cmt2";
}

PipelineMode parse_pipeline_mode(const std::string& name) {
  if (name == "cmt1") return PipelineMode::Cmt1;
  if (name == "cmt2") return PipelineMode::Cmt2;
  raise(ErrorKind::ConfigError, "unknown mode '" + name + "'");
}

PipelineConfig PipelineConfig::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorKind::ConfigError, "cannot open config " + path);
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    raise(ErrorKind::ConfigError, path + ": " + e.what());
  }
  PipelineConfig config;
  config.tagger_model = doc.value("tagger_model", "");
  config.translit_model = doc.value("translit_model", "");
  config.mt_model = doc.value("mt_model", "");
  config.pl = doc.value("pl", "");
  config.bn_trans = doc.value("bn_trans", "");
  config.lm = doc.value("lm", "");
  if (doc.contains("mode")) {
    config.mode = parse_pipeline_mode(doc.at("mode").get<std::string>());
  }
  config.trace = doc.value("trace", false);
  return config;
}

void PipelineConfig::validate() const {
  auto require = [](const std::string& path, const char* what) {
    if (path.empty()) {
      raise(ErrorKind::ConfigError, std::string(what) + " path not set");
    }
    if (!std::filesystem::exists(path)) {
      raise(ErrorKind::ConfigError,
            std::string(what) + " file missing: " + path);
    }
  };
  require(tagger_model, "tagger model");
  require(translit_model, "transliteration model");
  require(mt_model, "translation model");
  require(pl, "PL lexicon");
  require(bn_trans, "BN_TRANS lexicon");
  if (mode == PipelineMode::Cmt2) {
    require(lm, "language model");
  }
}

Pipeline::Pipeline(TaggerModel tagger, TranslitModel translit, MtModel mt,
                   ParallelLexicon pl, ParallelLexicon bn_trans,
                   std::optional<NgramLM> lm, PipelineMode mode)
    : tagger_(std::move(tagger)),
      translit_(std::move(translit)),
      mt_(std::move(mt)),
      pl_(std::move(pl)),
      bn_trans_(std::move(bn_trans)),
      lm_(std::move(lm)),
      mode_(mode) {
  if (mode_ == PipelineMode::Cmt2 && !lm_.has_value()) {
    raise(ErrorKind::ConfigError, "CMT2 requires a language model");
  }
}

Pipeline Pipeline::load(const PipelineConfig& config) {
  config.validate();
  TaggerModel tagger = load_tagger_model(config.tagger_model);
  TranslitModel translit{load_seq2seq_model(config.translit_model, "translit")};
  MtModel mt{load_seq2seq_model(config.mt_model, "mt")};
  ParallelLexicon pl =
      ParallelLexicon::load(config.pl, "PL", "roman->itrans");
  ParallelLexicon bn_trans =
      ParallelLexicon::load(config.bn_trans, "BN_TRANS", "itrans->native");
  std::optional<NgramLM> lm;
  if (!config.lm.empty()) lm = NgramLM::load(config.lm);
  return Pipeline(std::move(tagger), std::move(translit), std::move(mt),
                  std::move(pl), std::move(bn_trans), std::move(lm),
                  config.mode);
}

std::pair<std::string, TraceRecord> Pipeline::translate(
    const std::string& sentence) const {
  TraceRecord trace;
  trace.input = sentence;

  const auto t_tag = Clock::now();
  const std::vector<Token> tokens =
      stage("tokenize", [&] { return tokenize(sentence); });
  trace.tagged = stage("tag", [&] { return tag_sentence(tagger_, tokens); });
  const std::vector<Segment> segments =
      stage("segment", [&] { return codemix::segment(trace.tagged); });
  trace.tag_ms = ms_since(t_tag);

  const auto t_route = Clock::now();
  std::vector<Token> joined_tokens;
  for (const Segment& seg : segments) {
    SegmentTrace st;
    st.tag = seg.tag;
    for (const TaggedToken& t : seg.tokens) {
      st.input_tokens.push_back(t.token.surface);
    }
    if (seg.tag == LangTag::Bn) {
      st.route = "transliterate";
      const auto words = stage("transliterate", [&] {
        return transliterate_segment(seg, pl_, bn_trans_, translit_);
      });
      for (const TranslitWord& w : words) {
        st.output_tokens.push_back(w.text);
        st.provenance.emplace_back(provenance_name(w.provenance));
        joined_tokens.push_back(
            {w.text, w.provenance == Provenance::Punct ? TokenKind::Punct
                                                       : TokenKind::Word});
        if (w.provenance != Provenance::Punct) {
          ++trace.bn_words;
          if (w.provenance == Provenance::Lexicon) ++trace.lexicon_hits;
          if (w.provenance == Provenance::Echo) ++trace.echo_count;
        }
      }
    } else {
      st.route = "translate";
      // Punctuation never enters the translator; word runs between
      // punctuation marks are translated as free text.
      std::vector<std::string> run;
      auto flush_run = [&] {
        if (run.empty()) return;
        std::string text;
        for (size_t i = 0; i < run.size(); ++i) {
          if (i > 0) text.push_back(' ');
          text += run[i];
        }
        const std::string translated =
            stage("translate", [&] { return translate_segment(mt_, text); });
        if (translated.empty()) {
          log_warn("translate: empty decode for '" + text + "', echoing");
          for (const std::string& w : run) {
            st.output_tokens.push_back(w);
            st.provenance.emplace_back(provenance_name(Provenance::Echo));
            joined_tokens.push_back({w, TokenKind::Word});
            ++trace.echo_count;
          }
        } else {
          for (const Token& t :
               stage("translate", [&] { return tokenize(translated); })) {
            st.output_tokens.push_back(t.surface);
            st.provenance.emplace_back(
                provenance_name(t.kind == TokenKind::Punct
                                    ? Provenance::Punct
                                    : Provenance::Translated));
            joined_tokens.push_back(t);
          }
        }
        run.clear();
      };
      for (const TaggedToken& t : seg.tokens) {
        if (t.token.kind == TokenKind::Punct) {
          flush_run();
          st.output_tokens.push_back(t.token.surface);
          st.provenance.emplace_back(provenance_name(Provenance::Punct));
          joined_tokens.push_back(t.token);
        } else {
          run.push_back(t.token.surface);
        }
      }
      flush_run();
    }
    trace.segments.push_back(std::move(st));
  }
  trace.route_ms = ms_since(t_route);

  trace.joined = detokenize(joined_tokens);
  trace.output = trace.joined;

  if (mode_ == PipelineMode::Cmt2) {
    const auto t_reorder = Clock::now();
    std::vector<std::string> surfaces;
    for (const Token& t : joined_tokens) surfaces.push_back(t.surface);
    const std::vector<std::string> reordered =
        stage("reorder", [&] { return reorder(*lm_, surfaces); });
    std::vector<Token> reordered_tokens;
    for (const std::string& s : reordered) {
      reordered_tokens.push_back(classify_surface(s));
    }
    trace.reordered = detokenize(reordered_tokens);
    trace.output = trace.reordered;
    trace.reorder_ms = ms_since(t_reorder);
  }
  return {trace.output, trace};
}

BatchSummary Pipeline::run_batch(const std::string& input_path,
                                 const std::string& output_path,
                                 const std::string& trace_path) const {
  const std::vector<std::string> lines = read_lines(input_path);
  std::vector<std::string> out_lines;
  std::vector<std::string> trace_lines;
  BatchSummary summary;
  summary.lines = lines.size();

  for (size_t i = 0; i < lines.size(); ++i) {
    try {
      auto [output, trace] = translate(lines[i]);
      out_lines.push_back(output);
      if (!trace_path.empty()) trace_lines.push_back(trace.to_json());
      for (const SegmentTrace& st : trace.segments) {
        (st.tag == LangTag::Bn ? summary.bn_segments : summary.en_segments) += 1;
      }
      summary.bn_words += trace.bn_words;
      summary.lexicon_hits += trace.lexicon_hits;
      summary.echo_count += trace.echo_count;
    } catch (const Error& e) {
      log_error("line " + std::to_string(i + 1) + ": " + e.what());
      out_lines.emplace_back();
      if (!trace_path.empty()) {
        json j;
        j["input"] = lines[i];
        j["error"] = e.what();
        trace_lines.push_back(j.dump());
      }
      ++summary.errors;
    }
  }

  write_lines(output_path, out_lines);
  if (!trace_path.empty()) write_lines(trace_path, trace_lines);
  return summary;
}

std::string TraceRecord::to_json() const {
  json j;
  j["input"] = input;
  json tagged_json = json::array();
  for (const TaggedToken& t : tagged) {
    tagged_json.push_back({{"token", t.token.surface},
                           {"kind", t.token.kind == TokenKind::Punct
                                        ? "punct"
                                        : "word"},
                           {"tag", lang_tag_name(t.tag)},
                           {"score", t.score}});
  }
  j["tagged"] = std::move(tagged_json);
  json segments_json = json::array();
  for (const SegmentTrace& st : segments) {
    segments_json.push_back({{"tag", lang_tag_name(st.tag)},
                             {"route", st.route},
                             {"input", st.input_tokens},
                             {"output", st.output_tokens},
                             {"provenance", st.provenance}});
  }
  j["segments"] = std::move(segments_json);
  j["joined"] = joined;
  if (!reordered.empty()) j["reordered"] = reordered;
  j["output"] = output;
  j["timing_ms"] = {{"tag", tag_ms}, {"route", route_ms}, {"reorder", reorder_ms}};
  j["counters"] = {{"bn_words", bn_words},
                   {"lexicon_hits", lexicon_hits},
                   {"echo", echo_count}};
  return j.dump();
}

std::string TraceRecord::pretty() const {
  std::ostringstream out;
  out << "input:     " << input << '\n';
  out << "tagged:    ";
  for (size_t i = 0; i < tagged.size(); ++i) {
    if (i > 0) out << ' ';
    out << tagged[i].token.surface << '/' << lang_tag_name(tagged[i].tag);
  }
  out << '\n';
  out << "segments:  " << segments.size() << '\n';
  for (size_t i = 0; i < segments.size(); ++i) {
    const SegmentTrace& st = segments[i];
    out << "  [" << i + 1 << "] " << lang_tag_name(st.tag) << " \"";
    for (size_t k = 0; k < st.input_tokens.size(); ++k) {
      if (k > 0) out << ' ';
      out << st.input_tokens[k];
    }
    out << "\" -> " << st.route << " -> \"";
    for (size_t k = 0; k < st.output_tokens.size(); ++k) {
      if (k > 0) out << ' ';
      out << st.output_tokens[k] << '(' << st.provenance[k] << ')';
    }
    out << "\"\n";
  }
  out << "joined:    " << joined << '\n';
  if (!reordered.empty()) {
    out << "reordered: " << reordered << '\n';
  }
  out << "output:    " << output << '\n';
  out << "timing:    tag " << tag_ms << " ms, route " << route_ms
      << " ms, reorder " << reorder_ms << " ms\n";
  return out.str();
}

std::string BatchSummary::to_string() const {
  std::ostringstream out;
  out << "lines=" << lines << " errors=" << errors
      << " bn_segments=" << bn_segments << " en_segments=" << en_segments
      << " bn_words=" << bn_words << " lexicon_hits=" << lexicon_hits
      << " lexicon_hit_rate=" << lexicon_hit_rate()
      << " echo_count=" << echo_count;
  return out.str();
}

}  // namespace codemix
