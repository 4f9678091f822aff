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

#include "codemix/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "codemix/error.hpp"
#include "codemix/text.hpp"

namespace codemix {

namespace {

constexpr char kSep = '\x1f';

std::string join_gram(const TokenList& tokens, size_t begin, size_t len) {
  std::string key;
  for (size_t i = begin; i < begin + len; ++i) {
    if (i > begin) key.push_back(kSep);
    key += tokens[i];
  }
  return key;
}

std::unordered_map<std::string, uint64_t> ngram_counts(const TokenList& tokens,
                                                       size_t n) {
  std::unordered_map<std::string, uint64_t> counts;
  if (tokens.size() >= n) {
    for (size_t i = 0; i + n <= tokens.size(); ++i) {
      counts[join_gram(tokens, i, n)] += 1;
    }
  }
  return counts;
}

uint64_t levenshtein(const TokenList& a, const TokenList& b) {
  const size_t n = a.size();
  const size_t m = b.size();
  std::vector<uint64_t> prev(m + 1), curr(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = j;
  for (size_t i = 1; i <= n; ++i) {
    curr[0] = i;
    for (size_t j = 1; j <= m; ++j) {
      const uint64_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, sub});
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

bool span_occurs_in(const TokenList& haystack, const TokenList& span) {
  if (span.size() > haystack.size()) return false;
  for (size_t i = 0; i + span.size() <= haystack.size(); ++i) {
    if (std::equal(span.begin(), span.end(), haystack.begin() + static_cast<ptrdiff_t>(i))) {
      return true;
    }
  }
  return false;
}

TokenList apply_shift(const TokenList& tokens, size_t begin, size_t len,
                      size_t dest) {
  TokenList rest;
  rest.reserve(tokens.size());
  rest.insert(rest.end(), tokens.begin(), tokens.begin() + static_cast<ptrdiff_t>(begin));
  rest.insert(rest.end(), tokens.begin() + static_cast<ptrdiff_t>(begin + len),
              tokens.end());
  TokenList out;
  out.reserve(tokens.size());
  out.insert(out.end(), rest.begin(), rest.begin() + static_cast<ptrdiff_t>(dest));
  out.insert(out.end(), tokens.begin() + static_cast<ptrdiff_t>(begin),
             tokens.begin() + static_cast<ptrdiff_t>(begin + len));
  out.insert(out.end(), rest.begin() + static_cast<ptrdiff_t>(dest), rest.end());
  return out;
}

constexpr size_t kMaxShiftSpan = 10;

}  // namespace

double bleu(const std::vector<TokenList>& hypotheses,
            const std::vector<TokenList>& references,
            const BleuOptions& options) {
  if (hypotheses.size() != references.size()) {
    raise(ErrorKind::DataError,
          "bleu: " + std::to_string(hypotheses.size()) + " hypotheses vs " +
              std::to_string(references.size()) + " references");
  }
  if (hypotheses.empty()) {
    raise(ErrorKind::DataError, "bleu: no sentence pairs");
  }
  const size_t max_n = static_cast<size_t>(options.max_n);

  std::vector<uint64_t> matched(max_n, 0), total(max_n, 0);
  uint64_t hyp_len = 0, ref_len = 0;
  for (size_t i = 0; i < hypotheses.size(); ++i) {
    const TokenList& hyp = hypotheses[i];
    const TokenList& ref = references[i];
    hyp_len += hyp.size();
    ref_len += ref.size();
    for (size_t n = 1; n <= max_n; ++n) {
      if (hyp.size() < n) continue;
      total[n - 1] += hyp.size() - n + 1;
      const auto ref_counts = ngram_counts(ref, n);
      for (const auto& [gram, count] : ngram_counts(hyp, n)) {
        const auto it = ref_counts.find(gram);
        if (it != ref_counts.end()) {
          matched[n - 1] += std::min(count, it->second);
        }
      }
    }
  }
  if (hyp_len == 0) return 0.0;

  double log_sum = 0.0;
  for (size_t n = 0; n < max_n; ++n) {
    double p;
    if (matched[n] > 0) {
      p = static_cast<double>(matched[n]) / static_cast<double>(total[n]);
    } else if (options.smooth) {
      p = 1.0 / (2.0 * static_cast<double>(std::max<uint64_t>(total[n], 1)));
    } else {
      return 0.0;
    }
    log_sum += std::log(p);
  }
  const double ratio =
      static_cast<double>(ref_len) / static_cast<double>(hyp_len);
  const double bp = hyp_len >= ref_len ? 1.0 : std::exp(1.0 - ratio);
  return bp * std::exp(log_sum / static_cast<double>(max_n));
}

TerResult ter(const TokenList& hypothesis, const TokenList& reference) {
  if (reference.empty()) {
    raise(ErrorKind::DataError, "ter: empty reference");
  }
  TokenList current(hypothesis);
  uint64_t shifts = 0;
  uint64_t base = levenshtein(current, reference);

  while (base > 0 && !current.empty()) {
    uint64_t best = base;
    TokenList best_tokens;
    const size_t max_len = std::min(current.size(), kMaxShiftSpan);
    for (size_t len = 1; len <= max_len; ++len) {
      for (size_t begin = 0; begin + len <= current.size(); ++begin) {
        const TokenList span(
            current.begin() + static_cast<ptrdiff_t>(begin),
            current.begin() + static_cast<ptrdiff_t>(begin + len));
        if (!span_occurs_in(reference, span)) continue;
        for (size_t dest = 0; dest <= current.size() - len; ++dest) {
          if (dest == begin) continue;
          TokenList candidate = apply_shift(current, begin, len, dest);
          if (candidate == current) continue;
          const uint64_t d = levenshtein(candidate, reference);
          if (d < best) {
            best = d;
            best_tokens = std::move(candidate);
          }
        }
      }
    }
    // A shift costs one edit and must lower the remaining edit distance,
    // so the running total never exceeds the shift-free distance.
    if (best_tokens.empty() || best >= base) break;
    current = std::move(best_tokens);
    ++shifts;
    base = best;
  }

  TerResult result;
  result.edits = shifts + base;
  result.rate =
      static_cast<double>(result.edits) / static_cast<double>(reference.size());
  return result;
}

double fleiss_kappa(const std::vector<std::vector<int>>& table) {
  if (table.empty()) {
    raise(ErrorKind::DataError, "fleiss_kappa: no items");
  }
  const size_t n_categories = table[0].size();
  if (n_categories < 1) {
    raise(ErrorKind::DataError, "fleiss_kappa: no categories");
  }
  long long n_raters = 0;
  for (int c : table[0]) {
    if (c < 0) raise(ErrorKind::DataError, "fleiss_kappa: negative count");
    n_raters += c;
  }
  if (n_raters < 2) {
    raise(ErrorKind::DataError, "fleiss_kappa: needs at least 2 raters");
  }

  const double n = static_cast<double>(n_raters);
  const double big_n = static_cast<double>(table.size());
  double p_bar = 0.0;
  std::vector<double> p_cat(n_categories, 0.0);
  for (const auto& row : table) {
    if (row.size() != n_categories) {
      raise(ErrorKind::DataError, "fleiss_kappa: ragged table");
    }
    long long row_sum = 0;
    double agree = 0.0;
    for (size_t j = 0; j < n_categories; ++j) {
      if (row[j] < 0) {
        raise(ErrorKind::DataError, "fleiss_kappa: negative count");
      }
      row_sum += row[j];
      agree += static_cast<double>(row[j]) * row[j];
      p_cat[j] += row[j];
    }
    if (row_sum != n_raters) {
      raise(ErrorKind::DataError,
            "fleiss_kappa: rows must all sum to the rater count");
    }
    p_bar += (agree - n) / (n * (n - 1.0));
  }
  p_bar /= big_n;

  double p_e = 0.0;
  for (double c : p_cat) {
    const double p = c / (big_n * n);
    p_e += p * p;
  }
  if (p_e >= 1.0) {
    if (p_bar >= 1.0) return 1.0;
    raise(ErrorKind::DegenerateError,
          "fleiss_kappa: expected agreement is 1 with observed < 1");
  }
  return (p_bar - p_e) / (1.0 - p_e);
}

EvalReport evaluate_pairs(const std::vector<TokenList>& hypotheses,
                          const std::vector<TokenList>& references) {
  if (hypotheses.size() != references.size()) {
    raise(ErrorKind::DataError, "evaluate: hypothesis/reference count mismatch");
  }
  if (hypotheses.empty()) {
    raise(ErrorKind::DataError, "evaluate: nothing to score");
  }
  EvalReport report;
  report.n_sentences = hypotheses.size();
  report.bleu = bleu(hypotheses, references);
  for (size_t i = 0; i < hypotheses.size(); ++i) {
    SentenceEval s;
    s.id = i + 1;
    s.ref_tokens = references[i].size();
    const TerResult t = ter(hypotheses[i], references[i]);
    s.edits = t.edits;
    s.ter = t.rate;
    s.bleu = bleu({hypotheses[i]}, {references[i]});
    report.total_edits += t.edits;
    report.total_ref_tokens += references[i].size();
    report.sentences.push_back(s);
  }
  report.ter = static_cast<double>(report.total_edits) /
               static_cast<double>(report.total_ref_tokens);
  return report;
}

EvalReport evaluate_corpus(const std::string& hyp_path,
                           const std::string& ref_path,
                           const std::set<size_t>* ids) {
  const std::vector<std::string> hyp_lines = read_lines(hyp_path);
  const std::vector<std::string> ref_lines = read_lines(ref_path);
  if (hyp_lines.size() != ref_lines.size()) {
    raise(ErrorKind::DataError,
          "evaluate: " + hyp_path + " has " + std::to_string(hyp_lines.size()) +
              " lines, " + ref_path + " has " +
              std::to_string(ref_lines.size()));
  }

  auto tokenize_line = [](const std::string& line) -> TokenList {
    for (char c : line) {
      if (c != ' ' && c != '\t') return token_surfaces(tokenize(line));
    }
    return {};
  };

  std::vector<TokenList> hyps, refs;
  std::vector<size_t> kept_ids;
  for (size_t i = 0; i < hyp_lines.size(); ++i) {
    const size_t id = i + 1;
    if (ids != nullptr && ids->count(id) == 0) continue;
    hyps.push_back(tokenize_line(hyp_lines[i]));
    refs.push_back(tokenize_line(ref_lines[i]));
    kept_ids.push_back(id);
  }
  EvalReport report = evaluate_pairs(hyps, refs);
  for (size_t i = 0; i < report.sentences.size(); ++i) {
    report.sentences[i].id = kept_ids[i];
  }
  return report;
}

std::vector<JudgmentRecord> load_judgments(const std::string& path) {
  std::vector<JudgmentRecord> records;
  size_t line_no = 0;
  for (const std::string& line : read_lines(path)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    size_t begin = 0;
    while (true) {
      const size_t tab = line.find('\t', begin);
      fields.push_back(line.substr(begin, tab - begin));
      if (tab == std::string::npos) break;
      begin = tab + 1;
    }
    if (fields.size() != 4) {
      raise(ErrorKind::FormatError,
            path + ":" + std::to_string(line_no) + ": expected 4 fields");
    }
    JudgmentRecord record;
    record.sentence_id = fields[0];
    try {
      record.adequacy = std::stoi(fields[1]);
      record.fluency = std::stoi(fields[2]);
    } catch (const std::exception&) {
      raise(ErrorKind::FormatError,
            path + ":" + std::to_string(line_no) + ": non-numeric score");
    }
    record.judge = fields[3];
    if (record.adequacy < 1 || record.adequacy > 5 || record.fluency < 1 ||
        record.fluency > 5) {
      raise(ErrorKind::FormatError,
            path + ":" + std::to_string(line_no) + ": scores must be 1..5");
    }
    records.push_back(std::move(record));
  }
  return records;
}

JudgmentSummary summarize_judgments(
    const std::vector<JudgmentRecord>& records) {
  JudgmentSummary summary;
  summary.n_records = records.size();
  if (records.empty()) return summary;
  for (const JudgmentRecord& r : records) {
    summary.mean_adequacy += r.adequacy;
    summary.mean_fluency += r.fluency;
  }
  summary.mean_adequacy /= static_cast<double>(records.size());
  summary.mean_fluency /= static_cast<double>(records.size());
  return summary;
}

}  // namespace codemix
