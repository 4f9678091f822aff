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

#ifndef CODEMIX_MODEL_IO_HPP_
#define CODEMIX_MODEL_IO_HPP_

#include <string>

#include "codemix/optim.hpp"
#include "codemix/seq2seq.hpp"
#include "codemix/tagger.hpp"

namespace codemix {

// Model container: a JSON document with format_version, model_kind, vocab
// tables, layer dims, parameter arrays as decimal floats, train_config and
// seed. Serialization is byte-deterministic, so identical models produce
// identical files.
inline constexpr int kModelFormatVersion = 1;

void save_tagger_model(const std::string& path, const TaggerModel& model,
                       const TrainConfig& config);
TaggerModel load_tagger_model(const std::string& path);

// kind is "translit" or "mt".
void save_seq2seq_model(const std::string& path, const std::string& kind,
                        const Seq2SeqParams& model, const TrainConfig& config);
Seq2SeqParams load_seq2seq_model(const std::string& path,
                                 const std::string& expected_kind);

// The model_kind field of an existing container.
std::string peek_model_kind(const std::string& path);

}  // namespace codemix

#endif  // CODEMIX_MODEL_IO_HPP_
