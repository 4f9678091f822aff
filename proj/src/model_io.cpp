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

#include "codemix/model_io.hpp"

#include <fstream>

#include <json.hpp>

#include "codemix/error.hpp"

namespace codemix {

namespace {

using nlohmann::json;

json vocab_to_json(const CharVocab& vocab) {
  json chars = json::array();
  for (char32_t c : vocab.chars()) chars.push_back(static_cast<uint32_t>(c));
  return chars;
}

CharVocab vocab_from_json(const json& j) {
  std::vector<char32_t> chars;
  for (const auto& c : j) chars.push_back(static_cast<char32_t>(c.get<uint32_t>()));
  return CharVocab(std::move(chars));
}

json config_to_json(const TrainConfig& c) {
  return json{{"epochs", c.epochs},
              {"batch_size", c.batch_size},
              {"optimizer", optimizer_kind_name(c.optimizer)},
              {"loss", loss_kind_name(c.loss)},
              {"learning_rate", c.learning_rate},
              {"adam_beta1", c.adam_beta1},
              {"adam_beta2", c.adam_beta2},
              {"rms_decay", c.rms_decay},
              {"epsilon", c.epsilon},
              {"shuffle", c.shuffle},
              {"clip_enabled", c.clip_enabled},
              {"clip_norm", c.clip_norm}};
}

template <class Model>
json params_to_json(const Model& model) {
  json out = json::object();
  // param_tensors wants a mutable model; this only reads.
  for (const auto& [name, data] : param_tensors(const_cast<Model&>(model))) {
    json arr = json::array();
    for (real_t x : *data) arr.push_back(static_cast<double>(x));
    out[name] = std::move(arr);
  }
  return out;
}

template <class Model>
void params_from_json(Model& model, const json& j) {
  for (const auto& [name, data] : param_tensors(model)) {
    if (!j.contains(name)) {
      raise(ErrorKind::FormatError, "model file lacks tensor '" + name + "'");
    }
    const json& arr = j.at(name);
    if (arr.size() != data->size()) {
      raise(ErrorKind::FormatError,
            "tensor '" + name + "' has " + std::to_string(arr.size()) +
                " values, expected " + std::to_string(data->size()));
    }
    for (size_t i = 0; i < data->size(); ++i) {
      (*data)[i] = static_cast<real_t>(arr[i].get<double>());
    }
  }
}

void write_json(const std::string& path, const json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    raise(ErrorKind::IoError, "cannot write " + path);
  }
  out << doc.dump(1, '\t') << '\n';
}

json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorKind::IoError, "cannot open " + path);
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    raise(ErrorKind::FormatError, path + ": " + e.what());
  }
  return doc;
}

void check_header(const json& doc, const std::string& path) {
  if (!doc.contains("format_version") || !doc.contains("model_kind")) {
    raise(ErrorKind::FormatError, path + ": not a model container");
  }
  const int version = doc.at("format_version").get<int>();
  if (version != kModelFormatVersion) {
    raise(ErrorKind::FormatError,
          path + ": unsupported format_version " + std::to_string(version));
  }
}

std::vector<int> hidden_dims_of(const std::vector<LstmLayerParams>& layers) {
  std::vector<int> dims;
  for (const auto& l : layers) dims.push_back(l.hidden_dim);
  return dims;
}

}  // namespace

void save_tagger_model(const std::string& path, const TaggerModel& model,
                       const TrainConfig& config) {
  json doc;
  doc["format_version"] = kModelFormatVersion;
  doc["model_kind"] = "tagger";
  doc["seed"] = config.seed;
  doc["train_config"] = config_to_json(config);
  doc["vocab"] = vocab_to_json(model.net.vocab);
  doc["embed_dim"] = model.net.embedding.cols;
  doc["hidden_dims"] = hidden_dims_of(model.net.layers);
  doc["threshold"] = model.threshold;
  doc["params"] = params_to_json(model.net);
  write_json(path, doc);
}

TaggerModel load_tagger_model(const std::string& path) {
  const json doc = read_json(path);
  check_header(doc, path);
  if (doc.at("model_kind").get<std::string>() != "tagger") {
    raise(ErrorKind::FormatError,
          path + ": model_kind is not 'tagger'");
  }
  TaggerModel model;
  const CharVocab vocab = vocab_from_json(doc.at("vocab"));
  const int embed_dim = doc.at("embed_dim").get<int>();
  const std::vector<int> hidden = doc.at("hidden_dims").get<std::vector<int>>();
  model.net = make_classifier<real_t>(vocab, embed_dim, hidden, 0);
  model.threshold = doc.at("threshold").get<double>();
  params_from_json(model.net, doc.at("params"));
  return model;
}

void save_seq2seq_model(const std::string& path, const std::string& kind,
                        const Seq2SeqParams& model, const TrainConfig& config) {
  json doc;
  doc["format_version"] = kModelFormatVersion;
  doc["model_kind"] = kind;
  doc["seed"] = config.seed;
  doc["train_config"] = config_to_json(config);
  doc["src_vocab"] = vocab_to_json(model.src_vocab);
  doc["tgt_vocab"] = vocab_to_json(model.tgt_vocab);
  doc["embedding"] =
      model.embedding == EmbeddingMode::OneHot ? "one_hot" : "learned";
  doc["embed_dim"] = model.embed_dim;
  doc["hidden_dims"] = hidden_dims_of(model.encoder);
  doc["attention"] = model.attention;
  doc["params"] = params_to_json(model);
  write_json(path, doc);
}

Seq2SeqParams load_seq2seq_model(const std::string& path,
                                 const std::string& expected_kind) {
  const json doc = read_json(path);
  check_header(doc, path);
  const std::string kind = doc.at("model_kind").get<std::string>();
  if (kind != expected_kind) {
    raise(ErrorKind::FormatError, path + ": model_kind '" + kind +
                                      "', expected '" + expected_kind + "'");
  }
  const CharVocab src_vocab = vocab_from_json(doc.at("src_vocab"));
  const CharVocab tgt_vocab = vocab_from_json(doc.at("tgt_vocab"));
  const std::vector<int> hidden = doc.at("hidden_dims").get<std::vector<int>>();
  const EmbeddingMode mode = doc.at("embedding").get<std::string>() == "one_hot"
                                 ? EmbeddingMode::OneHot
                                 : EmbeddingMode::Learned;
  Seq2SeqParams model = make_seq2seq<real_t>(
      src_vocab, tgt_vocab, hidden, doc.at("attention").get<bool>(), mode,
      doc.at("embed_dim").get<int>(), 0);
  params_from_json(model, doc.at("params"));
  return model;
}

std::string peek_model_kind(const std::string& path) {
  const json doc = read_json(path);
  check_header(doc, path);
  return doc.at("model_kind").get<std::string>();
}

}  // namespace codemix
