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

#include "codemix/error.hpp"

namespace codemix {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::VocabError: return "VocabError";
    case ErrorKind::DataError: return "DataError";
    case ErrorKind::NumericalError: return "NumericalError";
    case ErrorKind::KindError: return "KindError";
    case ErrorKind::RoutingError: return "RoutingError";
    case ErrorKind::DegenerateError: return "DegenerateError";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Error";
}

}  // namespace codemix
