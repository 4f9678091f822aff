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

#include "codemix/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace codemix {

namespace {

LogLevel parse_env_level() {
  const char* env = std::getenv("CODEMIX_LOG");
  if (env == nullptr) return LogLevel::Warn;
  if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
  if (std::strcmp(env, "info") == 0) return LogLevel::Info;
  if (std::strcmp(env, "warn") == 0) return LogLevel::Warn;
  if (std::strcmp(env, "error") == 0) return LogLevel::Err;
  if (std::strcmp(env, "off") == 0) return LogLevel::Off;
  return LogLevel::Warn;
}

LogLevel& level_ref() {
  static LogLevel level = parse_env_level();
  return level;
}

const char* level_tag(LogLevel level) {
  switch (level) {
    case LogLevel::Debug: return "debug";
    case LogLevel::Info: return "info";
    case LogLevel::Warn: return "warn";
    case LogLevel::Err: return "error";
    case LogLevel::Off: return "off";
  }
  return "";
}

}  // namespace

LogLevel log_level() { return level_ref(); }

void set_log_level(LogLevel level) { level_ref() = level; }

void log_message(LogLevel level, const std::string& message) {
  if (level < level_ref()) return;
  std::fprintf(stderr, "[codemix %s] %s\n", level_tag(level), message.c_str());
}

}  // namespace codemix
