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

#ifndef CODEMIX_LOG_HPP_
#define CODEMIX_LOG_HPP_

#include <string>

namespace codemix {

enum class LogLevel { Debug = 0, Info = 1, Warn = 2, Err = 3, Off = 4 };

// Level comes from the CODEMIX_LOG environment variable
// (debug|info|warn|error|off); default is warn.
LogLevel log_level();
void set_log_level(LogLevel level);

void log_message(LogLevel level, const std::string& message);

inline void log_debug(const std::string& m) { log_message(LogLevel::Debug, m); }
inline void log_info(const std::string& m) { log_message(LogLevel::Info, m); }
inline void log_warn(const std::string& m) { log_message(LogLevel::Warn, m); }
inline void log_error(const std::string& m) { log_message(LogLevel::Err, m); }

}  // namespace codemix

#endif  // CODEMIX_LOG_HPP_
