// prosodyne/logging.cpp

// Copyright 2026 The Prosodyne Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prosodyne/logging.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace prosodyne {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("PROSODYNE_LOG");
    if (env == nullptr) return LogLevel::kError;
    if (std::strcmp(env, "debug") == 0) return LogLevel::kDebug;
    if (std::strcmp(env, "info") == 0) return LogLevel::kInfo;
    return LogLevel::kError;
  }();
  return level;
}

namespace {

std::mutex& log_mutex() {
  static std::mutex m;
  return m;
}

void emit(const char* tag, const std::string& message) {
  std::lock_guard<std::mutex> lock(log_mutex());
  std::fprintf(stderr, "[prosodyne %s] %s\n", tag, message.c_str());
}

}  // namespace

void log_error(const std::string& message) { emit("error", message); }

void log_info(const std::string& message) {
  if (log_level() >= LogLevel::kInfo) emit("info", message);
}

void log_debug(const std::string& message) {
  if (log_level() >= LogLevel::kDebug) emit("debug", message);
}

}  // namespace prosodyne
