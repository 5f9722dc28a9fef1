// prosodyne/logging.hpp

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

#ifndef PROSODYNE_LOGGING_HPP_
#define PROSODYNE_LOGGING_HPP_

#include <string>

namespace prosodyne {

enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

// Level is read once from the PROSODYNE_LOG environment variable
// (error|info|debug); unset or unrecognized values mean error-only.
LogLevel log_level();

void log_error(const std::string& message);
void log_info(const std::string& message);
void log_debug(const std::string& message);

}  // namespace prosodyne

#endif  // PROSODYNE_LOGGING_HPP_
