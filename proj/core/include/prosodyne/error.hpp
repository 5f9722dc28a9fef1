// prosodyne/error.hpp

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

#ifndef PROSODYNE_ERROR_HPP_
#define PROSODYNE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace prosodyne {

// kInput/kConfig map to CLI exit code 2, kNumeric to exit code 3.
enum class ErrorKind {
  kInput,    // unreadable or malformed external data
  kConfig,   // parameter combination violates a precondition
  kNumeric,  // computation produced or detected non-finite/degenerate values
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  const char* kind_name() const {
    switch (kind_) {
      case ErrorKind::kInput: return "input";
      case ErrorKind::kConfig: return "config";
      case ErrorKind::kNumeric: return "numeric";
    }
    return "unknown";
  }

 private:
  ErrorKind kind_;
};

}  // namespace prosodyne

#endif  // PROSODYNE_ERROR_HPP_
