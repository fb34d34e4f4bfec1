// Copyright 2026 The gecsynth Authors.
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

#ifndef GECSYNTH_ERROR_H_
#define GECSYNTH_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gecsynth {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration or invocation: missing files, invalid caps, bad flags.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Input data that cannot be processed. Carries the 1-based line number when
// the failure is attributable to one line of a file (0 otherwise).
class DataError : public Error {
 public:
  explicit DataError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gecsynth

#endif  // GECSYNTH_ERROR_H_
