//
// Copyright 2026 The Camo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef CAMO_ERRORS_H_
#define CAMO_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace camo {

// Bad input data or configuration. The CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed UTF-8. Carries the byte offset of the first bad sequence.
class DecodeError : public ValidationError {
 public:
  DecodeError(const std::string& what, std::size_t offset)
      : ValidationError(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Parse failure in a config, glyph or dataset file; line is 1-based.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what)
      : ValidationError(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Invalid LevelSpec or empty method list.
class ConfigError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Modification records that do not match the camouflaged text.
class IntegrityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Filesystem failures. The CLI maps these to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace camo

#endif  // CAMO_ERRORS_H_
