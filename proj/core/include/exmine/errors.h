// Copyright 2026 The exmine Authors.
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

#ifndef EXMINE_ERRORS_H_
#define EXMINE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exmine {

// Base class for all errors raised by the mining pipeline.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Error tied to a 1-based line of some input. line() is 0 when unknown.
class LineError : public Error {
 public:
  LineError(const std::string &what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Input bytes are not valid UTF-8.
class EncodingError : public LineError {
 public:
  using LineError::LineError;
};

// Malformed or inconsistent connective lexicon.
class LexiconError : public LineError {
 public:
  using LineError::LineError;
};

// Malformed JSON record in a JSONL stream.
class FormatError : public LineError {
 public:
  using LineError::LineError;
};

// Back-translation file does not line up with the corpus.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// Sense or connective string that is not part of the inventory.
class LookupError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace exmine

#endif  // EXMINE_ERRORS_H_
