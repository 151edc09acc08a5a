// Copyright 2026 The indexbound Authors.
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

#ifndef INDEXBOUND_ERROR_H_
#define INDEXBOUND_ERROR_H_

#include <stdexcept>
#include <string>

namespace indexbound {

// Failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
  kInvalidArgument,  // bad input: non-prime p, malformed literal, ...
  kParse,            // polynomial / literal syntax error
  kCapExceeded,      // field or enumeration larger than the configured cap
  kBudgetExceeded,   // shift-vector search larger than the budget
  kInternal,         // self-check mismatch; indicates an arithmetic bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax error carrying a 1-based character position into the input.
class ParseError : public Error {
 public:
  ParseError(size_t position, const std::string& what)
      : Error(ErrorKind::kParse,
              "syntax error at position " + std::to_string(position) + ": " +
                  what),
        position_(position) {}

  size_t position() const { return position_; }

 private:
  size_t position_;
};

}  // namespace indexbound

#endif  // INDEXBOUND_ERROR_H_
