// Copyright 2026 The siggames Authors.
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

#ifndef SIGGAMES_ERRORS_H_
#define SIGGAMES_ERRORS_H_

#include <stdexcept>
#include <string>

namespace siggames {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed game document. `location` is a JSON pointer or byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& location, const std::string& what)
      : Error(location.empty() ? what : location + ": " + what),
        location_(location) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

// A document refers to a state, action or signal id that is not declared.
class ReferenceError : public Error {
 public:
  using Error::Error;
};

// The requested operation needs a signaling structure the game lacks.
class UnsupportedStructureError : public Error {
 public:
  using Error::Error;
};

// A node budget or pivot limit was exhausted. `level` is the deepest tree
// level fully built before the budget ran out (0 if none).
class ResourceError : public Error {
 public:
  ResourceError(int level, const std::string& what)
      : Error(what), level_(level) {}
  int level() const { return level_; }

 private:
  int level_;
};

// Conditioning on an observation of zero probability, and similar.
class DomainError : public Error {
 public:
  using Error::Error;
};

class IncompleteStrategyError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace siggames

#endif  // SIGGAMES_ERRORS_H_
