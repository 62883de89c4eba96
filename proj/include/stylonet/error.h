// Copyright 2026 The stylonet Authors
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

#ifndef STYLONET_ERROR_H_
#define STYLONET_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stylonet {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments or configuration detected before any computation.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Input text is not valid UTF-8.
class EncodingError : public Error {
 public:
  EncodingError(const std::string& what, std::size_t byte_offset);
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Input too small for the requested construction (e.g. a network from
// fewer than two tokens).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

// A measurement has no value on this input (zero denominators and the like).
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

// File could not be read or parsed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace stylonet

#endif  // STYLONET_ERROR_H_
