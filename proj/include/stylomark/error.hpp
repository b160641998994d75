// Copyright 2026 The Stylomark Authors.
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

#ifndef STYLOMARK_ERROR_HPP_
#define STYLOMARK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace stylomark {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters: gamma outside (0,1), empty vocabulary, length
// mismatches, missing required inputs.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Missing files, malformed rows, unreadable models.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace stylomark

#endif  // STYLOMARK_ERROR_HPP_
