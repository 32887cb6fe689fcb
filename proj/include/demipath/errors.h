// Copyright 2026 The demipath Authors
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

#ifndef DEMIPATH_ERRORS_H_
#define DEMIPATH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace demipath {

enum class ErrorCode {
  kAsymmetricMatrix,
  kTooSmall,
  kTooLarge,
  kBadIndexSet,
  kOutOfRange,
  kInvalidCity,
  kDuplicateCity,
  kNotAForbiddenPair,
  kBadEndpoint,
  kCorruptTags,
  kNoFeasibleJunction,
  kJunctionMismatch,
  kRetryBudgetExhausted,
  kParseError,
};

const char* ErrorCodeName(ErrorCode code);

// Base class of every error raised by the library. Callers that only care
// about the category can switch on code().
class DemipathError : public std::runtime_error {
 public:
  DemipathError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by Validate(). Indices are 1-based.
class AsymmetricMatrixError : public DemipathError {
 public:
  AsymmetricMatrixError(int i, int j, double delta);

  int i() const { return i_; }
  int j() const { return j_; }
  double delta() const { return delta_; }

 private:
  int i_;
  int j_;
  double delta_;
};

}  // namespace demipath

#endif  // DEMIPATH_ERRORS_H_
