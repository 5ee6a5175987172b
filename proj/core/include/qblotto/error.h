// Copyright 2026 The qblotto Authors
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

#ifndef QBLOTTO_ERROR_H_
#define QBLOTTO_ERROR_H_

#include <stdexcept>
#include <string>

namespace qblotto {

enum class ErrorCode {
  kValidation,          // bad user input: allocations, indices, ranges
  kDimension,           // tensor shape mismatch or size guardrail breach
  kNumericalIntegrity,  // a computed quantity left its admissible set
  kEntanglerParity,     // entangler is not unitary for this player count
  kInternal,            // an invariant that must hold by construction failed
};

const char* ErrorCodeName(ErrorCode code);

// Single exception type for the library. Callers switch on code() to map
// failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qblotto

#endif  // QBLOTTO_ERROR_H_
