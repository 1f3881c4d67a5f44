// Copyright 2026 The limpsim Authors.
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

#include "limpsim/error.h"

namespace limpsim {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams:
      return "invalid-params";
    case ErrorCode::kBudgetExceeded:
      return "budget-exceeded";
    case ErrorCode::kPlanMismatch:
      return "plan-mismatch";
    case ErrorCode::kNumerical:
      return "numerical";
    case ErrorCode::kIo:
      return "io-error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

void ThrowInvalidParams(const std::string& message) {
  throw Error(ErrorCode::kInvalidParams, message);
}

}  // namespace limpsim
