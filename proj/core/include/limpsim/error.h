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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace limpsim {

enum class ErrorCode {
  kInvalidParams,
  kBudgetExceeded,
  kPlanMismatch,
  kNumerical,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All failures raised by the library carry one of the codes above so the CLI
// can map them onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void ThrowInvalidParams(const std::string& message);

}  // namespace limpsim
