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

#include "limpsim/probability.h"

#include <cmath>
#include <sstream>

#include "limpsim/error.h"

namespace limpsim {

Probability::Probability(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream msg;
    msg << "probability out of [0,1]: " << value;
    ThrowInvalidParams(msg.str());
  }
}

Probability Probability::Clamped(double value, double tolerance) {
  if (std::isnan(value) || value < -tolerance || value > 1.0 + tolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "evaluated probability " << value << " lies more than "
        << tolerance << " outside [0,1]";
    throw Error(ErrorCode::kNumerical, msg.str());
  }
  if (value < 0.0) return Probability(0.0);
  if (value > 1.0) return Probability(1.0);
  return Probability(value);
}

}  // namespace limpsim
