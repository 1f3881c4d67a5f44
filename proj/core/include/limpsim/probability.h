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

#include <compare>

namespace limpsim {

// A real number in [0, 1]. Construction rejects anything outside the unit
// interval, NaN included.
class Probability {
 public:
  constexpr Probability() = default;
  explicit Probability(double value);

  static constexpr Probability Zero() { return Probability(); }
  static Probability One() { return Probability(1.0); }

  // Accepts values within `tolerance` of [0, 1] and clamps them in; anything
  // further out throws ErrorCode::kNumerical.
  static Probability Clamped(double value, double tolerance = 1e-9);

  constexpr double value() const { return value_; }
  constexpr operator double() const { return value_; }

  Probability Complement() const { return Probability(1.0 - value_); }

  friend constexpr auto operator<=>(Probability, Probability) = default;

 private:
  double value_ = 0.0;
};

}  // namespace limpsim
