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

#include "limpsim/rational.h"

#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "limpsim/error.h"

namespace limpsim {

Rational::Rational(std::int64_t value) : numerator_(value), denominator_(1) {}

Rational::Rational(BigInt numerator, BigInt denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_ == 0) ThrowInvalidParams("rational with zero denominator");
  Normalize();
}

void Rational::Normalize() {
  if (denominator_ < 0) {
    numerator_ = -numerator_;
    denominator_ = -denominator_;
  }
  const BigInt divisor = boost::multiprecision::gcd(numerator_, denominator_);
  if (divisor > 1) {
    numerator_ /= divisor;
    denominator_ /= divisor;
  }
  if (numerator_ == 0) denominator_ = 1;
}

double Rational::ToDouble() const {
  return boost::multiprecision::cpp_rational(numerator_, denominator_)
      .convert_to<double>();
}

std::string Rational::ToString() const {
  return numerator_.str() + "/" + denominator_.str();
}

Rational& Rational::operator+=(const Rational& other) {
  numerator_ = numerator_ * other.denominator_ + other.numerator_ * denominator_;
  denominator_ *= other.denominator_;
  Normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  numerator_ *= other.numerator_;
  denominator_ *= other.denominator_;
  Normalize();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.ToString();
}

}  // namespace limpsim
