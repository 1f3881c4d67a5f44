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

// Sweep dataset rows and their CSV encoding:
//
//   protocol,n,r_or_b,metric,source,value,ci_low,ci_high,trials,seed
//
// Reals are printed with 12 significant digits ("%#.12g"); ci_low, ci_high,
// trials and seed are empty on analytic rows. Lines end in LF.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace limpsim {

inline constexpr std::string_view kCsvHeader =
    "protocol,n,r_or_b,metric,source,value,ci_low,ci_high,trials,seed";

struct CsvRow {
  std::string protocol;
  std::int64_t n = 0;
  std::int64_t r_or_b = 0;
  std::string metric;
  std::string source;
  double value = 0.0;
  std::optional<double> ci_low;
  std::optional<double> ci_high;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

// "%#.12g".
std::string FormatReal(double value);

std::string FormatCsv(const std::vector<CsvRow>& rows);

// Inverse of FormatCsv; throws invalid-params on malformed input.
std::vector<CsvRow> ParseCsv(std::string_view text);

// Writes `contents` to a sibling temporary file and renames it over `path`.
// Throws Error(kIo) on failure.
void WriteFileAtomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace limpsim
