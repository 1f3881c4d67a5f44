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

#include "limpsim/csv.h"

#include <unistd.h>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <system_error>

#include "limpsim/error.h"

namespace limpsim {

namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <typename Int>
Int ParseInt(std::string_view field, std::string_view name) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    ThrowInvalidParams("bad integer in CSV column " + std::string(name) + ": '" +
                       std::string(field) + "'");
  }
  return value;
}

double ParseReal(std::string_view field, std::string_view name) {
  const std::string text(field);
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    ThrowInvalidParams("bad real in CSV column " + std::string(name) + ": '" + text + "'");
  }
  return value;
}

}  // namespace

std::string FormatReal(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%#.12g", value);
  return buffer;
}

std::string FormatCsv(const std::vector<CsvRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const CsvRow& row : rows) {
    out += row.protocol;
    out += ',' + std::to_string(row.n);
    out += ',' + std::to_string(row.r_or_b);
    out += ',' + row.metric;
    out += ',' + row.source;
    out += ',' + FormatReal(row.value);
    out += ',' + (row.ci_low ? FormatReal(*row.ci_low) : std::string());
    out += ',' + (row.ci_high ? FormatReal(*row.ci_high) : std::string());
    out += ',' + (row.trials ? std::to_string(*row.trials) : std::string());
    out += ',' + (row.seed ? std::to_string(*row.seed) : std::string());
    out += '\n';
  }
  return out;
}

std::vector<CsvRow> ParseCsv(std::string_view text) {
  std::vector<CsvRow> rows;
  bool header_seen = false;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    if (!header_seen) {
      if (line != kCsvHeader) ThrowInvalidParams("missing or unexpected CSV header");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    const auto f = SplitFields(line);
    if (f.size() != 10) {
      ThrowInvalidParams("CSV row has " + std::to_string(f.size()) + " fields, want 10");
    }
    CsvRow row;
    row.protocol = std::string(f[0]);
    row.n = ParseInt<std::int64_t>(f[1], "n");
    row.r_or_b = ParseInt<std::int64_t>(f[2], "r_or_b");
    row.metric = std::string(f[3]);
    row.source = std::string(f[4]);
    row.value = ParseReal(f[5], "value");
    if (!f[6].empty()) row.ci_low = ParseReal(f[6], "ci_low");
    if (!f[7].empty()) row.ci_high = ParseReal(f[7], "ci_high");
    if (!f[8].empty()) row.trials = ParseInt<std::uint64_t>(f[8], "trials");
    if (!f[9].empty()) row.seed = ParseInt<std::uint64_t>(f[9], "seed");
    rows.push_back(std::move(row));
  }
  if (!header_seen) ThrowInvalidParams("empty CSV input");
  return rows;
}

void WriteFileAtomically(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorCode::kIo, "failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw Error(ErrorCode::kIo, "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace limpsim
