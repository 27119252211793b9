// Copyright 2026 The ranforensics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RANFORENSICS_TEXT_HPP_
#define RANFORENSICS_TEXT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Small string helpers shared by the parsers and writers.
namespace ranforensics::text {

std::string_view trim(std::string_view s);

// Splits on a single delimiter; empty fields are kept.
std::vector<std::string_view> split(std::string_view s, char delim);

// Splits on runs of spaces and tabs.
std::vector<std::string_view> split_ws(std::string_view s);

// Whole-token parses; surrounding whitespace is rejected.
std::optional<std::int64_t> parse_int(std::string_view s);
std::optional<double> parse_double(std::string_view s);

// Shortest representation that parses back to the same double.
std::string format_double(double v);

std::string to_lower(std::string_view s);

std::vector<std::string> read_lines(std::string_view document);

}  // namespace ranforensics::text

#endif  // RANFORENSICS_TEXT_HPP_
