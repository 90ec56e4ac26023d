// Copyright 2026 The ffq Authors
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

#include <filesystem>
#include <string>
#include <vector>

namespace ffq::io {

inline constexpr const char* kVersion = "0.1.0";

/// Scientific notation with 12 significant digits; infinities come out as
/// "inf" so sentinel cells stay recognizable downstream.
std::string format_double(double v);

/// Comma-separated table with a header row.
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace ffq::io
