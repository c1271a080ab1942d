// Copyright 2026 The opencoh Authors
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
#include <string_view>

namespace opencoh::io {

/// Writes `content` to a sibling temporary file and renames it over `path`,
/// creating parent directories as needed.
void atomic_write(const std::filesystem::path& path, std::string_view content);

/// Lower-case hex SHA-256 of `content` with every line that starts with '#'
/// removed, so timestamped comment headers do not affect the digest.
std::string content_digest(std::string_view content);

std::string read_file(const std::filesystem::path& path);

/// printf-style "%.17g".
std::string format_double(double v);

}  // namespace opencoh::io
