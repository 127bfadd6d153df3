/*
Copyright 2026 The bdmbt Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

// Shared helpers for the line-oriented text formats.

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bdmbt/errors.hpp"

namespace bdmbt::detail {

/// Yields trimmed, non-blank lines, skipping '#' comments.
class LineReader {
  public:
    explicit LineReader(std::istream &in, char comment = '#') : in_(in), comment_(comment) {}

    std::optional<std::string> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_number_;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == comment_) {
                continue;
            }
            const auto last = line.find_last_not_of(" \t\r");
            return line.substr(first, last - first + 1);
        }
        return std::nullopt;
    }

    std::size_t line_number() const { return line_number_; }

  private:
    std::istream &in_;
    char comment_;
    std::size_t line_number_ = 0;
};

inline std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
            ++pos;
        }
        const auto start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') {
            ++pos;
        }
        if (pos > start) {
            tokens.emplace_back(line.substr(start, pos - start));
        }
    }
    return tokens;
}

inline std::uint64_t parse_unsigned(std::string_view token, std::size_t line) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

inline std::int64_t parse_signed(std::string_view token, std::size_t line) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

} // namespace bdmbt::detail
