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

#include <stdexcept>
#include <string>

namespace bdmbt {

/// Input that violates a documented precondition (bad vertex id, n = 0, ...).
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Text that does not follow one of the line formats.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string &what) : std::runtime_error(what), line_(0) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// The exact search ran out of node expansions before reaching a verdict.
class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(unsigned long long budget)
        : std::runtime_error("node budget of " + std::to_string(budget) + " expansions exceeded"),
          budget_(budget) {}

    unsigned long long budget() const { return budget_; }

  private:
    unsigned long long budget_;
};

} // namespace bdmbt
