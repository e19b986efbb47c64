#pragma once

#include <stdexcept>
#include <string>

namespace bmgame {

// Malformed input document (bad JSON, wrong field types).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally well-formed input that violates an instance invariant
// (self-loop, parallel edge, capacity < 1, ...). The message names the
// offending element.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exhaustive search exceeded its node budget. The instance is too large
// for the oracle, not wrong.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A certificate or internal identity failed. Always a bug in this library,
// never an input condition.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace bmgame
