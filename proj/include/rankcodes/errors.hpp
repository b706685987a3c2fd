#pragma once

#include <stdexcept>
#include <string>

namespace rankcodes {

// Thrown when an operation would exceed an explicit size or work budget
// (exhaustive enumeration guards, oracle codeword caps, decoder scan caps).
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when external input (JSON, packed digit strings) is malformed.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rankcodes
