#pragma once

#include <stdexcept>
#include <string>

namespace equistab {

// Error taxonomy maps 1:1 onto CLI exit codes, see exit_code_for().

/// Malformed or semantically invalid user input (config files, rep specs).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Group enumeration exceeded the configured order cap.
struct SizeLimitError : std::runtime_error {
  explicit SizeLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A bounded search (certificate horizon) was exhausted without success.
struct SearchLimitError : std::runtime_error {
  explicit SearchLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two independent numeric routes disagreed (integrality, rank cross-checks).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Internal invariant violation; never expected on valid inputs.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitLimit = 3;
inline constexpr int kExitNumeric = 4;
inline constexpr int kExitVerifyFailed = 5;

}  // namespace equistab
