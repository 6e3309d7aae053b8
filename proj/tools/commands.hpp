#pragma once

// Command dispatch behind the `sullivan` executable. Kept out of main.cpp so
// the tests can drive it without a process boundary.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sullivan/dsl.hpp"

namespace sullivan::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode { kOk = 0, kValidationFailure = 1, kUsageError = 2 };

struct Options {
  std::string command;
  std::vector<std::string> items;      // empty: every applicable item
  std::optional<int> max_degree;       // the cutoff
  int split_depth = 4;
  std::optional<std::string> target;   // iso-search target algebra
};

struct Result {
  int exit_code = kOk;
  nlohmann::ordered_json json;
  std::string text;
};

const std::vector<std::string>& command_names();

// Throws UsageError for unknown commands or item names.
Result run(const Options& options, const Document& doc);

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sullivan::cli
