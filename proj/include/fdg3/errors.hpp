#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fdg3 {

// Error taxonomy shared by the library and the CLI exit-code mapping:
//   DataError     -> malformed input data (CSV)           exit 3
//   ConfigError   -> malformed configuration (JSON, FD)   exit 3
//   UsageError    -> bad invocation / unmet precondition  exit 2
//   CapacityError -> size guard tripped                   exit 4

struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by the cotree solver on a graph that is not a co-graph. Carries an
// induced P4 as a diagnostic (vertex ids of the graph handed to the solver).
struct NotCographError : std::runtime_error {
  std::array<uint32_t, 4> p4;
  NotCographError(const std::string& msg, std::array<uint32_t, 4> p4_)
      : std::runtime_error(msg), p4(p4_) {}
};

// Raised by the antichain solver when the directed graph fails one of the
// strict-partial-order assertions (should not happen when the dispatcher's
// property checks passed).
struct NotPartialOrderError : std::runtime_error {
  explicit NotPartialOrderError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fdg3
