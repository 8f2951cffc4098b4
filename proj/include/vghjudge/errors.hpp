#pragma once

#include <stdexcept>
#include <string>

namespace vghjudge {

// Input text that fails to parse or validate. `line` is 1-based; 0 means the
// error is not tied to a single line (e.g. a missing file).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

// Bad configuration: unknown metric, invalid flag values.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Evaluation cannot produce a score: a level with no resolvable transitions,
// or unresolved nodes under strict mode.
class EvalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace vghjudge
