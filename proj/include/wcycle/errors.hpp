#ifndef WCYCLE_ERRORS_HPP
#define WCYCLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wcycle {

// Bad configuration or bad arguments supplied by the caller (exit code 1).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unreadable/unwritable files, malformed input streams (exit code 2).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation could not be carried out on the given input (exit code 3).
class ComputeError : public std::runtime_error {
 public:
  explicit ComputeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Edge-list syntax problems, reported with a 1-based line number.
class ParseError : public IoError {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : IoError("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wcycle

#endif
