#pragma once

#include <stdexcept>
#include <string>

namespace orbitmc {

/// Malformed input text (cycle notation, wcnf, graph files, configs).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = -1, int column = -1)
      : std::runtime_error(locate(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string locate(const std::string& what, int line, int column) {
    std::string msg = what;
    if (line >= 0) msg += " (line " + std::to_string(line) + ")";
    if (column >= 0) msg += " (column " + std::to_string(column) + ")";
    return msg;
  }

  int line_;
  int column_;
};

/// An enumeration guard tripped: the request is beyond desk scale.
class ScaleGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition or internal consistency check failed.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orbitmc
