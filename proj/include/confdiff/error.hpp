#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace confdiff {

/// Bad argument value (vertex id out of range, probability outside [0,1], ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation called on a graph that does not meet its precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed matrix/graph text. Carries the offending 0-based location when
/// one exists.
class FormatError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit FormatError(const std::string& what, std::size_t row = npos,
                       std::size_t column = npos)
      : std::runtime_error(decorate(what, row, column)),
        row_(row),
        column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string decorate(const std::string& what, std::size_t row,
                              std::size_t column) {
    if (row == npos) return what;
    std::string out = what + " (row " + std::to_string(row);
    if (column != npos) out += ", column " + std::to_string(column);
    return out + ")";
  }

  std::size_t row_;
  std::size_t column_;
};

/// Not enough data to fit a model.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace confdiff
