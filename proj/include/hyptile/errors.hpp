#ifndef HYPTILE_ERRORS_HPP
#define HYPTILE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyptile {

// Invalid argument to a library operation (bad q, negative length, ...).
class ParameterError : public std::invalid_argument {
public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Enumeration refused: the board exceeds the configured cell cap.
class CellLimitError : public std::runtime_error {
public:
  CellLimitError(int cells, int limit)
      : std::runtime_error("board has " + std::to_string(cells) +
                           " cells, over the enumeration limit of " + std::to_string(limit) +
                           " (raise the limit explicitly to proceed)"),
        cells_(cells),
        limit_(limit) {}
  int cells() const { return cells_; }
  int limit() const { return limit_; }

private:
  int cells_;
  int limit_;
};

// A cross-check that must hold by construction failed.
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hyptile

#endif
