#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace assort {

enum class ErrorKind {
  duplicate_key,       // two equal keys met (distinctness precondition broken)
  capacity_exceeded,   // n > 2^(w-1) for the modifiable variant
  empty_interval,
  malformed_input,
};

class SortError : public std::runtime_error {
 public:
  SortError(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::uint64_t value() const noexcept { return value_; }
  std::size_t position() const noexcept { return position_; }

  static SortError duplicate_key(std::uint64_t value, std::size_t position) {
    SortError e(ErrorKind::duplicate_key,
                "duplicate key " + std::to_string(value) + " detected at position " +
                    std::to_string(position));
    e.value_ = value;
    e.position_ = position;
    return e;
  }

  static SortError capacity_exceeded(std::size_t n, unsigned width) {
    return SortError(ErrorKind::capacity_exceeded,
                     "list of " + std::to_string(n) + " integers exceeds the 2^" +
                         std::to_string(width - 1) + " capacity of " +
                         std::to_string(width) + "-bit words");
  }

  static SortError malformed_input(std::string detail) {
    return SortError(ErrorKind::malformed_input, std::move(detail));
  }

 private:
  ErrorKind kind_;
  std::uint64_t value_ = 0;
  std::size_t position_ = 0;
};

}  // namespace assort
