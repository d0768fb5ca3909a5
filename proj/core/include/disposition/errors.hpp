#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace disposition {

/// Precondition or index-range violation at an API boundary.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The concrete engine needs p > c; raised for any context outside that range.
class LazardRangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Brute-force enumeration stopped because a set outgrew its size limit.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t partial_size, std::size_t cap)
      : std::runtime_error("cap exceeded: reached " + std::to_string(partial_size) +
                           " elements (cap " + std::to_string(cap) + ")"),
        partial_size_(partial_size),
        cap_(cap) {}

  std::size_t partial_size() const noexcept { return partial_size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t partial_size_;
  std::size_t cap_;
};

}  // namespace disposition
