#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cudim {

/// A configured search or carrier limit would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class SearchSpaceTooLarge : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class CarrierTooLarge : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

/// Malformed or inapplicable input: bad parameters, mismatched kinds,
/// invalid connecting maps, undefined morphism values.
class InvalidInput : public std::invalid_argument {
 public:
  InvalidInput(std::string kind, const std::string& detail)
      : std::invalid_argument(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

}  // namespace cudim
