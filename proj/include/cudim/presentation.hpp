#pragma once

// Finite presentations of positively ordered monoids.
//
// A presentation is a carrier {0, ..., size-1} with a full addition table and
// a full order table. Index 0 is the monoid zero. In a finite poset every
// increasing sequence is eventually constant, so every finite presentation
// satisfies O1-O4 with every element compact, and the way-below relation
// coincides with the order.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cudim {

enum class ElementId : std::uint32_t {};

constexpr std::size_t to_index(ElementId e) noexcept {
  return static_cast<std::size_t>(e);
}
constexpr ElementId element_at(std::size_t i) noexcept {
  return ElementId{static_cast<std::uint32_t>(i)};
}

/// Unvalidated tables as they come from a file or a builder.
struct RawPresentation {
  std::size_t size = 0;
  std::vector<std::vector<std::int64_t>> add;
  std::vector<std::vector<int>> leq;
  std::vector<std::string> names;  // optional; empty means "0", "1", ...
};

enum class ValidationErrorKind {
  dimension_mismatch,
  index_out_of_range,
  too_large,
  non_commutative,
  non_associative,
  missing_unit,
  order_not_partial,
  zero_not_least,
  order_incompatible,
};

std::string to_string(ValidationErrorKind kind);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationErrorKind kind, std::vector<std::size_t> witness,
                  const std::string& detail);

  ValidationErrorKind kind() const noexcept { return kind_; }
  // Element indices exhibiting the violation, e.g. (x, y) for commutativity,
  // (x, y, z) for associativity, (x, x', y) for order compatibility.
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ValidationErrorKind kind_;
  std::vector<std::size_t> witness_;
};

struct ValidationOptions {
  std::size_t max_size = 64;
  bool allow_large = false;
};

class FinitePresentation {
 public:
  using element_type = ElementId;

  std::size_t size() const noexcept { return size_; }
  ElementId zero() const noexcept { return ElementId{0}; }
  bool is_zero(ElementId x) const noexcept { return to_index(x) == 0; }

  ElementId add(ElementId x, ElementId y) const noexcept {
    return ElementId{add_[to_index(x) * size_ + to_index(y)]};
  }
  bool leq(ElementId x, ElementId y) const noexcept {
    return leq_[to_index(x) * size_ + to_index(y)] != 0;
  }
  // Exact: every element of a finite presentation is compact.
  bool way_below(ElementId x, ElementId y) const noexcept { return leq(x, y); }

  const std::string& name(ElementId x) const { return names_[to_index(x)]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<ElementId> find(std::string_view name) const;

  /// All elements in index order.
  std::vector<ElementId> elements() const;
  /// {y : y <= x}, in index order. Always complete.
  std::vector<ElementId> finite_down_set(ElementId x) const;

  /// Tables in file form.
  RawPresentation raw() const;

  /// Builds and validates a presentation from an operation and a relation.
  static FinitePresentation build(
      std::size_t size,
      const std::function<std::size_t(std::size_t, std::size_t)>& add,
      const std::function<bool(std::size_t, std::size_t)>& leq,
      std::vector<std::string> names = {},
      const ValidationOptions& options = {});

  friend FinitePresentation validate_presentation(const RawPresentation&,
                                                  const ValidationOptions&);

 private:
  FinitePresentation() = default;

  std::size_t size_ = 0;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::string> names_;
};

/// Checks every structural invariant of a positively ordered monoid, in
/// this order: table shape, index range, size cap, commutativity,
/// associativity, unit, partial order, least zero, order compatibility.
/// Throws ValidationError naming the first violation.
FinitePresentation validate_presentation(const RawPresentation& raw,
                                         const ValidationOptions& options = {});

/// The way-below relation of a finite presentation (equal to leq).
bool way_below_finite(const FinitePresentation& s, ElementId x, ElementId y);

/// True if `map` (indexed by elements of s) is a bijection onto t that
/// carries both tables of s onto those of t.
bool is_isomorphism(const FinitePresentation& s, const FinitePresentation& t,
                    std::span<const std::size_t> map);

}  // namespace cudim
