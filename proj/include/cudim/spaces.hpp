#pragma once

// Finite topological spaces, their covering dimension, and semigroups of
// lower-semicontinuous functions with values in {0, ..., cap, inf}.

#include "cudim/errors.hpp"
#include "cudim/presentation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cudim {

class FinSpace {
 public:
  using Set = std::uint32_t;  // bit p is point p
  static constexpr std::size_t max_points = 16;

  /// Validates `opens` (given as point names). Without `strict` the family
  /// is completed under union and intersection and gains the empty set and
  /// the whole space; with it any such gap is rejected. Throws
  /// InvalidInput("invalid-space").
  static FinSpace make(std::vector<std::string> points,
                       const std::vector<std::vector<std::string>>& opens,
                       bool strict = false);
  static FinSpace from_masks(std::size_t points, std::vector<Set> opens,
                             bool strict = false, std::vector<std::string> names = {});

  std::size_t size() const noexcept { return names_.size(); }
  Set full() const noexcept { return size() == 32 ? ~Set{0} : (Set{1} << size()) - 1; }
  /// Sorted ascending.
  const std::vector<Set>& opens() const noexcept { return opens_; }
  bool is_open(Set s) const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::string format(Set s) const;

 private:
  std::vector<std::string> names_;
  std::vector<Set> opens_;
};

FinSpace point_space();
FinSpace discrete_space(std::size_t n);
/// Points a (open) and b; opens {}, {a}, {a, b}.
FinSpace sierpinski_space();
/// Points a, b, c; opens {}, {a}, {a, b}, {a, c}, {a, b, c}.
FinSpace v_space();
FinSpace disjoint_union(const FinSpace& x, const FinSpace& y);

/// Every topology on n <= 4 points, one per homeomorphism class.
std::vector<FinSpace> all_spaces(std::size_t n);

/// Least n such that every irreducible open cover has an open refinement
/// whose members split into n+1 families of pairwise disjoint sets.
std::size_t covering_dim(const FinSpace& x);

enum class LscVariant { full, strictly_positive };

struct LscSemigroup {
  FinitePresentation presentation;
  std::size_t cap = 0;
  // values[e][p] in 0..cap, with cap + 1 standing for infinity.
  std::vector<std::vector<std::uint32_t>> values;

  std::optional<ElementId> find(std::span<const std::uint32_t> v) const;
  /// The function that is 1 on U and 0 elsewhere, if it is in the carrier.
  std::optional<ElementId> characteristic(FinSpace::Set u) const;
};

/// Carrier: lower-semicontinuous functions X -> {0..cap, inf}, ordered by
/// value vector with zero first; pointwise order; pointwise sum in which a
/// finite total above cap becomes inf. The strictly positive variant keeps
/// zero and the functions that are nowhere zero. Throws CarrierTooLarge
/// past `max_carrier` elements.
LscSemigroup lsc_semigroup(const FinSpace& x, std::size_t cap,
                           LscVariant variant = LscVariant::full,
                           std::size_t max_carrier = 64);

}  // namespace cudim
