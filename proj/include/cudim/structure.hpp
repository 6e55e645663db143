#pragma once

// Element and semigroup classifiers.
//
// Finite presentations are classified exactly. On symbolic semigroups the
// universal parts of a definition range over basis(depth) and existential
// parts over basis(depth + slack); each flag records whether it was decided.

#include "cudim/presentation.hpp"
#include "cudim/symbolic.hpp"
#include "cudim/verdict.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cudim {

struct Flag {
  bool value = false;
  bool exact = false;
  std::size_t depth = 0;
};

struct ElementClass {
  Flag compact;         // x << x
  Flag soft;            // every x' << x has nonzero t with x' + t << x
  Flag thin_boundary;   // x << x + t for every nonzero t
  Flag complementable;  // every sampled y with x << y is x + z
};

struct ClassifyOptions {
  std::size_t depth = 4;
  std::size_t slack = default_slack;
  std::size_t complement_samples = 8;
};

ElementClass classify_element(const FinitePresentation& s, ElementId x);
ElementClass classify_element(const SymbolicSemigroup& s, const SymbolicElement& x,
                              const ClassifyOptions& options = {});

enum class Dichotomy { algebraic, soft, neither, unknown };
std::string to_string(Dichotomy d);

struct SemigroupProfile {
  Flag simple;
  Flag elementary;
  Flag algebraic;
  Flag soft;
  Flag idempotent;
  // Set from algebraic and soft when the semigroup is simple.
  Dichotomy dichotomy = Dichotomy::unknown;
};

SemigroupProfile profile(const FinitePresentation& s);
SemigroupProfile profile(const SymbolicSemigroup& s, const ClassifyOptions& options = {});

/// First nonzero w in basis_closure(depth, 2) with w + w << u0 and
/// w + w << u1.
std::optional<SymbolicElement> small_elements_witness(const SymbolicSemigroup& s,
                                                      const SymbolicElement& u0,
                                                      const SymbolicElement& u1,
                                                      std::size_t depth);
std::optional<ElementId> small_elements_witness(const FinitePresentation& s, ElementId u0,
                                                ElementId u1);

/// x0, x1 <= y0, y1 admits z with x_j <= z <= y_k. Exhaustive; refuted
/// verdicts carry (x0, x1, y0, y1).
BoundedVerdict<ElementId> riesz_interpolation_check(const FinitePresentation& s);

/// For n = 1..n_max and sampled x' << x, some y has n * y <= x and
/// x' <= (n + 1) * y. Refuted verdicts carry (x', x) and record n in
/// `r_max`.
BoundedVerdict<ElementId> almost_divisible_check(const FinitePresentation& s,
                                                 std::size_t n_max);
BoundedVerdict<SymbolicElement> almost_divisible_check(const SymbolicSemigroup& s,
                                                       std::size_t n_max,
                                                       std::size_t depth,
                                                       std::size_t slack = default_slack);

}  // namespace cudim
