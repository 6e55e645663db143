#pragma once

// Direct sums, ideals and quotients, limits of finite chains, retracts.

#include "cudim/errors.hpp"
#include "cudim/presentation.hpp"
#include "cudim/symbolic.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace cudim {

using AnySemigroup = std::variant<FinitePresentation, SymbolicSemigroup>;

/// Pairs (s, t) at index s * |T| + t, componentwise operations.
FinitePresentation direct_sum(const FinitePresentation& s, const FinitePresentation& t);
/// Tuple-encoded pairs; basis(d) is the product of the two bases.
SymbolicSemigroup direct_sum(const SymbolicSemigroup& s, const SymbolicSemigroup& t);
/// Throws InvalidInput("kind-mismatch") when one side is finite and the
/// other symbolic.
AnySemigroup direct_sum(const AnySemigroup& s, const AnySemigroup& t);

/// A finite presentation carried symbolically with Atom elements. Every
/// down-set is finite and known; basis(d) is the whole carrier.
SymbolicSemigroup as_symbolic(const FinitePresentation& s, std::string name);

/// The elements of `s` passing `keep`, which must contain zero and be
/// closed under addition. Operations are inherited.
SymbolicSemigroup sub_semigroup(const SymbolicSemigroup& s,
                                std::function<bool(const SymbolicElement&)> keep,
                                std::string name);

/// Zero together with the non-compact elements.
SymbolicSemigroup soft_part(const SymbolicSemigroup& s);

class Ideal {
 public:
  explicit Ideal(std::vector<bool> members) : members_(std::move(members)) {}
  bool contains(ElementId x) const { return members_.at(to_index(x)); }
  std::vector<ElementId> elements() const;
  std::size_t size() const;
  const std::vector<bool>& members() const noexcept { return members_; }
  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  std::vector<bool> members_;
};

/// Downward closed, addition closed, contains zero.
bool is_ideal(const FinitePresentation& s, const std::vector<bool>& members);
/// Least ideal containing `gens`.
Ideal ideal_generated(const FinitePresentation& s, std::span<const ElementId> gens);
/// Every ideal, ordered by first discovery from {0}.
std::vector<Ideal> all_ideals(const FinitePresentation& s);
/// The ideal as a presentation, elements in index order.
FinitePresentation restrict_to_ideal(const FinitePresentation& s, const Ideal& i);

struct QuotientResult {
  FinitePresentation quotient;
  std::vector<std::size_t> class_of;  // element index of s -> class index
};

/// Classes of x ~ y (x <=_I y and y <=_I x, where x <=_I y means
/// x <= y + z for some z in I), ordered by least member, which names them.
QuotientResult quotient(const FinitePresentation& s, const Ideal& i);

struct ChainSystem {
  std::vector<FinitePresentation> stages;
  std::vector<std::vector<std::size_t>> maps;  // maps[i] : stage i -> stage i+1
};

/// Throws InvalidInput("invalid-map") unless every map is additive, sends
/// zero to zero and preserves order.
void validate_chain(const ChainSystem& sys);

/// The limit of a finite chain, evaluated at its last stage. Elements are
/// IntervalClass(stage, index) with the earliest stage and least index
/// mapping to the same last-stage element; basis(d) lists the classes of
/// stage min(d, last).
SymbolicSemigroup chain_limit(const ChainSystem& sys, std::string name = "ChainLimit");

/// E_1 -> E_2 -> E_4 -> ... with j -> 2j, `stages` stages.
ChainSystem doubling_chain(std::size_t stages = 5);
/// E_4 + E_4 -> E_4 -> E_4 with the coordinate sum, then the identity.
ChainSystem simplicial_chain();
/// `stages` copies of E_k joined by identities.
ChainSystem constant_chain(std::size_t k, std::size_t stages = 4);

using PointMap = std::function<std::optional<SymbolicElement>(const SymbolicElement&)>;

struct RetractPair {
  PointMap iota;   // S -> T
  PointMap sigma;  // T -> S
};

struct RetractReport {
  bool holds = true;
  std::string violation;  // empty when holds
  std::vector<SymbolicElement> tuple;
  std::size_t depth = 0;
};

/// On basis(depth) samples: sigma(iota(a)) = a; iota preserves addition,
/// order and way-below; sigma preserves addition and order. Throws
/// InvalidInput("map-undefined") when a map has no value on a sample.
RetractReport retract_check(const SymbolicSemigroup& s, const SymbolicSemigroup& t,
                            const RetractPair& pair, std::size_t depth);

/// Pointwise map from index arrays between finite presentations carried
/// by as_symbolic.
PointMap index_map(std::vector<std::size_t> map);

/// The soft inclusion [0,inf] -> Z and the retraction C(n) -> S(n).
RetractPair soft_retract_pair();

}  // namespace cudim
