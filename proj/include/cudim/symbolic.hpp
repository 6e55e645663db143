#pragma once

// Countable semigroups given by predicates and a depth-indexed basis.

#include "cudim/axioms.hpp"
#include "cudim/errors.hpp"
#include "cudim/rational.hpp"
#include "cudim/verdict.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <variant>
#include <vector>

namespace cudim {

struct SymbolicElement;

struct Compact {
  std::uint64_t n = 0;
};
struct Soft {
  ExtRational q;  // positive, possibly infinite
};
/// The extra compact element 1' (or 1'') incomparable with 1.
struct Prime {};
/// An element of a finite presentation carried symbolically.
struct Atom {
  std::uint32_t index = 0;
};
struct Tuple {
  std::vector<SymbolicElement> parts;
};
/// The class of element `index` of stage `stage` in a chain limit.
struct IntervalClass {
  std::uint32_t stage = 0;
  std::uint32_t index = 0;
};

struct SymbolicElement {
  std::variant<Compact, Soft, Prime, Atom, Tuple, IntervalClass> value;

  SymbolicElement() : value(Compact{0}) {}
  template <class T>
    requires(!std::is_same_v<std::decay_t<T>, SymbolicElement>)
  SymbolicElement(T v) : value(std::move(v)) {}  // NOLINT: implicit by design

  template <class T>
  bool is() const noexcept { return std::holds_alternative<T>(value); }
  template <class T>
  const T& as() const { return std::get<T>(value); }

  friend bool operator==(const SymbolicElement& a, const SymbolicElement& b);
  friend bool operator<(const SymbolicElement& a, const SymbolicElement& b);
  std::size_t hash() const;
};

struct SymbolicElementHash {
  std::size_t operator()(const SymbolicElement& e) const { return e.hash(); }
};

inline SymbolicElement compact(std::uint64_t n) { return Compact{n}; }
inline SymbolicElement soft(ExtRational q) { return Soft{std::move(q)}; }
inline SymbolicElement soft_infinity() { return Soft{ExtRational::infinity()}; }

class SymbolicModel {
 public:
  virtual ~SymbolicModel() = default;

  virtual std::string name() const = 0;
  virtual SymbolicElement zero() const = 0;
  virtual SymbolicElement add(const SymbolicElement& a,
                              const SymbolicElement& b) const = 0;
  virtual bool leq(const SymbolicElement& a, const SymbolicElement& b) const = 0;
  virtual bool way_below(const SymbolicElement& a,
                         const SymbolicElement& b) const = 0;
  /// Finite, duplicate-free, nested in depth.
  virtual std::vector<SymbolicElement> basis(std::size_t depth) const = 0;
  virtual bool contains(const SymbolicElement& a) const = 0;
  virtual std::string format(const SymbolicElement& a) const = 0;
  /// Throws InvalidInput on text that names no element.
  virtual SymbolicElement parse(std::string_view text) const = 0;

  /// The complete set {b : b <= a} when it is finite and known.
  virtual std::optional<std::vector<SymbolicElement>> finite_down_set(
      const SymbolicElement&) const {
    return std::nullopt;
  }

  virtual bool is_zero(const SymbolicElement& a) const { return a == zero(); }
};

/// Shared immutable handle to a model.
class SymbolicSemigroup {
 public:
  using element_type = SymbolicElement;

  explicit SymbolicSemigroup(std::shared_ptr<const SymbolicModel> model);

  const SymbolicModel& model() const noexcept { return *model_; }
  std::shared_ptr<const SymbolicModel> model_ptr() const noexcept { return model_; }

  std::string name() const { return model_->name(); }
  SymbolicElement zero() const { return model_->zero(); }
  SymbolicElement add(const SymbolicElement& a, const SymbolicElement& b) const {
    return model_->add(a, b);
  }
  bool leq(const SymbolicElement& a, const SymbolicElement& b) const {
    return model_->leq(a, b);
  }
  bool way_below(const SymbolicElement& a, const SymbolicElement& b) const {
    return model_->way_below(a, b);
  }
  bool is_zero(const SymbolicElement& a) const { return model_->is_zero(a); }
  std::vector<SymbolicElement> basis(std::size_t depth) const {
    return model_->basis(depth);
  }
  bool contains(const SymbolicElement& a) const { return model_->contains(a); }
  std::string format(const SymbolicElement& a) const { return model_->format(a); }
  SymbolicElement parse(std::string_view text) const { return model_->parse(text); }
  std::optional<std::vector<SymbolicElement>> finite_down_set(
      const SymbolicElement& a) const {
    return model_->finite_down_set(a);
  }

 private:
  std::shared_ptr<const SymbolicModel> model_;
};

enum class InternId : std::uint32_t {};

/// Memoizing view of a symbolic semigroup over small integer ids.
/// A local search cache: create one per computation, do not share.
class InternedView {
 public:
  using element_type = InternId;

  explicit InternedView(SymbolicSemigroup s);

  InternId intern(const SymbolicElement& e);
  std::vector<InternId> intern_all(std::span<const SymbolicElement> es);
  const SymbolicElement& element(InternId id) const {
    return elements_[static_cast<std::size_t>(id)];
  }
  std::vector<SymbolicElement> elements_of(std::span<const InternId> ids) const;

  InternId zero() const noexcept { return zero_; }
  InternId add(InternId a, InternId b);
  bool leq(InternId a, InternId b);
  bool way_below(InternId a, InternId b);
  bool is_zero(InternId a) const noexcept { return a == zero_; }

  const SymbolicSemigroup& semigroup() const noexcept { return s_; }
  std::size_t size() const noexcept { return elements_.size(); }

 private:
  static std::uint64_t key(InternId a, InternId b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
  }

  SymbolicSemigroup s_;
  std::vector<SymbolicElement> elements_;
  std::unordered_map<SymbolicElement, InternId, SymbolicElementHash> ids_;
  std::unordered_map<std::uint64_t, InternId> add_;
  std::unordered_map<std::uint64_t, bool> leq_;
  std::unordered_map<std::uint64_t, bool> ll_;
  InternId zero_{};
};

struct SymbolicAxiomReport {
  AxiomVerdict<SymbolicElement> o5, o6, weak_cancellation;
  std::size_t depth = 0;
  std::size_t slack = 0;
};

inline constexpr std::size_t default_slack = 2;

/// Universal quantifiers over basis(depth), existential over
/// basis(depth + slack). Failures of O6 are exact when down-sets are known.
SymbolicAxiomReport sample_check_axioms(const SymbolicSemigroup& s,
                                        std::size_t depth,
                                        std::size_t slack = default_slack);

/// basis(depth) followed by all sums of at most `budget` basis members, in
/// discovery order. Throws BudgetExceeded past `cap` elements.
std::vector<SymbolicElement> basis_closure(const SymbolicSemigroup& s,
                                           std::size_t depth, std::size_t budget,
                                           std::size_t cap = 4096);

/// Dyadic rationals k / 2^depth with 0 < value <= bound.
std::vector<ExtRational> dyadic_grid(std::size_t depth, std::uint64_t bound);

/// Sampled structural checks: commutativity, associativity, order
/// compatibility, partial order and way-below implies leq over `sample`.
/// Returns a description of the first violation, or nothing.
std::optional<std::string> sample_check_structure(const SymbolicSemigroup& s,
                                                  std::span<const SymbolicElement> sample);

}  // namespace cudim
