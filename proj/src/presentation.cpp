#include "cudim/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace cudim {

std::string to_string(ValidationErrorKind kind) {
  switch (kind) {
    case ValidationErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ValidationErrorKind::index_out_of_range: return "index-out-of-range";
    case ValidationErrorKind::too_large: return "too-large";
    case ValidationErrorKind::non_commutative: return "non-commutative";
    case ValidationErrorKind::non_associative: return "non-associative";
    case ValidationErrorKind::missing_unit: return "missing-unit";
    case ValidationErrorKind::order_not_partial: return "order-not-partial";
    case ValidationErrorKind::zero_not_least: return "zero-not-least";
    case ValidationErrorKind::order_incompatible: return "order-incompatible";
  }
  return "unknown";
}

namespace {

std::string describe(ValidationErrorKind kind,
                     const std::vector<std::size_t>& witness,
                     const std::string& detail) {
  std::ostringstream out;
  out << to_string(kind);
  if (!witness.empty()) {
    out << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) out << ", ";
      out << witness[i];
    }
    out << ")";
  }
  if (!detail.empty()) out << ": " << detail;
  return out.str();
}

[[noreturn]] void fail(ValidationErrorKind kind,
                       std::vector<std::size_t> witness,
                       const std::string& detail = {}) {
  throw ValidationError(kind, std::move(witness), detail);
}

}  // namespace

ValidationError::ValidationError(ValidationErrorKind kind,
                                 std::vector<std::size_t> witness,
                                 const std::string& detail)
    : std::runtime_error(describe(kind, witness, detail)),
      kind_(kind),
      witness_(std::move(witness)) {}

std::optional<ElementId> FinitePresentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < size_; ++i)
    if (names_[i] == name) return element_at(i);
  return std::nullopt;
}

std::vector<ElementId> FinitePresentation::elements() const {
  std::vector<ElementId> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(element_at(i));
  return out;
}

std::vector<ElementId> FinitePresentation::finite_down_set(ElementId x) const {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < size_; ++i)
    if (leq(element_at(i), x)) out.push_back(element_at(i));
  return out;
}

RawPresentation FinitePresentation::raw() const {
  RawPresentation r;
  r.size = size_;
  r.add.assign(size_, std::vector<std::int64_t>(size_));
  r.leq.assign(size_, std::vector<int>(size_));
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) {
      r.add[i][j] = add_[i * size_ + j];
      r.leq[i][j] = leq_[i * size_ + j];
    }
  r.names = names_;
  return r;
}

FinitePresentation FinitePresentation::build(
    std::size_t size,
    const std::function<std::size_t(std::size_t, std::size_t)>& add,
    const std::function<bool(std::size_t, std::size_t)>& leq,
    std::vector<std::string> names, const ValidationOptions& options) {
  RawPresentation r;
  r.size = size;
  r.add.assign(size, std::vector<std::int64_t>(size));
  r.leq.assign(size, std::vector<int>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      r.add[i][j] = static_cast<std::int64_t>(add(i, j));
      r.leq[i][j] = leq(i, j) ? 1 : 0;
    }
  r.names = std::move(names);
  return validate_presentation(r, options);
}

FinitePresentation validate_presentation(const RawPresentation& raw,
                                         const ValidationOptions& options) {
  using K = ValidationErrorKind;
  const std::size_t n = raw.size;

  if (n == 0) fail(K::dimension_mismatch, {}, "carrier must contain 0");
  if (raw.add.size() != n) fail(K::dimension_mismatch, {}, "add has wrong row count");
  if (raw.leq.size() != n) fail(K::dimension_mismatch, {}, "leq has wrong row count");
  for (std::size_t i = 0; i < n; ++i) {
    if (raw.add[i].size() != n) fail(K::dimension_mismatch, {i}, "add row length");
    if (raw.leq[i].size() != n) fail(K::dimension_mismatch, {i}, "leq row length");
  }
  if (!raw.names.empty() && raw.names.size() != n)
    fail(K::dimension_mismatch, {}, "names length");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto v = raw.add[i][j];
      if (v < 0 || static_cast<std::uint64_t>(v) >= n)
        fail(K::index_out_of_range, {i, j}, "add entry " + std::to_string(v));
      int b = raw.leq[i][j];
      if (b != 0 && b != 1)
        fail(K::index_out_of_range, {i, j}, "leq entry must be 0 or 1");
    }

  if (n > options.max_size && !options.allow_large)
    fail(K::too_large, {n},
         "carrier exceeds " + std::to_string(options.max_size) +
             " elements; pass the override to continue");

  FinitePresentation s;
  s.size_ = n;
  s.add_.resize(n * n);
  s.leq_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s.add_[i * n + j] = static_cast<std::uint32_t>(raw.add[i][j]);
      s.leq_[i * n + j] = static_cast<std::uint8_t>(raw.leq[i][j]);
    }
  if (raw.names.empty()) {
    s.names_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.names_.push_back(std::to_string(i));
  } else {
    s.names_ = raw.names;
  }

  auto A = [&](std::size_t a, std::size_t b) -> std::size_t {
    return s.add_[a * n + b];
  };
  auto L = [&](std::size_t a, std::size_t b) { return s.leq_[a * n + b] != 0; };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (A(x, y) != A(y, x)) fail(K::non_commutative, {x, y});

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (A(A(x, y), z) != A(x, A(y, z))) fail(K::non_associative, {x, y, z});

  for (std::size_t x = 0; x < n; ++x)
    if (A(0, x) != x) fail(K::missing_unit, {x});

  for (std::size_t x = 0; x < n; ++x)
    if (!L(x, x)) fail(K::order_not_partial, {x}, "not reflexive");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (L(x, y) && L(y, x)) fail(K::order_not_partial, {x, y}, "not antisymmetric");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!L(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (L(y, z) && !L(x, z))
          fail(K::order_not_partial, {x, y, z}, "not transitive");
    }

  for (std::size_t x = 0; x < n; ++x)
    if (!L(0, x)) fail(K::zero_not_least, {x});

  // One-sided compatibility suffices given commutativity and transitivity.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xp = 0; xp < n; ++xp) {
      if (!L(x, xp)) continue;
      for (std::size_t y = 0; y < n; ++y)
        if (!L(A(x, y), A(xp, y))) fail(K::order_incompatible, {x, xp, y});
    }

  return s;
}

bool way_below_finite(const FinitePresentation& s, ElementId x, ElementId y) {
  return s.leq(x, y);
}

bool is_isomorphism(const FinitePresentation& s, const FinitePresentation& t,
                    std::span<const std::size_t> map) {
  const std::size_t n = s.size();
  if (t.size() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto m : map) {
    if (m >= n || hit[m]) return false;
    hit[m] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto a = element_at(i), b = element_at(j);
      auto fa = element_at(map[i]), fb = element_at(map[j]);
      if (to_index(t.add(fa, fb)) != map[to_index(s.add(a, b))]) return false;
      if (t.leq(fa, fb) != s.leq(a, b)) return false;
    }
  return true;
}

}  // namespace cudim
