#include "cudim/symbolic.hpp"

#include <unordered_set>

namespace cudim {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

struct Less {
  bool operator()(const Compact& a, const Compact& b) const { return a.n < b.n; }
  bool operator()(const Soft& a, const Soft& b) const { return a.q < b.q; }
  bool operator()(const Prime&, const Prime&) const { return false; }
  bool operator()(const Atom& a, const Atom& b) const { return a.index < b.index; }
  bool operator()(const Tuple& a, const Tuple& b) const {
    return std::lexicographical_compare(a.parts.begin(), a.parts.end(),
                                        b.parts.begin(), b.parts.end());
  }
  bool operator()(const IntervalClass& a, const IntervalClass& b) const {
    return std::pair(a.stage, a.index) < std::pair(b.stage, b.index);
  }
};

struct Equal {
  bool operator()(const Compact& a, const Compact& b) const { return a.n == b.n; }
  bool operator()(const Soft& a, const Soft& b) const { return a.q == b.q; }
  bool operator()(const Prime&, const Prime&) const { return true; }
  bool operator()(const Atom& a, const Atom& b) const { return a.index == b.index; }
  bool operator()(const Tuple& a, const Tuple& b) const { return a.parts == b.parts; }
  bool operator()(const IntervalClass& a, const IntervalClass& b) const {
    return a.stage == b.stage && a.index == b.index;
  }
};

struct Hash {
  std::size_t operator()(const Compact& a) const { return std::hash<std::uint64_t>{}(a.n); }
  std::size_t operator()(const Soft& a) const { return a.q.hash(); }
  std::size_t operator()(const Prime&) const { return 17; }
  std::size_t operator()(const Atom& a) const { return a.index; }
  std::size_t operator()(const Tuple& a) const {
    std::size_t h = a.parts.size();
    for (const auto& p : a.parts) h = mix(h, p.hash());
    return h;
  }
  std::size_t operator()(const IntervalClass& a) const {
    return mix(a.stage, a.index);
  }
};

}  // namespace

bool operator==(const SymbolicElement& a, const SymbolicElement& b) {
  if (a.value.index() != b.value.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return Equal{}(x, std::get<T>(b.value));
      },
      a.value);
}

bool operator<(const SymbolicElement& a, const SymbolicElement& b) {
  if (a.value.index() != b.value.index()) return a.value.index() < b.value.index();
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return Less{}(x, std::get<T>(b.value));
      },
      a.value);
}

std::size_t SymbolicElement::hash() const {
  return mix(value.index(), std::visit(Hash{}, value));
}

SymbolicSemigroup::SymbolicSemigroup(std::shared_ptr<const SymbolicModel> model)
    : model_(std::move(model)) {
  if (!model_) throw std::invalid_argument("null semigroup model");
}

InternedView::InternedView(SymbolicSemigroup s) : s_(std::move(s)) {
  zero_ = intern(s_.zero());
}

InternId InternedView::intern(const SymbolicElement& e) {
  auto it = ids_.find(e);
  if (it != ids_.end()) return it->second;
  auto id = static_cast<InternId>(elements_.size());
  elements_.push_back(e);
  ids_.emplace(e, id);
  return id;
}

std::vector<InternId> InternedView::intern_all(std::span<const SymbolicElement> es) {
  std::vector<InternId> out;
  out.reserve(es.size());
  for (const auto& e : es) out.push_back(intern(e));
  return out;
}

std::vector<SymbolicElement> InternedView::elements_of(
    std::span<const InternId> ids) const {
  std::vector<SymbolicElement> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(element(id));
  return out;
}

InternId InternedView::add(InternId a, InternId b) {
  if (a > b) std::swap(a, b);
  auto k = key(a, b);
  auto it = add_.find(k);
  if (it != add_.end()) return it->second;
  // Copies: intern may reallocate elements_.
  SymbolicElement x = element(a), y = element(b);
  InternId r = intern(s_.add(x, y));
  add_.emplace(k, r);
  return r;
}

bool InternedView::leq(InternId a, InternId b) {
  if (a == b) return true;
  auto k = key(a, b);
  auto it = leq_.find(k);
  if (it != leq_.end()) return it->second;
  bool r = s_.leq(element(a), element(b));
  leq_.emplace(k, r);
  return r;
}

bool InternedView::way_below(InternId a, InternId b) {
  auto k = key(a, b);
  auto it = ll_.find(k);
  if (it != ll_.end()) return it->second;
  bool r = s_.way_below(element(a), element(b));
  ll_.emplace(k, r);
  return r;
}

SymbolicAxiomReport sample_check_axioms(const SymbolicSemigroup& s,
                                        std::size_t depth, std::size_t slack) {
  InternedView view(s);
  auto u_el = s.basis(depth);
  auto p_el = s.basis(depth + slack);
  auto u = view.intern_all(u_el);
  auto p = view.intern_all(p_el);

  DownSetFn<InternId> down = [&](const InternId& x) -> std::optional<std::vector<InternId>> {
    auto d = s.finite_down_set(view.element(x));
    if (!d) return std::nullopt;
    return view.intern_all(*d);
  };

  auto lift = [&](AxiomVerdict<InternId> v) {
    AxiomVerdict<SymbolicElement> out{v.axiom, v.holds, v.exact,
                                      view.elements_of(v.counterexample),
                                      v.universe_size, v.pool_size};
    return out;
  };

  SymbolicAxiomReport r;
  r.depth = depth;
  r.slack = slack;
  r.o5 = lift(check_o5(view, std::span<const InternId>(u), p, false));
  r.o6 = lift(check_o6(view, std::span<const InternId>(u), p, false, down));
  r.weak_cancellation =
      lift(check_weak_cancellation(view, std::span<const InternId>(u), false));
  return r;
}

std::vector<SymbolicElement> basis_closure(const SymbolicSemigroup& s,
                                           std::size_t depth, std::size_t budget,
                                           std::size_t cap) {
  std::vector<SymbolicElement> out;
  std::unordered_set<SymbolicElement, SymbolicElementHash> seen;
  auto push = [&](const SymbolicElement& e) {
    if (!seen.insert(e).second) return;
    if (out.size() >= cap)
      throw BudgetExceeded("basis closure exceeds " + std::to_string(cap) +
                           " elements");
    out.push_back(e);
  };
  const auto base = s.basis(depth);
  for (const auto& e : base) push(e);
  // level holds the sums of exactly k basis members found so far.
  std::vector<SymbolicElement> level = base;
  for (std::size_t k = 2; k <= budget; ++k) {
    std::vector<SymbolicElement> next;
    std::unordered_set<SymbolicElement, SymbolicElementHash> next_seen;
    for (const auto& a : level)
      for (const auto& b : base) {
        auto c = s.add(a, b);
        if (next_seen.insert(c).second) next.push_back(c);
        push(c);
      }
    level = std::move(next);
  }
  return out;
}

std::vector<ExtRational> dyadic_grid(std::size_t depth, std::uint64_t bound) {
  std::vector<ExtRational> out;
  const boost::multiprecision::cpp_int den = boost::multiprecision::cpp_int(1) << depth;
  const boost::multiprecision::cpp_int top = den * bound;
  for (boost::multiprecision::cpp_int k = 1; k <= top; ++k)
    out.emplace_back(Rational(k, den));
  return out;
}

std::optional<std::string> sample_check_structure(
    const SymbolicSemigroup& s, std::span<const SymbolicElement> sample) {
  InternedView v(s);
  auto ids = v.intern_all(sample);
  auto show = [&](std::initializer_list<InternId> t) {
    std::string r = "(";
    bool first = true;
    for (auto i : t) {
      if (!first) r += ", ";
      first = false;
      r += s.format(v.element(i));
    }
    return r + ")";
  };
  for (auto a : ids) {
    if (!v.leq(a, a)) return "leq not reflexive at " + show({a});
    if (!v.leq(v.zero(), a)) return "zero not least at " + show({a});
    if (v.add(v.zero(), a) != a) return "zero not a unit at " + show({a});
  }
  for (auto a : ids)
    for (auto b : ids) {
      if (v.add(a, b) != v.intern(s.add(v.element(b), v.element(a))))
        return "add not commutative at " + show({a, b});
      if (v.way_below(a, b) && !v.leq(a, b))
        return "way-below without leq at " + show({a, b});
      if (a != b && v.leq(a, b) && v.leq(b, a))
        return "leq not antisymmetric at " + show({a, b});
    }
  for (auto a : ids)
    for (auto b : ids)
      for (auto c : ids) {
        if (v.add(v.add(a, b), c) != v.add(a, v.add(b, c)))
          return "add not associative at " + show({a, b, c});
        if (v.leq(a, b) && v.leq(b, c) && !v.leq(a, c))
          return "leq not transitive at " + show({a, b, c});
        if (v.leq(a, b) && !v.leq(v.add(a, c), v.add(b, c)))
          return "order not compatible at " + show({a, b, c});
        if (v.way_below(a, b) && v.leq(b, c) && !v.way_below(a, c))
          return "way-below not absorbing at " + show({a, b, c});
      }
  return std::nullopt;
}

}  // namespace cudim
