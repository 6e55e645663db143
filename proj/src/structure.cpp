#include "cudim/structure.hpp"

#include "cudim/constructions.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

namespace cudim {

std::string to_string(Dichotomy d) {
  switch (d) {
    case Dichotomy::algebraic: return "algebraic";
    case Dichotomy::soft: return "soft";
    case Dichotomy::neither: return "neither";
    case Dichotomy::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

template <class V, class E = typename V::element_type>
struct Sample {
  V& v;
  std::vector<E> sample;
  std::vector<E> pool;
  bool exhaustive;
  std::size_t depth;
  std::size_t complement_samples;
};

template <class V, class E>
Flag is_soft(Sample<V, E>& c, const E& x) {
  auto& v = c.v;
  if (v.is_zero(x)) return {true, true, c.depth};
  for (const E& xp : c.sample) {
    if (!v.way_below(xp, x)) continue;
    bool found = false;
    for (const E& t : c.pool)
      if (!v.is_zero(t) && v.way_below(v.add(xp, t), x)) {
        found = true;
        break;
      }
    if (!found) return {false, c.exhaustive, c.depth};
  }
  return {true, c.exhaustive, c.depth};
}

template <class V, class E>
ElementClass classify(Sample<V, E>& c, const E& x) {
  auto& v = c.v;
  ElementClass out;
  out.compact = {v.way_below(x, x), true, c.depth};
  out.soft = is_soft(c, x);

  out.thin_boundary = {true, c.exhaustive, c.depth};
  for (const E& t : c.sample)
    if (!v.is_zero(t) && !v.way_below(x, v.add(x, t))) {
      out.thin_boundary = {false, true, c.depth};
      break;
    }

  out.complementable = {true, c.exhaustive, c.depth};
  std::size_t taken = 0;
  for (const E& y : c.sample) {
    if (!v.way_below(x, y)) continue;
    if (!c.exhaustive && taken == c.complement_samples) {
      break;
    }
    ++taken;
    bool found = false;
    for (const E& z : c.pool)
      if (v.add(x, z) == y) {
        found = true;
        break;
      }
    if (!found) {
      out.complementable = {false, c.exhaustive, c.depth};
      break;
    }
  }
  return out;
}

template <class V, class E>
Flag idempotent(Sample<V, E>& c) {
  for (const E& x : c.sample)
    if (!(c.v.add(x, x) == x)) return {false, true, c.depth};
  return {true, c.exhaustive, c.depth};
}

template <class V, class E>
Flag algebraic(Sample<V, E>& c) {
  auto& v = c.v;
  for (const E& xp : c.sample)
    for (const E& x : c.sample) {
      if (!v.way_below(xp, x)) continue;
      bool found = false;
      for (const E& k : c.pool)
        if (v.way_below(k, k) && v.leq(xp, k) && v.way_below(k, x)) {
          found = true;
          break;
        }
      if (!found) return {false, c.exhaustive, c.depth};
    }
  return {true, c.exhaustive, c.depth};
}

template <class V, class E>
Flag all_soft(Sample<V, E>& c) {
  for (const E& x : c.sample) {
    auto f = is_soft(c, x);
    if (!f.value) return f;
  }
  return {true, c.exhaustive, c.depth};
}

Dichotomy dichotomy_of(const SemigroupProfile& p) {
  if (!p.simple.value) return Dichotomy::unknown;
  if (p.algebraic.value) return Dichotomy::algebraic;
  if (p.soft.value) return Dichotomy::soft;
  return Dichotomy::neither;
}

}  // namespace

ElementClass classify_element(const FinitePresentation& s, ElementId x) {
  Sample<const FinitePresentation> c{s, s.elements(), s.elements(), true, 0, 0};
  return classify(c, x);
}

ElementClass classify_element(const SymbolicSemigroup& s, const SymbolicElement& x,
                              const ClassifyOptions& options) {
  InternedView v(s);
  Sample<InternedView> c{v, v.intern_all(s.basis(options.depth)),
                         v.intern_all(s.basis(options.depth + options.slack)), false,
                         options.depth, options.complement_samples};
  return classify(c, v.intern(x));
}

SemigroupProfile profile(const FinitePresentation& s) {
  Sample<const FinitePresentation> c{s, s.elements(), s.elements(), true, 0, 0};
  SemigroupProfile p;
  auto ideals = all_ideals(s);
  p.simple = {s.size() > 1 && ideals.size() == 2, true, 0};
  // A finite nonzero semigroup always has a minimal nonzero element.
  p.elementary = p.simple;
  p.algebraic = algebraic(c);
  p.soft = all_soft(c);
  p.idempotent = idempotent(c);
  p.dichotomy = dichotomy_of(p);
  return p;
}

SemigroupProfile profile(const SymbolicSemigroup& s, const ClassifyOptions& options) {
  InternedView v(s);
  Sample<InternedView> c{v, v.intern_all(s.basis(options.depth)),
                         v.intern_all(s.basis(options.depth + options.slack)), false,
                         options.depth, options.complement_samples};
  SemigroupProfile p;

  // Simple: every nonzero x generates every sampled y, that is y' <= N x
  // for each y' << y. N covers the finest basis step at this depth.
  const std::size_t big = ((options.depth + 1) << options.depth) + 1;
  bool simple = c.sample.size() > 1;
  for (auto x : c.sample) {
    if (!simple) break;
    if (v.is_zero(x)) continue;
    auto mult = v.zero();
    for (std::size_t i = 0; i < big; ++i) mult = v.add(mult, x);
    for (auto y : c.sample)
      for (auto yp : c.sample)
        if (v.way_below(yp, y) && !v.leq(yp, mult)) simple = false;
  }
  p.simple = {simple, false, options.depth};

  // Elementary: simple with a nonzero element that has nothing nonzero
  // strictly below it.
  bool minimal_found = false;
  for (auto x : c.sample) {
    if (v.is_zero(x)) continue;
    auto down = s.finite_down_set(v.element(x));
    bool minimal = true;
    if (down) {
      for (const auto& d : *down)
        if (!s.is_zero(d) && !(d == v.element(x))) minimal = false;
    } else {
      for (auto d : c.pool)
        if (!v.is_zero(d) && d != x && v.leq(d, x)) minimal = false;
    }
    if (minimal) {
      minimal_found = true;
      break;
    }
  }
  p.elementary = {simple && minimal_found, false, options.depth};
  p.algebraic = algebraic(c);
  p.soft = all_soft(c);
  p.idempotent = idempotent(c);
  p.dichotomy = dichotomy_of(p);
  return p;
}

std::optional<SymbolicElement> small_elements_witness(const SymbolicSemigroup& s,
                                                      const SymbolicElement& u0,
                                                      const SymbolicElement& u1,
                                                      std::size_t depth) {
  for (const auto& w : basis_closure(s, depth, 2)) {
    if (s.is_zero(w)) continue;
    auto ww = s.add(w, w);
    if (s.way_below(ww, u0) && s.way_below(ww, u1)) return w;
  }
  return std::nullopt;
}

std::optional<ElementId> small_elements_witness(const FinitePresentation& s, ElementId u0,
                                                ElementId u1) {
  for (auto w : s.elements()) {
    if (s.is_zero(w)) continue;
    auto ww = s.add(w, w);
    if (s.leq(ww, u0) && s.leq(ww, u1)) return w;
  }
  return std::nullopt;
}

BoundedVerdict<ElementId> riesz_interpolation_check(const FinitePresentation& s) {
  using Bits = boost::dynamic_bitset<>;
  const std::size_t n = s.size();
  std::vector<Bits> up(n, Bits(n)), down(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (s.leq(element_at(a), element_at(b))) {
        up[a].set(b);
        down[b].set(a);
      }
  BoundedVerdict<ElementId> out;
  out.exact = true;
  for (std::size_t x0 = 0; x0 < n; ++x0)
    for (std::size_t x1 = 0; x1 < n; ++x1) {
      Bits above = up[x0] & up[x1];
      for (std::size_t y0 = 0; y0 < n; ++y0) {
        if (!above[y0]) continue;
        for (std::size_t y1 = 0; y1 < n; ++y1) {
          if (!above[y1]) continue;
          if (!(above & down[y0] & down[y1]).any()) {
            out.status = VerdictStatus::refuted;
            out.tuple = {element_at(x0), element_at(x1), element_at(y0), element_at(y1)};
            return out;
          }
        }
      }
    }
  return out;
}

namespace {

template <class V, class E = typename V::element_type>
BoundedVerdict<E> almost_divisible(V& v, const std::vector<E>& sample,
                                   const std::vector<E>& pool, std::size_t n_max) {
  BoundedVerdict<E> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<E> ny, n1y;
    for (const E& y : pool) {
      E m = v.zero();
      for (std::size_t i = 0; i < n; ++i) m = v.add(m, y);
      ny.push_back(m);
      n1y.push_back(v.add(m, y));
    }
    for (const E& xp : sample)
      for (const E& x : sample) {
        if (!v.way_below(xp, x)) continue;
        bool found = false;
        for (std::size_t i = 0; i < pool.size() && !found; ++i)
          found = v.leq(ny[i], x) && v.leq(xp, n1y[i]);
        if (!found) {
          out.status = VerdictStatus::refuted;
          out.tuple = {xp, x};
          out.r_max = n;
          return out;
        }
      }
  }
  out.r_max = n_max;
  return out;
}

}  // namespace

BoundedVerdict<ElementId> almost_divisible_check(const FinitePresentation& s,
                                                 std::size_t n_max) {
  auto all = s.elements();
  auto out = almost_divisible(s, all, all, n_max);
  out.exact = true;
  return out;
}

BoundedVerdict<SymbolicElement> almost_divisible_check(const SymbolicSemigroup& s,
                                                       std::size_t n_max, std::size_t depth,
                                                       std::size_t slack) {
  InternedView v(s);
  auto sample = v.intern_all(s.basis(depth));
  auto pool = v.intern_all(s.basis(depth + slack));
  auto b = almost_divisible(v, sample, pool, n_max);
  BoundedVerdict<SymbolicElement> out;
  out.status = b.status;
  out.tuple = v.elements_of(b.tuple);
  out.r_max = b.r_max;
  out.depth = depth;
  out.slack = slack;
  return out;
}

}  // namespace cudim
