#pragma once

// Checks of O5, O6 and weak cancellation over finite element lists.
//
// Universal quantifiers range over a list `universe`; existential ones over
// a list `pool`. On a finite presentation both are the whole carrier and the
// verdict is exact. Counterexamples are the lexicographically first failing
// tuple under list-index order.

#include "cudim/presentation.hpp"

#include <boost/dynamic_bitset.hpp>

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cudim {

template <class V>
concept MonoidView = requires(V& v, typename V::element_type a) {
  { v.add(a, a) } -> std::convertible_to<typename V::element_type>;
  { v.leq(a, a) } -> std::convertible_to<bool>;
  { v.way_below(a, a) } -> std::convertible_to<bool>;
  { v.zero() } -> std::convertible_to<typename V::element_type>;
};

enum class Axiom { o5, o6, weak_cancellation };

inline std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::o5: return "O5";
    case Axiom::o6: return "O6";
    case Axiom::weak_cancellation: return "weak-cancellation";
  }
  return "unknown";
}

template <class E>
struct AxiomVerdict {
  Axiom axiom{};
  bool holds = true;
  // True when the verdict is decided rather than bounded: a pass over the
  // full carrier, or a failure whose witness search was complete.
  bool exact = true;
  // O5: (x', x, y', y, z). O6: (x', x, y, z). Weak cancellation: (x, y, z).
  std::vector<E> counterexample;
  std::size_t universe_size = 0;
  std::size_t pool_size = 0;
};

/// Returns, for an element x, every v <= x if that set is finite and known.
template <class E>
using DownSetFn = std::function<std::optional<std::vector<E>>(const E&)>;

namespace detail {

using Bits = boost::dynamic_bitset<>;

inline std::size_t first_bit(const Bits& b) {
  return b.find_first();  // Bits::npos when empty
}

}  // namespace detail

/// O5: given x+y <= z, x' << x and y' << y, some c has x'+c <= z <= x+c
/// and y' << c.
template <MonoidView V>
AxiomVerdict<typename V::element_type> check_o5(
    V& v, std::span<const typename V::element_type> universe,
    std::span<const typename V::element_type> pool, bool exhaustive) {
  using E = typename V::element_type;
  using detail::Bits;
  const std::size_t n = universe.size();
  const std::size_t m = pool.size();
  AxiomVerdict<E> out{Axiom::o5, true, exhaustive, {}, n, m};

  // le[a][c] : z with universe[a] + pool[c] <= z.  ge[a][c] : z <= that sum.
  std::vector<Bits> le(n * m, Bits(n)), ge(n * m, Bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < m; ++c) {
      E s = v.add(universe[a], pool[c]);
      for (std::size_t z = 0; z < n; ++z) {
        if (v.leq(s, universe[z])) le[a * m + c].set(z);
        if (v.leq(universe[z], s)) ge[a * m + c].set(z);
      }
    }
  // below[y'] : pool indices c with y' << c.
  std::vector<std::vector<std::size_t>> below(n);
  for (std::size_t yp = 0; yp < n; ++yp)
    for (std::size_t c = 0; c < m; ++c)
      if (v.way_below(universe[yp], pool[c])) below[yp].push_back(c);
  // up_sum[x][y] : z with x + y <= z.
  std::vector<Bits> up_sum(n * n, Bits(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      E s = v.add(universe[x], universe[y]);
      for (std::size_t z = 0; z < n; ++z)
        if (v.leq(s, universe[z])) up_sum[x * n + y].set(z);
    }
  std::vector<std::vector<bool>> ll(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      ll[a][b] = v.way_below(universe[a], universe[b]);

  std::vector<Bits> band(m, Bits(n));
  for (std::size_t xp = 0; xp < n; ++xp)
    for (std::size_t x = 0; x < n; ++x) {
      if (!ll[xp][x]) continue;
      for (std::size_t c = 0; c < m; ++c)
        band[c] = le[xp * m + c] & ge[x * m + c];
      for (std::size_t yp = 0; yp < n; ++yp) {
        Bits ok(n);
        for (std::size_t c : below[yp]) ok |= band[c];
        for (std::size_t y = 0; y < n; ++y) {
          if (!ll[yp][y]) continue;
          Bits bad = up_sum[x * n + y] - ok;
          std::size_t z = detail::first_bit(bad);
          if (z != Bits::npos) {
            out.holds = false;
            out.counterexample = {universe[xp], universe[x], universe[yp],
                                  universe[y], universe[z]};
            return out;
          }
        }
      }
    }
  return out;
}

/// O6: given x' << x <= y+z, some v <= x,y and w <= x,z have x' <= v+w.
/// Where `down` yields the complete down-set of x, candidates come from it
/// and a failure at x is exact.
template <MonoidView V>
AxiomVerdict<typename V::element_type> check_o6(
    V& v, std::span<const typename V::element_type> universe,
    std::span<const typename V::element_type> pool, bool exhaustive,
    const DownSetFn<typename V::element_type>& down = {}) {
  using E = typename V::element_type;
  const std::size_t n = universe.size();
  AxiomVerdict<E> out{Axiom::o6, true, exhaustive, {}, n, pool.size()};

  std::vector<bool> complete(n, false);
  std::vector<std::vector<E>> cands(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::optional<std::vector<E>> d;
    if (down) d = down(universe[x]);
    if (d) {
      cands[x] = std::move(*d);
      complete[x] = true;
    } else {
      for (const E& p : pool)
        if (v.leq(p, universe[x])) cands[x].push_back(p);
    }
  }
  // Maximal candidates below both x and y; sums are monotone, so they suffice.
  auto maximal_below = [&](std::size_t x, std::size_t y) {
    std::vector<E> c;
    for (const E& p : cands[x])
      if (v.leq(p, universe[y])) c.push_back(p);
    std::vector<E> mx;
    for (std::size_t i = 0; i < c.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < c.size() && !dominated; ++j)
        if (i != j && v.leq(c[i], c[j]) && !(v.leq(c[j], c[i]) && j > i))
          dominated = true;
      if (!dominated) mx.push_back(c[i]);
    }
    return mx;
  };

  std::optional<std::vector<std::size_t>> best;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::vector<E>> mx(n);
    for (std::size_t y = 0; y < n; ++y) mx[y] = maximal_below(x, y);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (!v.leq(universe[x], v.add(universe[y], universe[z]))) continue;
        std::vector<E> sums;
        for (const E& a : mx[y])
          for (const E& b : mx[z]) sums.push_back(v.add(a, b));
        for (std::size_t xp = 0; xp < n; ++xp) {
          if (best && xp > (*best)[0]) break;
          if (best && xp == (*best)[0] && x > (*best)[1]) break;
          if (!v.way_below(universe[xp], universe[x])) continue;
          bool found = false;
          for (const E& s : sums)
            if (v.leq(universe[xp], s)) { found = true; break; }
          if (!found) {
            std::vector<std::size_t> t{xp, x, y, z};
            if (!best || t < *best) best = t;
            break;
          }
        }
      }
  }
  if (best) {
    out.holds = false;
    out.exact = exhaustive || complete[(*best)[1]];
    for (auto i : *best) out.counterexample.push_back(universe[i]);
  }
  return out;
}

/// Weak cancellation: x+z << y+z implies x << y.
template <MonoidView V>
AxiomVerdict<typename V::element_type> check_weak_cancellation(
    V& v, std::span<const typename V::element_type> universe, bool exhaustive) {
  using E = typename V::element_type;
  const std::size_t n = universe.size();
  AxiomVerdict<E> out{Axiom::weak_cancellation, true, exhaustive, {}, n, 0};
  std::vector<E> sums(n * n, v.zero());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t z = 0; z < n; ++z) sums[a * n + z] = v.add(universe[a], universe[z]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (v.way_below(universe[x], universe[y])) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (v.way_below(sums[x * n + z], sums[y * n + z])) {
          out.holds = false;
          out.exact = true;  // a universal statement: any instance refutes it
          out.counterexample = {universe[x], universe[y], universe[z]};
          return out;
        }
    }
  return out;
}

// Replays: true when the tuple satisfies the hypotheses and no element of
// `pool` serves as the required witness.

template <MonoidView V>
bool replay_o5(V& v, std::span<const typename V::element_type> t,
               std::span<const typename V::element_type> pool) {
  if (t.size() != 5) return false;
  const auto &xp = t[0], &x = t[1], &yp = t[2], &y = t[3], &z = t[4];
  if (!v.way_below(xp, x) || !v.way_below(yp, y) || !v.leq(v.add(x, y), z))
    return false;
  for (const auto& c : pool)
    if (v.leq(v.add(xp, c), z) && v.leq(z, v.add(x, c)) && v.way_below(yp, c))
      return false;
  return true;
}

template <MonoidView V>
bool replay_o6(V& v, std::span<const typename V::element_type> t,
               std::span<const typename V::element_type> pool) {
  if (t.size() != 4) return false;
  const auto &xp = t[0], &x = t[1], &y = t[2], &z = t[3];
  if (!v.way_below(xp, x) || !v.leq(x, v.add(y, z))) return false;
  for (const auto& a : pool) {
    if (!v.leq(a, x) || !v.leq(a, y)) continue;
    for (const auto& b : pool)
      if (v.leq(b, x) && v.leq(b, z) && v.leq(xp, v.add(a, b))) return false;
  }
  return true;
}

template <MonoidView V>
bool replay_weak_cancellation(V& v, std::span<const typename V::element_type> t) {
  if (t.size() != 3) return false;
  return v.way_below(v.add(t[0], t[2]), v.add(t[1], t[2])) &&
         !v.way_below(t[0], t[1]);
}

/// All three checks over the whole carrier of a finite presentation.
struct FiniteAxiomReport {
  AxiomVerdict<ElementId> o5, o6, weak_cancellation;
};

inline FiniteAxiomReport check_axioms(const FinitePresentation& s) {
  auto all = s.elements();
  std::span<const ElementId> u(all);
  return {check_o5(s, u, u, true), check_o6(s, u, u, true),
          check_weak_cancellation(s, u, true)};
}

inline AxiomVerdict<ElementId> check_axiom(const FinitePresentation& s, Axiom which) {
  auto all = s.elements();
  std::span<const ElementId> u(all);
  switch (which) {
    case Axiom::o5: return check_o5(s, u, u, true);
    case Axiom::o6: return check_o6(s, u, u, true);
    case Axiom::weak_cancellation: return check_weak_cancellation(s, u, true);
  }
  return {};
}

}  // namespace cudim
