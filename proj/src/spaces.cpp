#include "cudim/spaces.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace cudim {

namespace {

using Set = FinSpace::Set;

std::vector<Set> close_family(std::vector<Set> fam, Set full) {
  std::set<Set> s(fam.begin(), fam.end());
  s.insert(0);
  s.insert(full);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Set> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur) {
        if (s.insert(a | b).second) changed = true;
        if (s.insert(a & b).second) changed = true;
      }
  }
  return {s.begin(), s.end()};
}

bool chromatic_at_most(const std::vector<Set>& sets, std::size_t k) {
  const std::size_t m = sets.size();
  std::vector<std::size_t> color(m, 0);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == m) return true;
    for (std::size_t c = 0; c < k; ++c) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (color[j] == c && (sets[i] & sets[j])) ok = false;
      if (!ok) continue;
      color[i] = c;
      if (place(i + 1)) return true;
      // Colors are interchangeable: a fresh color that failed need not be
      // retried under another name.
      bool fresh = true;
      for (std::size_t j = 0; j < i; ++j)
        if (color[j] == c) fresh = false;
      if (fresh) break;
    }
    return false;
  };
  return place(0);
}

std::size_t chromatic_number(const std::vector<Set>& sets) {
  for (std::size_t k = 1; k <= sets.size(); ++k)
    if (chromatic_at_most(sets, k)) return k;
  return sets.size();
}

/// Every irreducible cover of `full` by members of `family` (nonempty
/// members only), each listed once.
std::vector<std::vector<Set>> irreducible_covers(const std::vector<Set>& family, Set full) {
  std::set<std::vector<Set>> found;
  std::vector<Set> chosen;
  std::function<void(Set)> go = [&](Set covered) {
    if (covered == full) {
      // Irreducible: every member covers a point no other member covers.
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        Set others = 0;
        for (std::size_t j = 0; j < chosen.size(); ++j)
          if (j != i) others |= chosen[j];
        if ((chosen[i] & ~others) == 0) return;
      }
      auto c = chosen;
      std::sort(c.begin(), c.end());
      found.insert(c);
      return;
    }
    Set missing = full & ~covered;
    Set low = missing & (~missing + 1);
    for (auto u : family) {
      if (!(u & low)) continue;
      chosen.push_back(u);
      go(covered | u);
      chosen.pop_back();
    }
  };
  go(0);
  return {found.begin(), found.end()};
}

std::vector<std::uint32_t> permute(const std::vector<Set>& opens, const std::vector<int>& perm) {
  std::vector<std::uint32_t> out;
  for (auto o : opens) {
    Set m = 0;
    for (std::size_t p = 0; p < perm.size(); ++p)
      if (o & (Set{1} << p)) m |= Set{1} << perm[p];
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FinSpace FinSpace::from_masks(std::size_t points, std::vector<Set> opens, bool strict,
                              std::vector<std::string> names) {
  if (points == 0 || points > max_points)
    throw InvalidInput("invalid-space", "a space needs 1 to " + std::to_string(max_points) +
                                            " points");
  FinSpace x;
  if (names.empty())
    for (std::size_t p = 0; p < points; ++p) names.push_back("p" + std::to_string(p));
  if (names.size() != points) throw InvalidInput("invalid-space", "names length");
  x.names_ = std::move(names);
  const Set full = x.full();
  for (auto o : opens)
    if (o & ~full) throw InvalidInput("invalid-space", "open set outside the space");
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  auto closed = close_family(opens, full);
  if (strict && closed != opens)
    throw InvalidInput("invalid-space",
                       "opens must contain the empty set and the space and be closed "
                       "under union and intersection");
  x.opens_ = std::move(closed);
  return x;
}

FinSpace FinSpace::make(std::vector<std::string> points,
                        const std::vector<std::vector<std::string>>& opens, bool strict) {
  std::map<std::string, std::size_t> index;
  for (std::size_t p = 0; p < points.size(); ++p)
    if (!index.emplace(points[p], p).second)
      throw InvalidInput("invalid-space", "duplicate point '" + points[p] + "'");
  std::vector<Set> masks;
  for (const auto& o : opens) {
    Set m = 0;
    for (const auto& name : o) {
      auto it = index.find(name);
      if (it == index.end()) throw InvalidInput("invalid-space", "unknown point '" + name + "'");
      m |= Set{1} << it->second;
    }
    masks.push_back(m);
  }
  const std::size_t n = points.size();
  return from_masks(n, std::move(masks), strict, std::move(points));
}

bool FinSpace::is_open(Set s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

std::string FinSpace::format(Set s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t p = 0; p < size(); ++p)
    if (s & (Set{1} << p)) {
      if (!first) out += ",";
      first = false;
      out += names_[p];
    }
  return out + "}";
}

FinSpace point_space() { return FinSpace::from_masks(1, {}, false, {"a"}); }

FinSpace discrete_space(std::size_t n) {
  std::vector<Set> opens;
  for (std::size_t p = 0; p < n; ++p) opens.push_back(Set{1} << p);
  return FinSpace::from_masks(n, std::move(opens));
}

FinSpace sierpinski_space() { return FinSpace::from_masks(2, {0b01}, false, {"a", "b"}); }

FinSpace v_space() {
  return FinSpace::from_masks(3, {0, 0b001, 0b011, 0b101, 0b111}, true, {"a", "b", "c"});
}

FinSpace disjoint_union(const FinSpace& x, const FinSpace& y) {
  const std::size_t shift = x.size();
  std::vector<Set> opens;
  for (auto a : x.opens())
    for (auto b : y.opens()) opens.push_back(a | (b << shift));
  auto names = x.names();
  for (const auto& n : y.names()) names.push_back(n + "'");
  return FinSpace::from_masks(x.size() + y.size(), std::move(opens), true, std::move(names));
}

std::vector<FinSpace> all_spaces(std::size_t n) {
  if (n == 0 || n > 4) throw InvalidInput("invalid-parameters", "all_spaces supports 1..4 points");
  // Topologies on a finite set are the up-set families of preorders.
  const std::size_t pairs = n * n;
  std::set<std::vector<std::uint32_t>> canon;
  std::vector<FinSpace> out;
  std::vector<int> perm(n);
  for (std::uint32_t rel = 0; rel < (1u << pairs); ++rel) {
    auto r = [&](std::size_t i, std::size_t j) { return (rel >> (i * n + j)) & 1u; };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = r(i, i);
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k)
          if (r(i, j) && r(j, k) && !r(i, k)) ok = false;
    if (!ok) continue;
    std::vector<Set> opens;
    for (Set u = 0; u < (Set{1} << n); ++u) {
      bool up = true;
      for (std::size_t i = 0; i < n && up; ++i)
        for (std::size_t j = 0; j < n && up; ++j)
          if ((u >> i & 1) && r(i, j) && !(u >> j & 1)) up = false;
      if (up) opens.push_back(u);
    }
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> best;
    do {
      auto p = permute(opens, perm);
      if (best.empty() || p < best) best = p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (canon.insert(best).second)
      out.push_back(FinSpace::from_masks(n, std::vector<Set>(best.begin(), best.end()), true));
  }
  return out;
}

std::size_t covering_dim(const FinSpace& x) {
  const Set full = x.full();
  std::vector<Set> nonempty;
  for (auto o : x.opens())
    if (o) nonempty.push_back(o);
  std::size_t dim = 0;
  for (const auto& cover : irreducible_covers(nonempty, full)) {
    std::vector<Set> admissible;
    for (auto o : nonempty)
      for (auto u : cover)
        if ((o & ~u) == 0) {
          admissible.push_back(o);
          break;
        }
    // Dropping members never raises the chromatic number, so irreducible
    // refinements suffice.
    std::size_t best = static_cast<std::size_t>(-1);
    for (const auto& ref : irreducible_covers(admissible, full))
      best = std::min(best, chromatic_number(ref));
    dim = std::max(dim, best - 1);
  }
  return dim;
}

std::optional<ElementId> LscSemigroup::find(std::span<const std::uint32_t> v) const {
  for (std::size_t e = 0; e < values.size(); ++e)
    if (std::equal(values[e].begin(), values[e].end(), v.begin(), v.end()))
      return element_at(e);
  return std::nullopt;
}

std::optional<ElementId> LscSemigroup::characteristic(FinSpace::Set u) const {
  if (values.empty()) return std::nullopt;
  std::vector<std::uint32_t> v(values[0].size());
  for (std::size_t p = 0; p < v.size(); ++p) v[p] = (u >> p & 1) ? 1 : 0;
  return find(v);
}

LscSemigroup lsc_semigroup(const FinSpace& x, std::size_t cap, LscVariant variant,
                           std::size_t max_carrier) {
  if (cap < 1) throw InvalidInput("invalid-parameters", "cap must be at least 1");
  const std::size_t n = x.size();
  const auto inf = static_cast<std::uint32_t>(cap + 1);
  std::vector<std::vector<std::uint32_t>> vals;
  std::vector<std::uint32_t> f(n, 0);
  auto lsc = [&] {
    for (std::uint32_t t = 1; t <= inf; ++t) {
      Set s = 0;
      for (std::size_t p = 0; p < n; ++p)
        if (f[p] >= t) s |= Set{1} << p;
      if (!x.is_open(s)) return false;
    }
    return true;
  };
  // Lexicographic over value vectors, point 0 most significant.
  while (true) {
    bool zero = std::all_of(f.begin(), f.end(), [](auto v) { return v == 0; });
    bool positive = std::all_of(f.begin(), f.end(), [](auto v) { return v >= 1; });
    if (lsc() && (variant == LscVariant::full || zero || positive)) {
      if (vals.size() >= max_carrier)
        throw CarrierTooLarge("Lsc carrier exceeds " + std::to_string(max_carrier) +
                              " elements");
      vals.push_back(f);
    }
    std::size_t i = n;
    while (i > 0 && f[i - 1] == inf) f[--i] = 0;
    if (i == 0) break;
    ++f[i - 1];
  }

  auto name_of = [&](const std::vector<std::uint32_t>& v) {
    std::string s = "(";
    for (std::size_t p = 0; p < v.size(); ++p) {
      if (p) s += ",";
      s += v[p] == inf ? "inf" : std::to_string(v[p]);
    }
    return s + ")";
  };
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t e = 0; e < vals.size(); ++e) {
    index[vals[e]] = e;
    names.push_back(name_of(vals[e]));
  }
  auto p = FinitePresentation::build(
      vals.size(),
      [&](std::size_t a, std::size_t b) {
        std::vector<std::uint32_t> s(n);
        for (std::size_t p = 0; p < n; ++p) {
          std::uint32_t u = vals[a][p], v = vals[b][p];
          s[p] = (u == inf || v == inf || u + v > cap) ? inf : u + v;
        }
        return index.at(s);
      },
      [&](std::size_t a, std::size_t b) {
        for (std::size_t p = 0; p < n; ++p)
          if (vals[a][p] > vals[b][p]) return false;
        return true;
      },
      std::move(names), ValidationOptions{max_carrier, true});
  return LscSemigroup{std::move(p), cap, std::move(vals)};
}

}  // namespace cudim
