#pragma once

// Independent reference computations for the test suites. Nothing here
// calls into the library's search code: tables are rebuilt from their
// defining formulas, and checks are naive loops.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

struct Table {
  std::size_t n = 0;
  std::vector<std::size_t> add;  // row-major
  std::vector<char> leq;

  std::size_t plus(std::size_t a, std::size_t b) const { return add[a * n + b]; }
  bool le(std::size_t a, std::size_t b) const { return leq[a * n + b] != 0; }
};

inline Table make_table(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& add,
                        const std::function<bool(std::size_t, std::size_t)>& leq) {
  Table t{n, std::vector<std::size_t>(n * n), std::vector<char>(n * n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = add(a, b);
      t.leq[a * n + b] = leq(a, b);
    }
  return t;
}

/// Values 0, lo..hi and a top element; sums above hi go to the top.
inline Table truncated_chain(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> vals{0};
  for (std::size_t v = std::max<std::size_t>(lo, 1); v <= hi; ++v) vals.push_back(v);
  const std::size_t top = vals.size();
  return make_table(
      top + 1,
      [&](std::size_t a, std::size_t b) -> std::size_t {
        if (a == top || b == top) return top;
        std::size_t s = vals[a] + vals[b];
        for (std::size_t i = 0; i < top; ++i)
          if (vals[i] == s) return i;
        return top;
      },
      [](std::size_t a, std::size_t b) { return a <= b; });
}

inline Table product(const Table& s, const Table& t) {
  auto m = t.n;
  return make_table(
      s.n * t.n,
      [&](std::size_t a, std::size_t b) {
        return s.plus(a / m, b / m) * m + t.plus(a % m, b % m);
      },
      [&](std::size_t a, std::size_t b) { return s.le(a / m, b / m) && t.le(a % m, b % m); });
}

/// dim 0 by the naive quantifier structure: for all x' <= x <= y1 + y2 there
/// are z1 <= y1, z2 <= y2 with x' <= z1 + z2 <= x.
inline bool dim_zero(const Table& t) {
  for (std::size_t xp = 0; xp < t.n; ++xp)
    for (std::size_t x = 0; x < t.n; ++x) {
      if (!t.le(xp, x)) continue;
      for (std::size_t y1 = 0; y1 < t.n; ++y1)
        for (std::size_t y2 = 0; y2 < t.n; ++y2) {
          if (!t.le(x, t.plus(y1, y2))) continue;
          bool found = false;
          for (std::size_t z1 = 0; z1 < t.n && !found; ++z1)
            for (std::size_t z2 = 0; z2 < t.n && !found; ++z2)
              found = t.le(z1, y1) && t.le(z2, y2) && t.le(xp, t.plus(z1, z2)) &&
                      t.le(t.plus(z1, z2), x);
          if (!found) return false;
        }
    }
  return true;
}

/// Elements of Z over a fixed denominator: compact n or soft p/den, with
/// soft infinity flagged.
struct ZElem {
  bool compact = true;
  bool infinite = false;
  std::int64_t num = 0;  // value * den
};

inline constexpr std::int64_t den = 1024;

inline ZElem zc(std::int64_t n) { return {true, false, n * den}; }
inline ZElem zs(std::int64_t p, std::int64_t q) { return {false, false, p * den / q}; }
inline ZElem zinf() { return {false, true, 0}; }

inline ZElem zadd(ZElem a, ZElem b) {
  if (a.infinite || b.infinite) return zinf();
  return {a.compact && b.compact, false, a.num + b.num};
}

// a < b on extended values
inline bool vlt(ZElem a, ZElem b) {
  if (a.infinite) return false;
  if (b.infinite) return true;
  return a.num < b.num;
}
inline bool vle(ZElem a, ZElem b) { return !vlt(b, a); }

inline bool zleq(ZElem a, ZElem b) {
  if (a.num == 0 && !a.infinite) return true;
  if (a.compact && !b.compact) return vlt(a, b);
  return vle(a, b);
}

inline bool zll(ZElem a, ZElem b) {
  if (a.num == 0 && !a.infinite) return true;
  if (a.compact) return zleq(a, b);
  if (b.compact) return vle(a, b);
  return vlt(a, b);
}

/// Conditions of the dimension definition, with << or <=.
template <class E, class Add, class Rel>
bool witness_ok(const E& xp, const E& x, const std::vector<E>& ys,
                const std::vector<std::vector<E>>& z, E zero, Add add, Rel rel) {
  if (z.size() != ys.size()) return false;
  E total = zero;
  std::size_t cols = z.empty() ? 0 : z[0].size();
  for (std::size_t k = 0; k < cols; ++k) {
    E col = zero;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (!rel(z[j][k], ys[j])) return false;
      col = add(col, z[j][k]);
    }
    if (!rel(col, x)) return false;
    total = add(total, col);
  }
  return rel(xp, total);
}

}  // namespace oracle
