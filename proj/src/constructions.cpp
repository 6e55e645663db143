#include "cudim/constructions.hpp"

#include "cudim/catalog.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace cudim {

namespace {

const ValidationOptions constructed{64, true};

std::string trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return std::string(s);
}

/// Splits "a, b, c" at top-level commas.
std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

class FiniteModel final : public SymbolicModel {
 public:
  FiniteModel(FinitePresentation p, std::string name)
      : p_(std::move(p)), name_(std::move(name)) {}

  std::string name() const override { return name_; }
  SymbolicElement zero() const override { return Atom{0}; }
  SymbolicElement add(const SymbolicElement& a, const SymbolicElement& b) const override {
    return Atom{static_cast<std::uint32_t>(to_index(p_.add(id(a), id(b))))};
  }
  bool leq(const SymbolicElement& a, const SymbolicElement& b) const override {
    return p_.leq(id(a), id(b));
  }
  bool way_below(const SymbolicElement& a, const SymbolicElement& b) const override {
    return p_.leq(id(a), id(b));
  }
  std::vector<SymbolicElement> basis(std::size_t) const override {
    std::vector<SymbolicElement> out;
    for (std::size_t i = 0; i < p_.size(); ++i) out.push_back(Atom{static_cast<std::uint32_t>(i)});
    return out;
  }
  bool contains(const SymbolicElement& a) const override {
    return a.is<Atom>() && a.as<Atom>().index < p_.size();
  }
  std::string format(const SymbolicElement& a) const override {
    return p_.name(id(a));
  }
  SymbolicElement parse(std::string_view text) const override {
    std::string t = trim(text);
    if (auto e = p_.find(t)) return Atom{static_cast<std::uint32_t>(to_index(*e))};
    throw InvalidInput("invalid-element", "'" + t + "' is not an element of " + name_);
  }
  std::optional<std::vector<SymbolicElement>> finite_down_set(
      const SymbolicElement& a) const override {
    std::vector<SymbolicElement> out;
    for (auto e : p_.finite_down_set(id(a)))
      out.push_back(Atom{static_cast<std::uint32_t>(to_index(e))});
    return out;
  }

 private:
  ElementId id(const SymbolicElement& a) const {
    if (!contains(a)) throw InvalidInput("invalid-element", "not an element of " + name_);
    return element_at(a.as<Atom>().index);
  }
  FinitePresentation p_;
  std::string name_;
};

class SumModel final : public SymbolicModel {
 public:
  SumModel(SymbolicSemigroup l, SymbolicSemigroup r) : l_(std::move(l)), r_(std::move(r)) {}

  std::string name() const override {
    return "DirectSumOf(" + l_.name() + "," + r_.name() + ")";
  }
  SymbolicElement zero() const override { return pair(l_.zero(), r_.zero()); }
  SymbolicElement add(const SymbolicElement& a, const SymbolicElement& b) const override {
    return pair(l_.add(left(a), left(b)), r_.add(right(a), right(b)));
  }
  bool leq(const SymbolicElement& a, const SymbolicElement& b) const override {
    return l_.leq(left(a), left(b)) && r_.leq(right(a), right(b));
  }
  bool way_below(const SymbolicElement& a, const SymbolicElement& b) const override {
    return l_.way_below(left(a), left(b)) && r_.way_below(right(a), right(b));
  }
  std::vector<SymbolicElement> basis(std::size_t d) const override {
    std::vector<SymbolicElement> out;
    auto lb = l_.basis(d), rb = r_.basis(d);
    for (const auto& a : lb)
      for (const auto& b : rb) out.push_back(pair(a, b));
    return out;
  }
  bool contains(const SymbolicElement& a) const override {
    return a.is<Tuple>() && a.as<Tuple>().parts.size() == 2 &&
           l_.contains(left(a)) && r_.contains(right(a));
  }
  std::string format(const SymbolicElement& a) const override {
    return "(" + l_.format(left(a)) + ", " + r_.format(right(a)) + ")";
  }
  SymbolicElement parse(std::string_view text) const override {
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
      throw InvalidInput("invalid-element", "expected a pair, got '" + t + "'");
    auto parts = split_top(std::string_view(t).substr(1, t.size() - 2));
    if (parts.size() != 2)
      throw InvalidInput("invalid-element", "expected a pair, got '" + t + "'");
    return pair(l_.parse(parts[0]), r_.parse(parts[1]));
  }
  std::optional<std::vector<SymbolicElement>> finite_down_set(
      const SymbolicElement& a) const override {
    auto dl = l_.finite_down_set(left(a));
    auto dr = r_.finite_down_set(right(a));
    if (!dl || !dr) return std::nullopt;
    std::vector<SymbolicElement> out;
    for (const auto& x : *dl)
      for (const auto& y : *dr) out.push_back(pair(x, y));
    return out;
  }

 private:
  static SymbolicElement pair(SymbolicElement a, SymbolicElement b) {
    return Tuple{{std::move(a), std::move(b)}};
  }
  static const SymbolicElement& left(const SymbolicElement& a) {
    return a.as<Tuple>().parts.at(0);
  }
  static const SymbolicElement& right(const SymbolicElement& a) {
    return a.as<Tuple>().parts.at(1);
  }
  SymbolicSemigroup l_, r_;
};

class SubModel final : public SymbolicModel {
 public:
  SubModel(SymbolicSemigroup base, std::function<bool(const SymbolicElement&)> keep,
           std::string name)
      : base_(std::move(base)), keep_(std::move(keep)), name_(std::move(name)) {}

  std::string name() const override { return name_; }
  SymbolicElement zero() const override { return base_.zero(); }
  SymbolicElement add(const SymbolicElement& a, const SymbolicElement& b) const override {
    return base_.add(a, b);
  }
  bool leq(const SymbolicElement& a, const SymbolicElement& b) const override {
    return base_.leq(a, b);
  }
  bool way_below(const SymbolicElement& a, const SymbolicElement& b) const override {
    return base_.way_below(a, b);
  }
  std::vector<SymbolicElement> basis(std::size_t d) const override {
    std::vector<SymbolicElement> out;
    for (auto& e : base_.basis(d))
      if (keep_(e)) out.push_back(std::move(e));
    return out;
  }
  bool contains(const SymbolicElement& a) const override {
    return base_.contains(a) && keep_(a);
  }
  std::string format(const SymbolicElement& a) const override { return base_.format(a); }
  SymbolicElement parse(std::string_view text) const override {
    auto e = base_.parse(text);
    if (!keep_(e))
      throw InvalidInput("invalid-element", "'" + std::string(text) + "' is not in " + name_);
    return e;
  }
  std::optional<std::vector<SymbolicElement>> finite_down_set(
      const SymbolicElement& a) const override {
    auto d = base_.finite_down_set(a);
    if (!d) return std::nullopt;
    std::vector<SymbolicElement> out;
    for (auto& e : *d)
      if (keep_(e)) out.push_back(std::move(e));
    return out;
  }

 private:
  SymbolicSemigroup base_;
  std::function<bool(const SymbolicElement&)> keep_;
  std::string name_;
};

class ChainLimitModel final : public SymbolicModel {
 public:
  ChainLimitModel(ChainSystem sys, std::string name)
      : sys_(std::move(sys)), name_(std::move(name)) {
    const std::size_t L = sys_.stages.size() - 1;
    image_.resize(L + 1);
    for (std::size_t s = 0; s <= L; ++s) {
      const std::size_t n = sys_.stages[s].size();
      image_[s].resize(n);
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t b = a;
        for (std::size_t t = s; t < L; ++t) b = sys_.maps[t][b];
        image_[s][a] = b;
      }
    }
    canon_.assign(last().size(), std::nullopt);
    for (std::size_t s = 0; s <= L; ++s)
      for (std::size_t a = 0; a < image_[s].size(); ++a) {
        auto& c = canon_[image_[s][a]];
        if (!c) c = IntervalClass{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(a)};
      }
  }

  std::string name() const override { return name_; }
  SymbolicElement zero() const override { return *canon_[image_[0][0]]; }
  SymbolicElement add(const SymbolicElement& a, const SymbolicElement& b) const override {
    auto s = last().add(element_at(at_last(a)), element_at(at_last(b)));
    return *canon_[to_index(s)];
  }
  bool leq(const SymbolicElement& a, const SymbolicElement& b) const override {
    return last().leq(element_at(at_last(a)), element_at(at_last(b)));
  }
  bool way_below(const SymbolicElement& a, const SymbolicElement& b) const override {
    return leq(a, b);
  }
  std::vector<SymbolicElement> basis(std::size_t d) const override {
    const std::size_t s = std::min(d, sys_.stages.size() - 1);
    std::vector<SymbolicElement> out;
    std::vector<bool> seen(last().size(), false);
    for (std::size_t a = 0; a < image_[s].size(); ++a) {
      auto b = image_[s][a];
      if (seen[b]) continue;
      seen[b] = true;
      out.push_back(*canon_[b]);
    }
    return out;
  }
  bool contains(const SymbolicElement& a) const override {
    if (!a.is<IntervalClass>()) return false;
    const auto& c = a.as<IntervalClass>();
    if (c.stage >= sys_.stages.size() || c.index >= image_[c.stage].size()) return false;
    const auto& k = *canon_[image_[c.stage][c.index]];
    return k.stage == c.stage && k.index == c.index;
  }
  std::string format(const SymbolicElement& a) const override {
    const auto& c = a.as<IntervalClass>();
    return "[" + std::to_string(c.stage) + ":" +
           sys_.stages[c.stage].name(element_at(c.index)) + "]";
  }
  SymbolicElement parse(std::string_view text) const override {
    std::string t = trim(text);
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
    auto colon = t.find(':');
    if (colon == std::string::npos)
      throw InvalidInput("invalid-element", "expected [stage:element], got '" + t + "'");
    std::size_t stage = 0;
    try {
      stage = std::stoul(t.substr(0, colon));
    } catch (const std::exception&) {
      throw InvalidInput("invalid-element", "bad stage in '" + t + "'");
    }
    if (stage >= sys_.stages.size())
      throw InvalidInput("invalid-element", "stage out of range in '" + t + "'");
    auto e = sys_.stages[stage].find(trim(t.substr(colon + 1)));
    if (!e) throw InvalidInput("invalid-element", "unknown element in '" + t + "'");
    return *canon_[image_[stage][to_index(*e)]];
  }
  std::optional<std::vector<SymbolicElement>> finite_down_set(
      const SymbolicElement& a) const override {
    std::vector<SymbolicElement> out;
    auto top = element_at(at_last(a));
    for (std::size_t b = 0; b < last().size(); ++b)
      if (last().leq(element_at(b), top)) out.push_back(*canon_[b]);
    return out;
  }

 private:
  const FinitePresentation& last() const { return sys_.stages.back(); }
  std::size_t at_last(const SymbolicElement& a) const {
    if (!a.is<IntervalClass>()) throw InvalidInput("invalid-element", "not an interval class");
    const auto& c = a.as<IntervalClass>();
    if (c.stage >= image_.size() || c.index >= image_[c.stage].size())
      throw InvalidInput("invalid-element", "interval class out of range");
    return image_[c.stage][c.index];
  }

  ChainSystem sys_;
  std::string name_;
  std::vector<std::vector<std::size_t>> image_;  // stage element -> last stage
  std::vector<std::optional<IntervalClass>> canon_;
};

}  // namespace

FinitePresentation direct_sum(const FinitePresentation& s, const FinitePresentation& t) {
  const std::size_t m = t.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < m; ++j)
      names.push_back("(" + s.name(element_at(i)) + "," + t.name(element_at(j)) + ")");
  return FinitePresentation::build(
      s.size() * m,
      [&](std::size_t a, std::size_t b) {
        auto l = to_index(s.add(element_at(a / m), element_at(b / m)));
        auto r = to_index(t.add(element_at(a % m), element_at(b % m)));
        return l * m + r;
      },
      [&](std::size_t a, std::size_t b) {
        return s.leq(element_at(a / m), element_at(b / m)) &&
               t.leq(element_at(a % m), element_at(b % m));
      },
      std::move(names), constructed);
}

SymbolicSemigroup direct_sum(const SymbolicSemigroup& s, const SymbolicSemigroup& t) {
  return SymbolicSemigroup(std::make_shared<SumModel>(s, t));
}

AnySemigroup direct_sum(const AnySemigroup& s, const AnySemigroup& t) {
  if (s.index() != t.index())
    throw InvalidInput("kind-mismatch", "direct sum of a finite and a symbolic semigroup");
  if (s.index() == 0)
    return direct_sum(std::get<FinitePresentation>(s), std::get<FinitePresentation>(t));
  return direct_sum(std::get<SymbolicSemigroup>(s), std::get<SymbolicSemigroup>(t));
}

SymbolicSemigroup as_symbolic(const FinitePresentation& s, std::string name) {
  return SymbolicSemigroup(std::make_shared<FiniteModel>(s, std::move(name)));
}

SymbolicSemigroup sub_semigroup(const SymbolicSemigroup& s,
                                std::function<bool(const SymbolicElement&)> keep,
                                std::string name) {
  return SymbolicSemigroup(std::make_shared<SubModel>(s, std::move(keep), std::move(name)));
}

SymbolicSemigroup soft_part(const SymbolicSemigroup& s) {
  return sub_semigroup(
      s, [s](const SymbolicElement& e) { return s.is_zero(e) || !s.way_below(e, e); },
      "SoftPart(" + s.name() + ")");
}

std::vector<ElementId> Ideal::elements() const {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i]) out.push_back(element_at(i));
  return out;
}

std::size_t Ideal::size() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

bool is_ideal(const FinitePresentation& s, const std::vector<bool>& m) {
  const std::size_t n = s.size();
  if (m.size() != n || !m[0]) return false;
  for (std::size_t x = 0; x < n; ++x) {
    if (!m[x]) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (s.leq(element_at(y), element_at(x)) && !m[y]) return false;
      if (m[y] && !m[to_index(s.add(element_at(x), element_at(y)))]) return false;
    }
  }
  return true;
}

Ideal ideal_generated(const FinitePresentation& s, std::span<const ElementId> gens) {
  const std::size_t n = s.size();
  std::vector<bool> m(n, false);
  m[0] = true;
  for (auto g : gens) m.at(to_index(g)) = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (!m[x]) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (!m[y] && s.leq(element_at(y), element_at(x))) m[y] = changed = true;
        if (m[y]) {
          auto sum = to_index(s.add(element_at(x), element_at(y)));
          if (!m[sum]) m[sum] = changed = true;
        }
      }
    }
  }
  return Ideal(std::move(m));
}

std::vector<Ideal> all_ideals(const FinitePresentation& s) {
  std::vector<Ideal> out{ideal_generated(s, {})};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (out[i].members()[x]) continue;
      auto gens = out[i].elements();
      gens.push_back(element_at(x));
      Ideal j = ideal_generated(s, gens);
      if (std::find(out.begin(), out.end(), j) == out.end()) out.push_back(std::move(j));
    }
  }
  return out;
}

FinitePresentation restrict_to_ideal(const FinitePresentation& s, const Ideal& ideal) {
  auto els = ideal.elements();
  std::vector<std::size_t> pos(s.size(), 0);
  for (std::size_t i = 0; i < els.size(); ++i) pos[to_index(els[i])] = i;
  std::vector<std::string> names;
  for (auto e : els) names.push_back(s.name(e));
  return FinitePresentation::build(
      els.size(),
      [&](std::size_t a, std::size_t b) { return pos[to_index(s.add(els[a], els[b]))]; },
      [&](std::size_t a, std::size_t b) { return s.leq(els[a], els[b]); },
      std::move(names), constructed);
}

QuotientResult quotient(const FinitePresentation& s, const Ideal& ideal) {
  const std::size_t n = s.size();
  auto members = ideal.elements();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (auto z : members)
        if (s.leq(element_at(x), s.add(element_at(y), z))) {
          le[x][y] = true;
          break;
        }
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cls(n, none);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] != none) continue;
    cls[x] = reps.size();
    for (std::size_t y = x + 1; y < n; ++y)
      if (cls[y] == none && le[x][y] && le[y][x]) cls[y] = reps.size();
    reps.push_back(x);
  }
  std::vector<std::string> names;
  for (auto r : reps) names.push_back(s.name(element_at(r)));
  auto q = FinitePresentation::build(
      reps.size(),
      [&](std::size_t a, std::size_t b) {
        return cls[to_index(s.add(element_at(reps[a]), element_at(reps[b])))];
      },
      [&](std::size_t a, std::size_t b) { return le[reps[a]][reps[b]]; },
      std::move(names), constructed);
  return {std::move(q), std::move(cls)};
}

void validate_chain(const ChainSystem& sys) {
  if (sys.stages.empty()) throw InvalidInput("invalid-map", "chain has no stages");
  if (sys.maps.size() + 1 != sys.stages.size())
    throw InvalidInput("invalid-map", "need one map between consecutive stages");
  for (std::size_t i = 0; i < sys.maps.size(); ++i) {
    const auto& f = sys.maps[i];
    const auto& a = sys.stages[i];
    const auto& b = sys.stages[i + 1];
    auto where = "map " + std::to_string(i);
    if (f.size() != a.size()) throw InvalidInput("invalid-map", where + " has wrong length");
    for (auto v : f)
      if (v >= b.size()) throw InvalidInput("invalid-map", where + " leaves the next stage");
    if (f[0] != 0) throw InvalidInput("invalid-map", where + " does not send 0 to 0");
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < a.size(); ++y) {
        auto ex = element_at(x), ey = element_at(y);
        if (f[to_index(a.add(ex, ey))] != to_index(b.add(element_at(f[x]), element_at(f[y]))))
          throw InvalidInput("invalid-map", where + " is not additive at (" +
                                                a.name(ex) + ", " + a.name(ey) + ")");
        if (a.leq(ex, ey) && !b.leq(element_at(f[x]), element_at(f[y])))
          throw InvalidInput("invalid-map", where + " does not preserve order at (" +
                                                a.name(ex) + ", " + a.name(ey) + ")");
      }
  }
}

SymbolicSemigroup chain_limit(const ChainSystem& sys, std::string name) {
  validate_chain(sys);
  return SymbolicSemigroup(std::make_shared<ChainLimitModel>(sys, std::move(name)));
}

ChainSystem doubling_chain(std::size_t stages) {
  if (stages == 0) throw InvalidInput("invalid-parameters", "chain needs a stage");
  ChainSystem sys;
  for (std::size_t i = 0; i < stages; ++i) {
    const std::size_t k = std::size_t{1} << i;
    sys.stages.push_back(elementary(k));
    if (i + 1 < stages) {
      // Index k + 1 is infinity in E_k.
      std::vector<std::size_t> f(k + 2);
      for (std::size_t j = 0; j <= k; ++j) f[j] = 2 * j;
      f[k + 1] = 2 * k + 1;
      sys.maps.push_back(std::move(f));
    }
  }
  return sys;
}

ChainSystem simplicial_chain() {
  ChainSystem sys;
  auto e4 = elementary(4);
  auto sum = direct_sum(e4, e4);
  sys.stages = {sum, e4, e4};
  std::vector<std::size_t> f(sum.size());
  const std::size_t m = e4.size();
  for (std::size_t i = 0; i < sum.size(); ++i)
    f[i] = to_index(e4.add(element_at(i / m), element_at(i % m)));
  std::vector<std::size_t> id(m);
  for (std::size_t i = 0; i < m; ++i) id[i] = i;
  sys.maps = {f, id};
  return sys;
}

ChainSystem constant_chain(std::size_t k, std::size_t stages) {
  if (stages == 0) throw InvalidInput("invalid-parameters", "chain needs a stage");
  ChainSystem sys;
  auto e = elementary(k);
  std::vector<std::size_t> id(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) id[i] = i;
  for (std::size_t i = 0; i < stages; ++i) {
    sys.stages.push_back(e);
    if (i + 1 < stages) sys.maps.push_back(id);
  }
  return sys;
}

RetractReport retract_check(const SymbolicSemigroup& s, const SymbolicSemigroup& t,
                            const RetractPair& pair, std::size_t depth) {
  RetractReport rep;
  rep.depth = depth;
  auto apply = [](const PointMap& f, const SymbolicElement& a, const char* which,
                  const SymbolicSemigroup& dom) {
    auto r = f(a);
    if (!r)
      throw InvalidInput("map-undefined", std::string(which) + " has no value at " +
                                              dom.format(a));
    return *r;
  };
  auto fail = [&](std::string what, std::vector<SymbolicElement> tuple) {
    rep.holds = false;
    rep.violation = std::move(what);
    rep.tuple = std::move(tuple);
    return rep;
  };

  const auto bs = s.basis(depth);
  const auto bt = t.basis(depth);
  std::vector<SymbolicElement> is;
  for (const auto& a : bs) is.push_back(apply(pair.iota, a, "iota", s));
  std::vector<SymbolicElement> st;
  for (const auto& b : bt) st.push_back(apply(pair.sigma, b, "sigma", t));

  for (std::size_t i = 0; i < bs.size(); ++i)
    if (!(apply(pair.sigma, is[i], "sigma", t) == bs[i]))
      return fail("sigma(iota(a)) != a", {bs[i]});
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j) {
      auto sum = apply(pair.iota, s.add(bs[i], bs[j]), "iota", s);
      if (!(sum == t.add(is[i], is[j]))) return fail("iota not additive", {bs[i], bs[j]});
      if (s.leq(bs[i], bs[j]) && !t.leq(is[i], is[j]))
        return fail("iota not order-preserving", {bs[i], bs[j]});
      if (s.way_below(bs[i], bs[j]) && !t.way_below(is[i], is[j]))
        return fail("iota not way-below-preserving", {bs[i], bs[j]});
    }
  for (std::size_t i = 0; i < bt.size(); ++i)
    for (std::size_t j = 0; j < bt.size(); ++j) {
      auto sum = apply(pair.sigma, t.add(bt[i], bt[j]), "sigma", t);
      if (!(sum == s.add(st[i], st[j]))) return fail("sigma not additive", {bt[i], bt[j]});
      if (t.leq(bt[i], bt[j]) && !s.leq(st[i], st[j]))
        return fail("sigma not order-preserving", {bt[i], bt[j]});
    }
  return rep;
}

PointMap index_map(std::vector<std::size_t> map) {
  return [map = std::move(map)](const SymbolicElement& a) -> std::optional<SymbolicElement> {
    if (!a.is<Atom>() || a.as<Atom>().index >= map.size()) return std::nullopt;
    return SymbolicElement(Atom{static_cast<std::uint32_t>(map[a.as<Atom>().index])});
  };
}

RetractPair soft_retract_pair() {
  RetractPair p;
  p.iota = [](const SymbolicElement& a) -> std::optional<SymbolicElement> {
    if (a.is<Soft>() || (a.is<Compact>() && a.as<Compact>().n == 0)) return a;
    return std::nullopt;
  };
  p.sigma = [](const SymbolicElement& a) -> std::optional<SymbolicElement> {
    if (a.is<Soft>()) return a;
    if (a.is<Compact>()) {
      auto n = a.as<Compact>().n;
      if (n == 0) return a;
      return soft(ExtRational(static_cast<long long>(n)));
    }
    return std::nullopt;
  };
  return p;
}

}  // namespace cudim
