#include "cudim/catalog.hpp"

#include <charconv>
#include <limits>

namespace cudim {

namespace {

const ValidationOptions built{64, true};

std::string trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return std::string(s);
}

// Saturating table on a list of numeric values plus a final "inf" slot.
FinitePresentation saturating(const std::vector<std::size_t>& values, std::size_t top,
                              std::vector<std::string> names) {
  const std::size_t n = values.size() + 1;
  const std::size_t inf = n - 1;
  auto index_of = [&](std::size_t v) -> std::size_t {
    if (v > top) return inf;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] == v) return i;
    return inf;
  };
  return FinitePresentation::build(
      n,
      [&](std::size_t a, std::size_t b) {
        if (a == inf || b == inf) return inf;
        return index_of(values[a] + values[b]);
      },
      [](std::size_t a, std::size_t b) { return a <= b; }, std::move(names), built);
}

enum class Softs { infinity_only, rationals };

class NumericModel final : public SymbolicModel {
 public:
  NumericModel(std::string name, bool compacts, Softs softs, std::string prime)
      : name_(std::move(name)), compacts_(compacts), softs_(softs), prime_(std::move(prime)) {}

  std::string name() const override { return name_; }
  SymbolicElement zero() const override { return compact(0); }

  SymbolicElement add(const SymbolicElement& a, const SymbolicElement& b) const override {
    check(a);
    check(b);
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    if (a.is<Prime>() && b.is<Prime>()) return compact(2);
    if (a.is<Prime>()) return add(compact(1), b);
    if (b.is<Prime>()) return add(a, compact(1));
    if (a.is<Compact>() && b.is<Compact>()) return compact(a.as<Compact>().n + b.as<Compact>().n);
    return soft(value(a) + value(b));
  }

  bool leq(const SymbolicElement& a, const SymbolicElement& b) const override {
    check(a);
    check(b);
    if (is_zero(a)) return true;
    if (a.is<Prime>()) {
      if (b.is<Prime>()) return true;
      if (b.is<Compact>()) return b.as<Compact>().n >= 2;
      return b.as<Soft>().q > ExtRational(1);
    }
    if (b.is<Prime>()) return a.is<Soft>() && a.as<Soft>().q <= ExtRational(1);
    if (a.is<Compact>() && b.is<Soft>()) return value(a) < value(b);
    return value(a) <= value(b);
  }

  bool way_below(const SymbolicElement& a, const SymbolicElement& b) const override {
    if (!a.is<Soft>()) return leq(a, b);
    check(b);
    const auto& q = a.as<Soft>().q;
    if (b.is<Prime>()) return q <= ExtRational(1);
    if (b.is<Compact>()) return q <= value(b);
    return q < value(b);
  }

  std::vector<SymbolicElement> basis(std::size_t depth) const override {
    std::vector<SymbolicElement> out{zero()};
    if (!prime_.empty()) out.push_back(Prime{});
    if (compacts_)
      for (std::size_t n = 1; n <= depth; ++n) out.push_back(compact(n));
    if (softs_ == Softs::rationals)
      for (auto& q : dyadic_grid(depth, depth)) out.push_back(soft(q));
    out.push_back(soft_infinity());
    return out;
  }

  bool contains(const SymbolicElement& a) const override {
    if (a.is<Compact>()) return compacts_ || a.as<Compact>().n == 0;
    if (a.is<Prime>()) return !prime_.empty();
    if (a.is<Soft>()) {
      const auto& q = a.as<Soft>().q;
      if (q.is_infinite()) return true;
      return softs_ == Softs::rationals && q > ExtRational(0);
    }
    return false;
  }

  std::string format(const SymbolicElement& a) const override {
    check(a);
    if (a.is<Prime>()) return prime_;
    if (a.is<Compact>()) return std::to_string(a.as<Compact>().n);
    const auto& q = a.as<Soft>().q;
    if (q.is_infinite()) return "inf";
    return "S(" + q.str() + ")";
  }

  SymbolicElement parse(std::string_view text) const override {
    std::string t = trim(text);
    SymbolicElement e;
    try {
      if (!prime_.empty() && t == prime_) {
        e = Prime{};
      } else if (t == "inf" || t == "infinity") {
        e = soft_infinity();
      } else if (t.size() > 3 && t.starts_with("S(") && t.back() == ')') {
        e = soft(ExtRational::parse(std::string_view(t).substr(2, t.size() - 3)));
      } else {
        auto q = ExtRational::parse(t);
        bool integral = !q.is_infinite() && denominator(q.value()) == 1;
        if (integral && (compacts_ || q.is_zero()))
          e = compact(static_cast<std::uint64_t>(numerator(q.value())));
        else
          e = soft(q);
      }
    } catch (const std::invalid_argument&) {
      throw InvalidInput("invalid-element", "'" + t + "' is not an element of " + name_);
    }
    if (!contains(e))
      throw InvalidInput("invalid-element", "'" + t + "' is not an element of " + name_);
    return e;
  }

  std::optional<std::vector<SymbolicElement>> finite_down_set(
      const SymbolicElement& a) const override {
    check(a);
    if (is_zero(a)) return std::vector<SymbolicElement>{zero()};
    if (softs_ == Softs::rationals) return std::nullopt;
    if (a.is<Prime>()) return std::vector<SymbolicElement>{zero(), Prime{}};
    if (a.is<Soft>()) return std::nullopt;
    std::vector<SymbolicElement> out;
    const auto n = a.as<Compact>().n;
    for (std::uint64_t i = 0; i <= n; ++i) out.push_back(compact(i));
    if (!prime_.empty() && n >= 2) out.push_back(Prime{});
    return out;
  }

  bool is_zero(const SymbolicElement& a) const override {
    return a.is<Compact>() && a.as<Compact>().n == 0;
  }

 private:
  void check(const SymbolicElement& a) const {
    if (!contains(a)) throw InvalidInput("invalid-element", "not an element of " + name_);
  }
  static ExtRational value(const SymbolicElement& a) {
    if (a.is<Compact>()) return ExtRational(Rational(a.as<Compact>().n));
    return a.as<Soft>().q;
  }

  std::string name_;
  bool compacts_;
  Softs softs_;
  std::string prime_;  // empty when absent
};

SymbolicSemigroup numeric(std::string name, bool compacts, Softs softs, std::string prime) {
  return SymbolicSemigroup(
      std::make_shared<NumericModel>(std::move(name), compacts, softs, std::move(prime)));
}

// Key parsing: Name or Name(arg, arg, ...), arguments split at top level.
struct Key {
  std::string head;
  std::vector<std::string> args;
  bool has_args = false;
};

[[noreturn]] void bad(std::string_view key, const std::string& why) {
  throw InvalidInput("invalid-parameters", "catalog key '" + std::string(key) + "': " + why);
}

Key split_key(std::string_view text) {
  std::string t = trim(text);
  Key k;
  auto open = t.find('(');
  if (open == std::string::npos) {
    k.head = t;
    return k;
  }
  if (t.back() != ')') bad(text, "unbalanced parentheses");
  k.head = trim(std::string_view(t).substr(0, open));
  k.has_args = true;
  std::string_view inner = std::string_view(t).substr(open + 1, t.size() - open - 2);
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    char c = inner[i];
    if (c == '(') ++depth;
    else if (c == ')') {
      if (--depth < 0) bad(text, "unbalanced parentheses");
    } else if (c == ',' && depth == 0) {
      k.args.push_back(trim(inner.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) bad(text, "unbalanced parentheses");
  k.args.push_back(trim(inner.substr(start)));
  return k;
}

std::size_t number(std::string_view key, const std::string& s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) bad(key, "'" + s + "' is not a count");
  return v;
}

void arity(std::string_view key, const Key& k, std::size_t n) {
  if (k.args.size() != n)
    bad(key, k.head + " takes " + std::to_string(n) + " parameter(s)");
}

}  // namespace

FinitePresentation elementary(std::size_t k) {
  std::vector<std::size_t> values;
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= k; ++i) {
    values.push_back(i);
    names.push_back(std::to_string(i));
  }
  names.push_back("inf");
  return saturating(values, k, std::move(names));
}

FinitePresentation hom_elementary(std::size_t k, std::size_t l) {
  const std::size_t r = (l + 1 + k) / (k + 1);
  std::vector<std::size_t> values{0};
  std::vector<std::string> names{"0"};
  for (std::size_t i = std::max<std::size_t>(r, 1); i <= l; ++i) {
    values.push_back(i);
    names.push_back(std::to_string(i));
  }
  names.push_back("inf");
  return saturating(values, l, std::move(names));
}

FinitePresentation nbar_prime_truncation(std::size_t cap) {
  if (cap < 2) throw InvalidInput("invalid-parameters", "NbarPrime truncation needs cap >= 2");
  // index 0 -> 0, 1 -> 1', 2 -> 1, ..., cap + 1 -> cap, cap + 2 -> inf
  const std::size_t n = cap + 3;
  const std::size_t prime = 1, inf = n - 1;
  auto val = [](std::size_t i) { return i == 1 ? std::size_t{1} : (i == 0 ? 0 : i - 1); };
  auto idx = [&](std::size_t v) { return v > cap ? inf : (v == 0 ? 0 : v + 1); };
  std::vector<std::string> names{"0", "1'"};
  for (std::size_t i = 1; i <= cap; ++i) names.push_back(std::to_string(i));
  names.push_back("inf");
  return FinitePresentation::build(
      n,
      [&](std::size_t a, std::size_t b) -> std::size_t {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a == inf || b == inf) return inf;
        return idx(val(a) + val(b));
      },
      [&](std::size_t a, std::size_t b) {
        if (a == 0 || a == b) return true;
        if (b == prime) return false;
        if (a == prime) return b == inf || val(b) >= 2;
        if (b == inf) return true;
        return a != inf && val(a) <= val(b);
      },
      std::move(names), built);
}

SymbolicSemigroup nbar() { return numeric("Nbar", true, Softs::infinity_only, ""); }
SymbolicSemigroup nbar_prime() { return numeric("NbarPrime", true, Softs::infinity_only, "1'"); }
SymbolicSemigroup z_semigroup() { return numeric("Z", true, Softs::rationals, ""); }
SymbolicSemigroup z_prime() { return numeric("ZPrime", true, Softs::rationals, "1''"); }
SymbolicSemigroup half_line() { return numeric("HalfLine", false, Softs::rationals, ""); }

FinSpace named_space(std::string_view name) {
  Key k = split_key(name);
  if (!k.has_args) {
    if (k.head == "point") return point_space();
    if (k.head == "sierpinski") return sierpinski_space();
    if (k.head == "V") return v_space();
  } else if (k.head == "discrete") {
    arity(name, k, 1);
    auto n = number(name, k.args[0]);
    if (n < 1 || n > FinSpace::max_points) bad(name, "point count out of range");
    return discrete_space(n);
  }
  bad(name, "unknown space");
}

AnySemigroup make(std::string_view key) {
  Key k = split_key(key);
  const auto& h = k.head;
  if (!k.has_args) {
    if (h == "Nbar") return nbar();
    if (h == "NbarPrime") return nbar_prime();
    if (h == "Z") return z_semigroup();
    if (h == "ZPrime") return z_prime();
    if (h == "HalfLine") return half_line();
    bad(key, "unknown entry or missing parameters");
  }
  if (h == "E") {
    arity(key, k, 1);
    auto n = number(key, k.args[0]);
    if (n > 62) bad(key, "k too large");
    return elementary(n);
  }
  if (h == "HomE") {
    arity(key, k, 2);
    auto a = number(key, k.args[0]), b = number(key, k.args[1]);
    if (b > 62) bad(key, "l too large");
    return hom_elementary(a, b);
  }
  if (h == "NbarPrime") {
    arity(key, k, 1);
    auto cap = number(key, k.args[0]);
    if (cap < 2 || cap > 61) bad(key, "cap out of range");
    return nbar_prime_truncation(cap);
  }
  if (h == "LscFin" || h == "LscFinStrict") {
    arity(key, k, 2);
    auto space = named_space(k.args[0]);
    auto cap = number(key, k.args[1]);
    if (cap < 1) bad(key, "cap must be at least 1");
    return lsc_semigroup(space, cap,
                         h == "LscFin" ? LscVariant::full : LscVariant::strictly_positive)
        .presentation;
  }
  if (h == "DirectSumOf") {
    arity(key, k, 2);
    return direct_sum(make(k.args[0]), make(k.args[1]));
  }
  if (h == "ChainLimitOf") {
    if (k.args.empty() || k.args.size() > 2) bad(key, "ChainLimitOf takes a kind and a count");
    const auto& kind = k.args[0];
    std::size_t p = k.args.size() == 2 ? number(key, k.args[1]) : 0;
    std::string name = "ChainLimitOf(" + kind + (k.args.size() == 2 ? "," + k.args[1] : "") + ")";
    if (kind == "doubling") {
      if (p == 0) p = 5;
      if (p > 5) bad(key, "at most 5 doubling stages");
      return chain_limit(doubling_chain(p), name);
    }
    if (kind == "simplicial") return chain_limit(simplicial_chain(), name);
    if (kind == "constant") {
      if (k.args.size() != 2 || p > 62) bad(key, "constant chain needs k");
      return chain_limit(constant_chain(p), name);
    }
    bad(key, "unknown chain kind '" + kind + "'");
  }
  if (h == "SoftPart") {
    arity(key, k, 1);
    auto inner = make(k.args[0]);
    if (!std::holds_alternative<SymbolicSemigroup>(inner))
      bad(key, "SoftPart needs a symbolic entry");
    return soft_part(std::get<SymbolicSemigroup>(inner));
  }
  bad(key, "unknown entry");
}

std::vector<std::string> catalog_keys() {
  return {"E(4)",          "HomE(2,5)",          "NbarPrime(4)",   "Nbar",
          "NbarPrime",     "Z",                  "ZPrime",         "HalfLine",
          "LscFin(V,2)",   "LscFinStrict(V,2)",  "DirectSumOf(E(1),E(2))",
          "ChainLimitOf(doubling,4)", "SoftPart(Z)"};
}

}  // namespace cudim
