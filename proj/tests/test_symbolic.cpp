#include "cudim/catalog.hpp"
#include "cudim/constructions.hpp"
#include "cudim/symbolic.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cudim;

namespace {

std::vector<SymbolicSemigroup> symbolic_catalog() {
  std::vector<SymbolicSemigroup> out;
  for (const auto& key : catalog_keys()) {
    auto s = make(key);
    if (auto* p = std::get_if<SymbolicSemigroup>(&s)) out.push_back(*p);
  }
  return out;
}

std::vector<std::string> shown(const SymbolicSemigroup& s, const std::vector<SymbolicElement>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(s.format(x));
  return out;
}

}  // namespace

TEST_CASE("extended rationals") {
  CHECK(ExtRational::parse("6/8").str() == "3/4");
  CHECK(ExtRational::parse("inf").is_infinite());
  CHECK(ExtRational::parse("2") + ExtRational::parse("1/2") == ExtRational::parse("5/2"));
  CHECK(ExtRational::parse("7") < ExtRational::infinity());
  CHECK_THROWS_AS(ExtRational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(ExtRational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("Z axioms pass at depth 3") {
  auto r = sample_check_axioms(z_semigroup(), 3);
  CHECK(r.o5.holds);
  CHECK(r.o6.holds);
  CHECK_FALSE(r.o5.exact);
}

TEST_CASE("NbarPrime fails O6 at (1',1',1,1)") {
  auto s = nbar_prime();
  auto r = sample_check_axioms(s, 4);
  REQUIRE_FALSE(r.o6.holds);
  CHECK(shown(s, r.o6.counterexample) == std::vector<std::string>{"1'", "1'", "1", "1"});
  CHECK(r.o6.exact);
  InternedView v(s);
  auto t = v.intern_all(r.o6.counterexample);
  auto pool = v.intern_all(s.basis(6));
  CHECK(replay_o6(v, std::span<const InternId>(t), std::span<const InternId>(pool)));
}

TEST_CASE("strictly positive Lsc fails O5") {
  auto p = std::get<FinitePresentation>(make("LscFinStrict(V,2)"));
  auto s = as_symbolic(p, "LscFinStrict(V,2)");
  auto r = sample_check_axioms(s, 3);
  REQUIRE_FALSE(r.o5.holds);
  auto t = shown(s, r.o5.counterexample);
  CHECK(t[0] == "(1,1,1)");
  CHECK(t[1] == "(1,1,1)");
  CHECK(t[4] == "(2,1,1)");
}

TEST_CASE("basis closure") {
  auto e2 = as_symbolic(elementary(2), "E(2)");
  CHECK(basis_closure(e2, 1, 2).size() == 4);

  auto z = z_semigroup();
  CHECK(shown(z, z.basis(1)) == std::vector<std::string>{"0", "1", "S(1/2)", "S(1)", "inf"});
  auto c = basis_closure(z, 1, 2);
  CHECK(std::find(c.begin(), c.end(), soft(ExtRational::parse("3/2"))) != c.end());
  CHECK(basis_closure(z, 3, 0) == z.basis(3));
  CHECK_THROWS_AS(basis_closure(z, 6, 3, 100), BudgetExceeded);
}

TEST_CASE("catalog bases are nested and well behaved") {
  for (const auto& s : symbolic_catalog()) {
    CAPTURE(s.name());
    for (std::size_t d = 0; d < 6; ++d) {
      auto a = s.basis(d), b = s.basis(d + 1);
      for (const auto& x : a) CHECK(std::find(b.begin(), b.end(), x) != b.end());
    }
    auto b4 = s.basis(4);
    for (const auto& x : b4) {
      CHECK(s.contains(x));
      CHECK(s.parse(s.format(x)) == x);
      for (const auto& y : b4)
        if (s.way_below(x, y)) CHECK(s.leq(x, y));
    }
    auto b3 = s.basis(3);
    auto bad = sample_check_structure(s, b3);
    CHECK_MESSAGE(!bad, (bad ? *bad : ""));
  }
}

TEST_CASE("interned view agrees with the model") {
  auto z = z_prime();
  InternedView v(z);
  auto b = z.basis(2);
  auto ids = v.intern_all(b);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      CHECK(v.element(v.add(ids[i], ids[j])) == z.add(b[i], b[j]));
      CHECK(v.leq(ids[i], ids[j]) == z.leq(b[i], b[j]));
      CHECK(v.way_below(ids[i], ids[j]) == z.way_below(b[i], b[j]));
    }
}

TEST_CASE("dyadic grid") {
  auto g = dyadic_grid(2, 1);
  REQUIRE(g.size() == 4);
  CHECK(g.front().str() == "1/4");
  CHECK(g.back().str() == "1");
}
