#include "cudim/catalog.hpp"
#include "cudim/dimension.hpp"
#include "cudim/spaces.hpp"

#include <doctest.h>

#include <numeric>

using namespace cudim;

TEST_CASE("space validation") {
  auto x = FinSpace::make({"a", "b", "c"}, {{"a"}, {"b"}});
  // Completed with {}, {a, b} and the whole space.
  CHECK(x.opens().size() == 5);
  CHECK(x.is_open(0b011));
  CHECK_THROWS_AS(FinSpace::make({"a", "b", "c"}, {{"a"}, {"b"}}, true), InvalidInput);
  CHECK_THROWS_AS(FinSpace::make({"a", "b"}, {{"z"}}), InvalidInput);
  CHECK_NOTHROW(FinSpace::make({"a", "b"}, {{}, {"a"}, {"a", "b"}}, true));
}

TEST_CASE("covering dimension of small spaces") {
  CHECK(covering_dim(point_space()) == 0);
  for (std::size_t n = 1; n <= 4; ++n) CHECK(covering_dim(discrete_space(n)) == 0);
  CHECK(covering_dim(sierpinski_space()) == 0);
  CHECK(covering_dim(v_space()) == 1);
}

TEST_CASE("homeomorphism classes") {
  CHECK(all_spaces(1).size() == 1);
  CHECK(all_spaces(2).size() == 3);
  CHECK(all_spaces(3).size() == 9);
  CHECK(all_spaces(4).size() == 33);
}

TEST_CASE("covering dimension of a disjoint union is the maximum") {
  std::vector<FinSpace> small;
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto& s : all_spaces(n)) small.push_back(s);
  for (const auto& x : small)
    for (const auto& y : small) {
      if (x.size() + y.size() > 5) continue;
      CHECK(covering_dim(disjoint_union(x, y)) == std::max(covering_dim(x), covering_dim(y)));
    }
}

TEST_CASE("Lsc semigroups") {
  auto p = lsc_semigroup(point_space(), 2);
  std::vector<std::size_t> id(4);
  std::iota(id.begin(), id.end(), 0);
  CHECK(is_isomorphism(p.presentation, elementary(2), id));
  CHECK(lsc_semigroup(sierpinski_space(), 1).presentation.size() == 6);
  auto v = lsc_semigroup(v_space(), 2);
  CHECK(v.presentation.size() == 30);
  CHECK_FALSE(dim_zero_exact(v.presentation).holds);
  CHECK_THROWS_AS(lsc_semigroup(discrete_space(4), 2), CarrierTooLarge);
  auto s = lsc_semigroup(v_space(), 2, LscVariant::strictly_positive);
  for (const auto& vals : s.values) {
    bool zero = std::all_of(vals.begin(), vals.end(), [](auto t) { return t == 0; });
    bool positive = std::all_of(vals.begin(), vals.end(), [](auto t) { return t >= 1; });
    CHECK((zero || positive));
  }
}

TEST_CASE("characteristic functions are ordered by inclusion") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& x : all_spaces(n)) {
      auto l = lsc_semigroup(x, 2);
      for (auto u : x.opens())
        for (auto w : x.opens()) {
          auto cu = l.characteristic(u), cw = l.characteristic(w);
          REQUIRE(cu);
          REQUIRE(cw);
          CHECK(l.presentation.leq(*cu, *cw) == ((u & ~w) == 0));
        }
    }
}

TEST_CASE("dimension zero Lsc models come from zero-dimensional spaces") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& x : all_spaces(n)) {
      std::size_t cap = 2;
      std::optional<LscSemigroup> l;
      try {
        l = lsc_semigroup(x, cap, LscVariant::full, 100);
      } catch (const CarrierTooLarge&) {
        cap = 1;
        l = lsc_semigroup(x, cap, LscVariant::full, 100);
      }
      bool d0 = dim_zero_exact(l->presentation).holds;
      auto cd = covering_dim(x);
      CAPTURE(x.opens().size());
      CAPTURE(cap);
      if (d0) CHECK(cd == 0);
    }
}
