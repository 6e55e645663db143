#include "cudim/catalog.hpp"

#include <doctest.h>

using namespace cudim;

TEST_CASE("finite entries") {
  auto e5 = std::get<FinitePresentation>(make("E(5)"));
  CHECK(e5.size() == 7);
  CHECK(e5.names() == std::vector<std::string>{"0", "1", "2", "3", "4", "5", "inf"});
  CHECK(e5.name(e5.add(*e5.find("3"), *e5.find("3"))) == "inf");

  auto h = std::get<FinitePresentation>(make("HomE(2, 5)"));
  CHECK(h.names() == std::vector<std::string>{"0", "2", "3", "4", "5", "inf"});
  CHECK(std::get<FinitePresentation>(make("HomE(5,5)")).size() == 7);

  auto np = std::get<FinitePresentation>(make("NbarPrime(4)"));
  auto p = *np.find("1'"), one = *np.find("1");
  CHECK(np.name(np.add(p, p)) == "2");
  CHECK(np.name(np.add(p, one)) == "2");
  CHECK(np.name(np.add(p, *np.find("3"))) == "4");
  CHECK_FALSE(np.leq(p, one));
  CHECK_FALSE(np.leq(one, p));
}

TEST_CASE("NbarPrime arithmetic") {
  auto s = nbar_prime();
  auto p = s.parse("1'");
  CHECK(s.format(s.add(p, p)) == "2");
  CHECK(s.format(s.add(p, s.parse("1"))) == "2");
  CHECK(s.format(s.add(p, s.parse("inf"))) == "inf");
  CHECK(s.leq(p, s.parse("2")));
  CHECK_FALSE(s.leq(p, s.parse("1")));
  CHECK(s.way_below(p, p));
  CHECK_FALSE(s.way_below(s.parse("inf"), s.parse("inf")));
}

TEST_CASE("Z encoding") {
  auto z = z_semigroup();
  auto c = [&](const char* t) { return z.parse(t); };
  CHECK(z.add(c("2"), c("3")) == c("5"));
  CHECK(z.add(c("1"), c("S(1/2)")) == c("S(3/2)"));
  CHECK(z.add(c("S(1/4)"), c("S(1/2)")) == c("S(3/4)"));
  CHECK(z.leq(c("1"), c("S(3/2)")));
  CHECK_FALSE(z.leq(c("1"), c("S(1)")));
  CHECK(z.leq(c("S(1)"), c("1")));
  CHECK(z.way_below(c("S(1)"), c("1")));
  CHECK_FALSE(z.way_below(c("S(1)"), c("S(1)")));
  CHECK(z.way_below(c("S(1/2)"), c("S(1)")));
  CHECK(z.way_below(c("1"), c("S(3/2)")));
  CHECK_FALSE(z.way_below(c("1"), c("S(1)")));
  CHECK_FALSE(z.leq(c("S(3/4)"), c("0")));
  CHECK_THROWS_AS(z.parse("1'"), InvalidInput);
  CHECK_THROWS_AS(z.parse("S(-1)"), InvalidInput);
}

TEST_CASE("ZPrime and HalfLine") {
  auto zp = z_prime();
  auto p = zp.parse("1''");
  CHECK(zp.format(zp.add(p, p)) == "2");
  CHECK(zp.leq(zp.parse("S(1)"), p));
  CHECK_FALSE(zp.leq(zp.parse("S(3/2)"), p));
  CHECK(zp.leq(p, zp.parse("S(3/2)")));
  auto h = half_line();
  CHECK(h.format(h.parse("1")) == "S(1)");
  CHECK_THROWS_AS(h.parse("C"), InvalidInput);
  for (const auto& x : h.basis(3)) CHECK((h.is_zero(x) || !h.way_below(x, x)));
}

TEST_CASE("bases") {
  auto z = z_semigroup();
  // 0, C(1..3), 24 dyadics k/8 up to 3, inf
  CHECK(z.basis(3).size() == 29);
  CHECK(nbar().basis(4).size() == 6);
  CHECK(nbar_prime().basis(4).size() == 7);
}

TEST_CASE("composite keys") {
  auto s = make("DirectSumOf(E(1),E(2))");
  CHECK(std::get<FinitePresentation>(s).size() == 12);
  auto t = make("DirectSumOf(Z,HalfLine)");
  CHECK(std::holds_alternative<SymbolicSemigroup>(t));
  CHECK(std::get<SymbolicSemigroup>(make("SoftPart(Z)")).name() == "SoftPart(Z)");
  CHECK(std::get<FinitePresentation>(make("LscFin(sierpinski,1)")).size() == 6);
  CHECK(std::get<FinitePresentation>(make("LscFin(discrete(2),1)")).size() == 9);
  CHECK(std::holds_alternative<SymbolicSemigroup>(make("ChainLimitOf(constant,2)")));
  for (const auto& k : catalog_keys()) CHECK_NOTHROW(make(k));
}

TEST_CASE("bad keys") {
  for (const char* k : {"E", "E(x)", "E(1,2)", "HomE(1)", "Foo", "NbarPrime(1)", "LscFin(moon,2)",
                        "SoftPart(E(2))", "DirectSumOf(E(1),Z)", "E(2", "ChainLimitOf(weird,2)"}) {
    CAPTURE(k);
    try {
      make(k);
      FAIL("accepted");
    } catch (const InvalidInput& e) {
      CHECK((e.kind() == "invalid-parameters" || e.kind() == "kind-mismatch"));
    }
  }
}
