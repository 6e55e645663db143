// One PASS/FAIL line per acceptance criterion.
//
// Exit status is nonzero when a criterion fails that is not in
// `known_failures`; known failures still print FAIL.

#include "cudim/axioms.hpp"
#include "cudim/catalog.hpp"
#include "cudim/constructions.hpp"
#include "cudim/corpus.hpp"
#include "cudim/dimension.hpp"
#include "cudim/spaces.hpp"
#include "cudim/structure.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace cudim;

namespace {

// Time limits in seconds, and search parameters.
constexpr double limit_elementary_each = 1.0;
constexpr double limit_bivariant = 30.0;
constexpr double limit_nbar_prime = 10.0;
constexpr double limit_z = 5.0;
constexpr double limit_sums = 60.0;
constexpr double limit_spaces = 10.0;
constexpr std::size_t corpus_size = 120;
constexpr std::size_t axiom_depth = 3;
constexpr std::size_t thin_depth = 4;
constexpr std::size_t retract_depth = 4;
constexpr std::size_t retract_instance_depth = 2;

// HomE(1,2) = {0,2,inf} is E_1 up to relabelling, so it is
// zero-dimensional and the l > k clause cannot hold for it.
const std::set<int> known_failures{2};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (!note.str().empty()) note << "; ";
    note << why;
    pass = false;
  }
};

oracle::Table table_of(const FinitePresentation& s) {
  return oracle::make_table(
      s.size(),
      [&](std::size_t a, std::size_t b) { return to_index(s.add(element_at(a), element_at(b))); },
      [&](std::size_t a, std::size_t b) { return s.leq(element_at(a), element_at(b)); });
}

bool same_table(const FinitePresentation& s, const oracle::Table& t) {
  auto u = table_of(s);
  return u.n == t.n && u.add == t.add && u.leq == t.leq;
}

std::string names(const FinitePresentation& s, const std::vector<ElementId>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + s.name(xs[i]);
  return out + ")";
}

std::string names(const SymbolicSemigroup& s, const std::vector<SymbolicElement>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + s.format(xs[i]);
  return out + ")";
}

std::vector<ElementId> flat(const Instance<ElementId>& inst) {
  std::vector<ElementId> out{inst.x_prime, inst.x};
  out.insert(out.end(), inst.ys.begin(), inst.ys.end());
  return out;
}

void c1(Outcome& o) {
  for (std::size_t k = 0; k <= 6; ++k) {
    auto t0 = Clock::now();
    auto e = elementary(k);
    auto r = dim_zero_exact(e);
    double dt = seconds_since(t0);
    if (!same_table(e, oracle::truncated_chain(1, k))) o.fail("E(" + std::to_string(k) + ") table");
    if (!r.holds) o.fail("E(" + std::to_string(k) + ") not dim 0");
    if (!oracle::dim_zero(table_of(e))) o.fail("oracle: E(" + std::to_string(k) + ") not dim 0");
    if (dt > limit_elementary_each) o.fail("E(" + std::to_string(k) + ") slow");
  }
}

void c2(Outcome& o) {
  auto t0 = Clock::now();
  for (std::size_t k = 1; k <= 5; ++k)
    for (std::size_t l = 1; l <= 5; ++l) {
      std::string tag = "HomE(" + std::to_string(k) + "," + std::to_string(l) + ")";
      auto s = hom_elementary(k, l);
      const std::size_t r = (l + 1 + k) / (k + 1);
      if (!same_table(s, oracle::truncated_chain(r, l))) o.fail(tag + " table");
      auto d0 = dim_zero_exact(s);
      if (d0.holds != oracle::dim_zero(table_of(s))) o.fail(tag + " disagrees with oracle");
      if (d0.holds != (l <= k)) o.fail(tag + " dim0=" + (d0.holds ? "true" : "false"));
      if (l <= k) continue;
      DimBoundedOptions opt;
      opt.n = 1;
      opt.r_max = s.size();
      auto b = dim_bounded(s, opt);
      if (b.status != VerdictStatus::verified_up_to) o.fail(tag + " n=1 refuted");
      if (d0.counterexample) {
        auto want = std::vector<std::string>{std::to_string(r + 1), std::to_string(r + 1),
                                             std::to_string(r), std::to_string(r)};
        auto got = flat(*d0.counterexample);
        std::vector<std::string> got_names;
        for (auto e : got) got_names.push_back(s.name(e));
        if (got_names != want) o.fail(tag + " counterexample " + names(s, got));
      }
    }
  if (seconds_since(t0) > limit_bivariant) o.fail("slow");
}

void c3(Outcome& o) {
  auto t0 = Clock::now();
  auto s = nbar_prime();
  Instance<SymbolicElement> inst{s.parse("1'"), s.parse("1'"), {s.parse("1"), s.parse("1")}};
  auto space = s.basis(6);
  for (std::size_t n = 0; n <= 8; ++n)
    if (find_witness(s, inst, n, space, Form::strict))
      o.fail("witness at n=" + std::to_string(n));
  if (seconds_since(t0) > limit_nbar_prime) o.fail("slow");
}

void c4(Outcome& o) {
  auto t0 = Clock::now();
  auto s = z_semigroup();
  Instance<SymbolicElement> inst{s.parse("1"), s.parse("1"), {s.parse("S(3/4)"), s.parse("S(3/4)")}};
  auto space = s.basis(3);
  if (find_witness(s, inst, 0, space, Form::strict)) o.fail("witness at n=0");
  auto w = find_witness(s, inst, 1, space, Form::strict);
  if (!w) {
    o.fail("no witness at n=1");
  } else {
    // Re-check with the oracle's own arithmetic.
    auto conv = [&](const SymbolicElement& e) {
      if (e.is<Compact>()) return oracle::zc(static_cast<std::int64_t>(e.as<Compact>().n));
      const auto& q = e.as<Soft>().q;
      if (q.is_infinite()) return oracle::zinf();
      return oracle::zs(static_cast<std::int64_t>(numerator(q.value())),
                        static_cast<std::int64_t>(denominator(q.value())));
    };
    std::vector<std::vector<oracle::ZElem>> z;
    for (const auto& row : *w) {
      z.emplace_back();
      for (const auto& e : row) z.back().push_back(conv(e));
    }
    bool ok = oracle::witness_ok(oracle::zc(1), oracle::zc(1),
                                 std::vector{oracle::zs(3, 4), oracle::zs(3, 4)}, z,
                                 oracle::zc(0), oracle::zadd, oracle::zll);
    if (!ok) o.fail("oracle rejects witness");
    std::string shown;
    for (const auto& row : *w) shown += names(s, row);
    o.note << "witness " << shown;
  }
  if (seconds_since(t0) > limit_z) o.fail("slow");
}

const std::vector<CorpusEntry>& corpus() {
  static const auto c = random_corpus(corpus_size, default_seed);
  return c;
}

void c5(Outcome& o) {
  auto t0 = Clock::now();
  const auto& c = corpus();
  if (c.size() < 100) o.fail("corpus has " + std::to_string(c.size()) + " entries");
  std::vector<bool> d0;
  for (const auto& e : c) d0.push_back(dim_zero_exact(e.presentation).holds);
  std::size_t violations = 0, pairs = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::size_t j = (i * 37 + 11) % c.size();
    auto sum = direct_sum(c[i].presentation, c[j].presentation);
    bool got = dim_zero_exact(sum).holds;
    ++pairs;
    if (got != (d0[i] && d0[j])) {
      ++violations;
      o.fail(c[i].origin + " + " + c[j].origin);
    }
    // The oracle rebuilds the product independently on a subset.
    if (i % 10 == 0) {
      auto t = oracle::product(table_of(c[i].presentation), table_of(c[j].presentation));
      if (!same_table(sum, t)) o.fail("sum table " + c[i].origin);
      if (oracle::dim_zero(t) != got) o.fail("oracle sum " + c[i].origin);
    }
  }
  std::size_t zero_dim = static_cast<std::size_t>(std::count(d0.begin(), d0.end(), true));
  o.note << pairs << " pairs, " << zero_dim << "/" << c.size() << " dim 0, " << violations
         << " violations";
  if (seconds_since(t0) > limit_sums) o.fail("slow");
}

void c6(Outcome& o) {
  std::size_t checked = 0, violations = 0;
  for (const auto& e : corpus()) {
    const auto& s = e.presentation;
    if (!dim_zero_exact(s).holds) continue;
    for (const auto& i : all_ideals(s)) {
      ++checked;
      auto q = quotient(s, i).quotient;
      auto sub = restrict_to_ideal(s, i);
      if (!dim_zero_exact(q).holds || !dim_zero_exact(sub).holds) {
        ++violations;
        o.fail(e.origin + " ideal of size " + std::to_string(i.size()));
      }
    }
  }
  o.note << checked << " ideals, " << violations << " violations";
}

void c7(Outcome& o) {
  // NbarPrime, symbolic and truncated: O6 fails at (1',1',1,1), O5 holds.
  {
    auto s = nbar_prime();
    auto r = sample_check_axioms(s, axiom_depth);
    if (!r.o5.holds) o.fail("NbarPrime O5 fails at " + names(s, r.o5.counterexample));
    if (r.o6.holds) o.fail("NbarPrime O6 passes");
    else if (names(s, r.o6.counterexample) != "(1',1',1,1)")
      o.fail("NbarPrime O6 witness " + names(s, r.o6.counterexample));
    auto t = nbar_prime_truncation(4);
    auto f = check_axioms(t);
    if (!f.o5.holds) o.fail("NbarPrime(4) O5 fails");
    if (f.o6.holds || names(t, f.o6.counterexample) != "(1',1',1,1)")
      o.fail("NbarPrime(4) O6 verdict");
  }
  // Strictly positive Lsc over V: O5 fails at 1 << 1 << 1 + chi_U.
  {
    auto l = lsc_semigroup(v_space(), 2, LscVariant::strictly_positive);
    const auto& s = l.presentation;
    auto f = check_axioms(s);
    if (!f.o6.holds) o.fail("LscFinStrict O6 fails");
    if (f.o5.holds) {
      o.fail("LscFinStrict O5 passes");
    } else {
      const auto& t = f.o5.counterexample;  // (x', x, y', y, z)
      std::vector<std::uint32_t> one(3, 1);
      auto one_id = l.find(one);
      bool shape = one_id && t[0] == *one_id && t[1] == *one_id;
      // z = 1 + chi_U: values in {1, 2}, equal to 2 exactly on a proper
      // nonempty open set.
      FinSpace::Set u = 0;
      const auto& zv = l.values[to_index(t[4])];
      for (std::size_t p = 0; p < zv.size(); ++p) {
        if (zv[p] == 2) u |= FinSpace::Set{1} << p;
        else if (zv[p] != 1) shape = false;
      }
      shape = shape && u != 0 && u != v_space().full() && v_space().is_open(u);
      o.note << "O5 witness " << names(s, t);
      if (!shape) o.fail("O5 witness not of shape 1 << 1 << 1 + chi_U");
    }
  }
  // Everything else passes both.
  for (std::string key : {"E(4)", "HomE(3,2)", "Nbar", "Z", "ZPrime", "HalfLine",
                          "LscFin(discrete(2),2)", "DirectSumOf(E(1),E(2))",
                          "ChainLimitOf(doubling,4)", "ChainLimitOf(simplicial)",
                          "SoftPart(Z)"}) {
    auto s = make(key);
    if (auto* f = std::get_if<FinitePresentation>(&s)) {
      auto r = check_axioms(*f);
      if (!r.o5.holds) o.fail(key + " O5");
      if (!r.o6.holds) o.fail(key + " O6");
    } else {
      auto r = sample_check_axioms(std::get<SymbolicSemigroup>(s), axiom_depth);
      if (!r.o5.holds) o.fail(key + " O5 at " + names(std::get<SymbolicSemigroup>(s), r.o5.counterexample));
      if (!r.o6.holds) o.fail(key + " O6 at " + names(std::get<SymbolicSemigroup>(s), r.o6.counterexample));
    }
  }
}

void c8(Outcome& o) {
  auto t0 = Clock::now();
  for (std::size_t n = 1; n <= 4; ++n)
    if (covering_dim(discrete_space(n)) != 0) o.fail("discrete(" + std::to_string(n) + ")");
  if (covering_dim(sierpinski_space()) != 0) o.fail("sierpinski");
  if (covering_dim(v_space()) != 1) o.fail("V-space dim");
  auto lv = lsc_semigroup(v_space(), 2);
  if (dim_zero_exact(lv.presentation).holds) o.fail("Lsc(V,2) dim 0");
  for (std::size_t n = 1; n <= 3; ++n) {
    auto l = lsc_semigroup(discrete_space(n), 2);
    if (!dim_zero_exact(l.presentation).holds) o.fail("Lsc(discrete(" + std::to_string(n) + "),2)");
  }
  auto l4 = lsc_semigroup(discrete_space(4), 1, LscVariant::full, 81);
  if (!dim_zero_exact(l4.presentation).holds) o.fail("Lsc(discrete(4),1)");
  // Discrete Lsc(X, cap) is E_cap^|X|; compare with the oracle's product.
  auto e2 = oracle::truncated_chain(1, 2);
  auto e1 = oracle::truncated_chain(1, 1);
  auto p3 = oracle::product(oracle::product(e2, e2), e2);
  if (!oracle::dim_zero(oracle::product(e2, e2))) o.fail("oracle Lsc(discrete(2),2)");
  auto l3 = lsc_semigroup(discrete_space(3), 2);
  if (!same_table(l3.presentation, p3)) o.fail("Lsc(discrete(3),2) table");
  auto p4 = oracle::product(oracle::product(e1, e1), oracle::product(e1, e1));
  if (!same_table(l4.presentation, p4)) o.fail("Lsc(discrete(4),1) table");
  if (oracle::dim_zero(table_of(lv.presentation))) o.fail("oracle Lsc(V,2) dim 0");
  o.note << "Lsc(V,2) has " << lv.presentation.size() << " elements";
  if (seconds_since(t0) > limit_spaces) o.fail("slow");
}

void c9(Outcome& o) {
  std::size_t checked = 0;
  for (auto s : {half_line(), soft_part(z_semigroup())}) {
    ClassifyOptions opt;
    opt.depth = thin_depth;
    for (const auto& x : s.basis(thin_depth)) {
      // The equivalence is stated for x << inf.
      if (!s.way_below(x, soft_infinity())) continue;
      auto c = classify_element(s, x, opt);
      ++checked;
      if (c.thin_boundary.value != c.complementable.value)
        o.fail(s.name() + " " + s.format(x));
    }
  }
  o.note << checked << " elements";
}

void c10(Outcome& o) {
  auto s = half_line();
  auto t = z_semigroup();
  auto pair = soft_retract_pair();
  auto rep = retract_check(s, t, pair, retract_depth);
  if (!rep.holds) o.fail("retract_check: " + rep.violation + " at " + names(t, rep.tuple));

  auto sample = s.basis(retract_instance_depth);
  auto space = t.basis(retract_depth);
  std::size_t instances = 0, witnesses = 0;
  for (const auto& xp : sample)
    for (const auto& x : sample) {
      if (!s.way_below(xp, x)) continue;
      for (std::size_t a = 0; a < sample.size(); ++a)
        for (std::size_t b = a; b < sample.size(); ++b) {
          std::vector<SymbolicElement> ys{sample[a], sample[b]};
          if (!s.way_below(x, s.add(ys[0], ys[1]))) continue;
          ++instances;
          Instance<SymbolicElement> img{*pair.iota(xp), *pair.iota(x),
                                        {*pair.iota(ys[0]), *pair.iota(ys[1])}};
          auto w = find_witness(t, img, 1, space, Form::strict);
          if (!w) continue;
          ++witnesses;
          Witness<SymbolicElement> back;
          for (const auto& row : *w) {
            back.emplace_back();
            for (const auto& e : row) back.back().push_back(*pair.sigma(e));
          }
          Instance<SymbolicElement> inst{xp, x, ys};
          if (!check_witness(s, inst, back, 1, Form::relaxed))
            o.fail("sigma witness fails at " + names(s, {xp, x, ys[0], ys[1]}));
        }
    }
  o.note << witnesses << " witnesses over " << instances << " instances";
  if (witnesses == 0) o.fail("no witnesses");
}

void c11(Outcome& o) {
  auto two = elementary(0);
  FinitePresentation power = two;
  for (std::size_t k = 1; k <= 4; ++k) {
    if (k > 1) power = direct_sum(power, two);
    if (certify_dim0(power, Certificate::idempotent).status != VerdictStatus::certified)
      o.fail("idempotent {0,inf}^" + std::to_string(k));
  }
  for (std::size_t k = 0; k <= 6; ++k)
    if (certify_dim0(elementary(k), Certificate::riesz).status != VerdictStatus::certified)
      o.fail("riesz E(" + std::to_string(k) + ")");
  auto lim = chain_limit(doubling_chain(), "doubling");
  if (certify_dim0(lim, Certificate::riesz, 4).status != VerdictStatus::certified)
    o.fail("riesz doubling limit");
  auto np = nbar_prime();
  auto d = certify_dim0(np, Certificate::riesz, axiom_depth);
  if (d.status != VerdictStatus::declined) o.fail("riesz NbarPrime certified");
  else o.note << "NbarPrime declined at " << names(np, d.tuple);
  if (certify_dim0(nbar_prime_truncation(4), Certificate::riesz).status != VerdictStatus::declined)
    o.fail("riesz NbarPrime(4) certified");
}

void c12(Outcome& o) {
  std::size_t n = 0;
  for (const auto& e : corpus()) {
    DimBoundedOptions opt;
    opt.n = 0;
    opt.r_max = 2;
    bool exact = dim_zero_exact(e.presentation).holds;
    bool bounded = dim_bounded(e.presentation, opt).status == VerdictStatus::verified_up_to;
    ++n;
    if (exact != bounded) o.fail(e.origin);
  }
  o.note << n << " presentations";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"elementary semigroups are zero-dimensional", c1},
      {"bivariant family dimensions", c2},
      {"NbarPrime has no witness for n <= 8", c3},
      {"Z instance needs one extra colour", c4},
      {"direct sums preserve dimension zero", c5},
      {"ideals and quotients preserve dimension zero", c6},
      {"axiom failure regressions", c7},
      {"finite spaces oracle", c8},
      {"thin boundary iff complementable", c9},
      {"soft retract of Z", c10},
      {"dimension zero certificates", c11},
      {"exact and bounded dimension zero agree", c12},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const int id = static_cast<int>(i + 1);
    bool known = known_failures.count(id) > 0;
    std::printf("%s %2d %s (%.2fs)%s%s%s\n", o.pass ? "PASS" : "FAIL", id,
                criteria[i].first.c_str(), seconds_since(t0), o.note.str().empty() ? "" : ": ",
                o.note.str().c_str(), !o.pass && known ? " [known]" : "");
    if (!o.pass && !known) ++unexpected;
  }
  std::fflush(stdout);
  return unexpected == 0 ? 0 : 1;
}
