#pragma once

// Built-in semigroups.
//
// Symbolic numeric models share one encoding:
//   C(n)  compact n (C(0) is zero), displayed "n"
//   S(q)  soft q > 0 or inf, displayed "S(q)", S(inf) displayed "inf"
//   P     the extra compact 1' (NbarPrime) or 1'' (ZPrime)
// with
//   C(n) <= S(q) iff n < q,  S(q) <= C(n) iff q <= n,  S(q) <= S(p) iff q <= p
//   S(q) << C(n) iff q <= n, S(q) << S(p) iff q < p, compacts: << is <=
//   C + C = C(n+m), C + S = S(n+q), S + S = S(q+p)
//   P + P = C(2), P + x = C(1) + x for nonzero x != P
//   P <= b iff b is P, C(n >= 2) or S(q > 1); a <= P iff a is 0, P or S(q <= 1).

#include "cudim/constructions.hpp"
#include "cudim/presentation.hpp"
#include "cudim/spaces.hpp"
#include "cudim/symbolic.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cudim {

/// E_k = {0, 1, ..., k, inf}; sums above k become inf.
FinitePresentation elementary(std::size_t k);
/// {0, r, ..., l, inf} with r = ceil((l + 1) / (k + 1)); sums above l
/// become inf.
FinitePresentation hom_elementary(std::size_t k, std::size_t l);
/// 0, 1', 1, 2, ..., cap, inf with 1' + 1' = 2 and 1' + j = 1 + j.
FinitePresentation nbar_prime_truncation(std::size_t cap);

/// {C(n)} with inf = S(inf).
SymbolicSemigroup nbar();
/// nbar with 1'.
SymbolicSemigroup nbar_prime();
/// Compacts C(n) and softs S(q) for rational q > 0 and inf.
SymbolicSemigroup z_semigroup();
/// z with 1''.
SymbolicSemigroup z_prime();
/// [0, inf]: zero and the softs.
SymbolicSemigroup half_line();

/// "point", "sierpinski", "V" or "discrete(n)".
FinSpace named_space(std::string_view name);

/// Parses and builds a key such as E(4), HomE(2,5), NbarPrime,
/// NbarPrime(4), Nbar, Z, ZPrime, HalfLine, LscFin(V,2),
/// LscFinStrict(V,2), DirectSumOf(E(1),E(2)),
/// ChainLimitOf(doubling|simplicial|constant,k) or SoftPart(Z). Throws
/// InvalidInput("invalid-parameters").
AnySemigroup make(std::string_view key);

/// Keys of the default catalog instances, one per entry kind.
std::vector<std::string> catalog_keys();

}  // namespace cudim
