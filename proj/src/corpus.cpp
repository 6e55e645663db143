#include "cudim/corpus.hpp"

#include "cudim/catalog.hpp"
#include "cudim/constructions.hpp"

#include <random>

namespace cudim {

FinitePresentation generated_submonoid(const FinitePresentation& s,
                                       const std::vector<ElementId>& gens) {
  std::vector<bool> in(s.size(), false);
  in[0] = true;
  for (auto g : gens) in[to_index(g)] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (!in[a] || !in[b]) continue;
        auto c = to_index(s.add(element_at(a), element_at(b)));
        if (!in[c]) in[c] = grew = true;
      }
  }
  std::vector<std::size_t> keep, pos(s.size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (in[i]) {
      pos[i] = keep.size();
      keep.push_back(i);
    }
  std::vector<std::string> names;
  for (auto i : keep) names.push_back(s.name(element_at(i)));
  return FinitePresentation::build(
      keep.size(),
      [&](std::size_t a, std::size_t b) {
        return pos[to_index(s.add(element_at(keep[a]), element_at(keep[b])))];
      },
      [&](std::size_t a, std::size_t b) { return s.leq(element_at(keep[a]), element_at(keep[b])); },
      std::move(names), {64, true});
}

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::vector<ElementId> random_gens(Rng& rng, const FinitePresentation& s, std::size_t count) {
  std::vector<ElementId> g;
  for (std::size_t i = 0; i < count; ++i) g.push_back(element_at(1 + pick(rng, s.size() - 1)));
  return g;
}

std::string gen_names(const FinitePresentation& s, const std::vector<ElementId>& g) {
  std::string out;
  for (auto e : g) out += (out.empty() ? "" : ",") + s.name(e);
  return out;
}

}  // namespace

std::vector<CorpusEntry> random_corpus(std::size_t count, std::uint64_t seed,
                                       std::size_t max_size) {
  Rng rng(seed);
  std::vector<CorpusEntry> out;
  // Rejections are bounded; every source has some small outputs.
  for (std::size_t attempts = 0; out.size() < count && attempts < 100 * count + 100; ++attempts) {
    CorpusEntry e{"", FinitePresentation(elementary(0))};
    switch (pick(rng, 4)) {
      case 0: {
        std::size_t m = 1 + pick(rng, 6);
        auto em = elementary(m);
        auto g = random_gens(rng, em, 1 + pick(rng, 2));
        e = {"sub(E(" + std::to_string(m) + ");" + gen_names(em, g) + ")",
             generated_submonoid(em, g)};
        break;
      }
      case 1: {
        std::size_t a = pick(rng, 3), b = pick(rng, 3);
        auto sum = direct_sum(elementary(a), elementary(b));
        auto g = random_gens(rng, sum, 1 + pick(rng, 2));
        e = {"sub(E(" + std::to_string(a) + ")+E(" + std::to_string(b) + ");" +
                 gen_names(sum, g) + ")",
             generated_submonoid(sum, g)};
        break;
      }
      case 2: {
        std::size_t a = pick(rng, 3), b = pick(rng, 3);
        auto sum = direct_sum(elementary(a), elementary(b));
        auto g = random_gens(rng, sum, 1 + pick(rng, 3));
        auto base = generated_submonoid(sum, g);
        auto ideals = all_ideals(base);
        const auto& ideal = ideals[pick(rng, ideals.size())];
        auto q = quotient(base, ideal);
        e = {"quot(sub(E(" + std::to_string(a) + ")+E(" + std::to_string(b) + ");" +
                 gen_names(sum, g) + ")/" + std::to_string(ideal.size()) + ")",
             std::move(q.quotient)};
        break;
      }
      default: {
        std::size_t cap = 2 + pick(rng, 2);
        e = {"NbarPrime(" + std::to_string(cap) + ")", nbar_prime_truncation(cap)};
        break;
      }
    }
    if (e.presentation.size() <= max_size) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace cudim
