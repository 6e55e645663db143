#include "cudim/dimension.hpp"

#include <boost/dynamic_bitset.hpp>

#include <unordered_set>

namespace cudim {

namespace {

using Bits = boost::dynamic_bitset<>;

template <class E>
BoundedVerdict<SymbolicElement> lift(const InternedView& v, const BoundedVerdict<E>& b) {
  BoundedVerdict<SymbolicElement> out;
  out.status = b.status;
  out.tuple = v.elements_of(b.tuple);
  out.reason = b.reason;
  out.exact = b.exact;
  out.depth = b.depth;
  out.slack = b.slack;
  out.r_max = b.r_max;
  out.instances = b.instances;
  return out;
}

Instance<InternId> intern_instance(InternedView& v, const Instance<SymbolicElement>& inst) {
  return {v.intern(inst.x_prime), v.intern(inst.x), v.intern_all(inst.ys)};
}

}  // namespace

Dim0Result dim_zero_exact(const FinitePresentation& s) {
  const std::size_t n = s.size();
  std::vector<Bits> down(n, Bits(n)), up(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (s.leq(element_at(a), element_at(b))) {
        down[b].set(a);
        up[a].set(b);
      }
  // sums[y1][y2] : {z1 + z2 : z1 <= y1, z2 <= y2}
  std::vector<Bits> sums(n * n, Bits(n));
  for (std::size_t y1 = 0; y1 < n; ++y1)
    for (std::size_t y2 = 0; y2 < n; ++y2)
      for (std::size_t z1 = 0; z1 < n; ++z1) {
        if (!down[y1][z1]) continue;
        for (std::size_t z2 = 0; z2 < n; ++z2)
          if (down[y2][z2])
            sums[y1 * n + y2].set(to_index(s.add(element_at(z1), element_at(z2))));
      }

  for (std::size_t xp = 0; xp < n; ++xp)
    for (std::size_t x = 0; x < n; ++x) {
      if (!up[xp][x]) continue;
      Bits window = up[xp] & down[x];
      for (std::size_t y1 = 0; y1 < n; ++y1)
        for (std::size_t y2 = 0; y2 < n; ++y2) {
          auto total = to_index(s.add(element_at(y1), element_at(y2)));
          if (!up[x][total]) continue;
          if (!sums[y1 * n + y2].intersects(window))
            return {false, Instance<ElementId>{element_at(xp), element_at(x),
                                               {element_at(y1), element_at(y2)}}};
        }
    }
  return {true, std::nullopt};
}

std::optional<Witness<ElementId>> dim_zero_witness(const FinitePresentation& s,
                                                   const Instance<ElementId>& inst) {
  if (inst.ys.size() != 2) throw InvalidInput("invalid-instance", "expected two ys");
  for (auto z1 : s.finite_down_set(inst.ys[0]))
    for (auto z2 : s.finite_down_set(inst.ys[1])) {
      auto t = s.add(z1, z2);
      if (s.leq(inst.x_prime, t) && s.leq(t, inst.x))
        return Witness<ElementId>{{z1}, {z2}};
    }
  return std::nullopt;
}

BoundedVerdict<ElementId> dim_bounded(const FinitePresentation& s,
                                      const DimBoundedOptions& options) {
  auto all = s.elements();
  std::span<const ElementId> u(all);
  std::size_t r_max = options.r_max ? options.r_max : s.size();
  auto out = dim_bounded_over(s, u, u, options.n, r_max, Form::relaxed, options.limits,
                              [](const std::vector<ElementId>&) { return true; });
  if (out.status == VerdictStatus::verified_up_to) out.r_max = r_max;
  out.exact = out.status == VerdictStatus::refuted;
  return out;
}

BoundedVerdict<SymbolicElement> dim_bounded(const SymbolicSemigroup& s,
                                            const DimBoundedOptions& options) {
  InternedView v(s);
  auto basis = s.basis(options.depth);
  auto pool_el = s.basis(options.depth + options.slack);
  auto u = v.intern_all(basis);
  auto space = v.intern_all(pool_el);
  std::unordered_set<SymbolicElement, SymbolicElementHash> in_space(pool_el.begin(),
                                                                    pool_el.end());
  auto exact = [&](const std::vector<InternId>& ys) {
    for (auto y : ys) {
      auto d = s.finite_down_set(v.element(y));
      if (!d) return false;
      for (const auto& e : *d)
        if (!in_space.count(e)) return false;
    }
    return true;
  };
  std::size_t r_max = options.r_max ? options.r_max : 2;
  auto b = dim_bounded_over(v, std::span<const InternId>(u), std::span<const InternId>(space),
                            options.n, r_max, Form::strict, options.limits, exact);
  if (b.status == VerdictStatus::verified_up_to) b.r_max = r_max;
  auto out = lift(v, b);
  out.depth = options.depth;
  out.slack = options.slack;
  return out;
}

std::optional<Witness<SymbolicElement>> find_witness(
    const SymbolicSemigroup& s, const Instance<SymbolicElement>& inst, std::size_t n,
    std::span<const SymbolicElement> space, Form f, const SearchLimits& limits) {
  InternedView v(s);
  auto i = intern_instance(v, inst);
  auto sp = v.intern_all(space);
  auto z = find_witness(v, i, n, std::span<const InternId>(sp), f, limits);
  if (!z) return std::nullopt;
  Witness<SymbolicElement> out;
  for (const auto& row : *z) out.push_back(v.elements_of(row));
  return out;
}

bool check_witness(const SymbolicSemigroup& s, const Instance<SymbolicElement>& inst,
                   const Witness<SymbolicElement>& z, std::size_t n, Form f) {
  return check_witness<const SymbolicSemigroup>(s, inst, z, n, f);
}

BoundedVerdict<ElementId> certify_dim0(const FinitePresentation& s, Certificate method) {
  auto all = s.elements();
  std::span<const ElementId> u(all);
  auto out = certify_over(s, u, u, method);
  out.exact = true;
  return out;
}

BoundedVerdict<SymbolicElement> certify_dim0(const SymbolicSemigroup& s,
                                             Certificate method, std::size_t depth,
                                             std::size_t slack) {
  InternedView v(s);
  auto sample = v.intern_all(s.basis(depth));
  auto pool = v.intern_all(s.basis(depth + slack));
  auto b = certify_over(v, std::span<const InternId>(sample),
                        std::span<const InternId>(pool), method);
  auto out = lift(v, b);
  out.depth = depth;
  out.slack = slack;
  return out;
}

}  // namespace cudim
