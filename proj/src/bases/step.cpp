#include "scott/bases/step.hpp"

#include <algorithm>

#include "scott/domain/order.hpp"

namespace scott::bases {

using domain::FinPoset;
using domain::PosetError;
using domain::Subset;

CompactBasisReport check_compact_basis(const FinPoset& p, const BasisAssignment& beta) {
  CompactBasisReport r;
  const auto wb = domain::way_below_relation(p);
  for (Elem b : beta)
    if (!wb[b][b]) {
      r.all_compact = false;
      if (!r.witness) r.witness = b;
    }
  for (Elem x = 0; x < p.size(); ++x) {
    // The family b ↦ β(b) restricted to β(b) ⊑ x.
    std::vector<Elem> below;
    for (Elem b : beta)
      if (p.leq(b, x)) below.push_back(b);
    bool directed = !below.empty();
    for (Elem u : below)
      for (Elem v : below) {
        if (!directed) break;
        directed = std::any_of(below.begin(), below.end(),
                               [&](Elem w) { return p.leq(u, w) && p.leq(v, w); });
      }
    Subset image = domain::empty_subset(p);
    for (Elem b : below) image[b] = true;
    auto top = domain::sup(p, image);
    if (!directed || !top || *top != x) {
      r.approximating = false;
      if (!r.witness) r.witness = x;
    }
  }
  return r;
}

Subset list_to_subset(std::size_t universe, std::span<const Elem> xs) {
  Subset s(universe, false);
  for (Elem x : xs) s.at(x) = true;
  return s;
}

MonoMap step_function(const PosetRef& p, const PosetRef& q, Elem d, Elem e) {
  auto bottom = domain::least(*q);
  if (!bottom) throw PosetError("step function: target is not pointed");
  std::vector<Elem> table(p->size());
  for (Elem x = 0; x < p->size(); ++x) table[x] = p->leq(d, x) ? e : *bottom;
  return MonoMap(p, q, std::move(table));
}

Directification::Directification(PosetRef lattice, std::vector<Elem> family)
    : lattice_(std::move(lattice)), family_(std::move(family)) {
  auto bottom = domain::least(*lattice_);
  if (!bottom) throw PosetError("directify: poset has no least element");
  bottom_ = *bottom;
  const std::size_t n = lattice_->size();
  joins_.assign(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      auto j = domain::join(*lattice_, a, b);
      if (!j) throw PosetError("directify: poset is not a lattice");
      joins_[a][b] = *j;
    }
}

Elem Directification::operator()(std::span<const std::size_t> indices) const {
  Elem acc = bottom_;
  for (std::size_t i : indices) acc = joins_[acc][family_.at(i)];
  return acc;
}

std::vector<StepPair> decompose_into_step_functions(const MonoMap& f) {
  const FinPoset& q = *f.target();
  if (!domain::is_lattice(q)) throw PosetError("decompose: target is not a lattice");
  std::vector<StepPair> out;
  for (Elem d = 0; d < f.source()->size(); ++d)
    for (Elem e = 0; e < q.size(); ++e)
      if (q.leq(e, f(d))) out.emplace_back(d, e);
  return out;
}

MonoMap join_of_step_functions(const PosetRef& p, const PosetRef& q,
                               std::span<const StepPair> pairs) {
  auto bottom = domain::least(*q);
  if (!bottom) throw PosetError("step functions: target is not pointed");
  std::vector<Elem> table(p->size(), *bottom);
  for (auto [d, e] : pairs) {
    MonoMap step = step_function(p, q, d, e);
    for (Elem x = 0; x < p->size(); ++x) {
      auto j = domain::join(*q, table[x], step(x));
      if (!j) throw PosetError("step functions: target is not a lattice");
      table[x] = *j;
    }
  }
  return MonoMap(p, q, std::move(table));
}

}  // namespace scott::bases
