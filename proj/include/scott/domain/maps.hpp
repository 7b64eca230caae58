#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "scott/domain/poset.hpp"

namespace scott::domain {

// A monotone map between finite posets, stored as its table.
class MonoMap {
 public:
  // Throws PosetError if the table has the wrong size, points outside the
  // target or is not monotone.
  MonoMap(PosetRef source, PosetRef target, std::vector<Elem> table);

  static MonoMap unchecked(PosetRef source, PosetRef target,
                           std::vector<Elem> table);

  Elem operator()(Elem x) const { return table_[x]; }
  const std::vector<Elem>& table() const { return table_; }
  const PosetRef& source() const { return source_; }
  const PosetRef& target() const { return target_; }

  friend bool operator==(const MonoMap& a, const MonoMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ &&
           a.table_ == b.table_;
  }

 private:
  MonoMap() = default;
  PosetRef source_;
  PosetRef target_;
  std::vector<Elem> table_;
};

bool is_monotone(const FinPoset& source, const FinPoset& target,
                 const std::vector<Elem>& table);

MonoMap identity(const PosetRef& p);
MonoMap constant(const PosetRef& source, const PosetRef& target, Elem value);
// g ∘ f
MonoMap compose(const MonoMap& g, const MonoMap& f);
// f ⊑ g pointwise.
bool pointwise_leq(const MonoMap& f, const MonoMap& g);

inline constexpr std::size_t kEnumerationLimit = 2'000'000;

// All monotone maps p → q, without duplicates, in lexicographic order of
// their tables read along linear_extension(p). Throws LimitExceeded past
// `limit` maps.
std::vector<std::vector<Elem>> enumerate_monotone_tables(
    const FinPoset& p, const FinPoset& q, std::size_t limit = kEnumerationLimit);
std::vector<MonoMap> enumerate_monotone_maps(
    const PosetRef& p, const PosetRef& q, std::size_t limit = kEnumerationLimit);

// Componentwise order on pairs; the pair (a, b) is element a * |q| + b.
struct Product {
  PosetRef left;
  PosetRef right;
  PosetRef poset;
  MonoMap fst;
  MonoMap snd;

  Elem pair(Elem a, Elem b) const { return a * right->size() + b; }
  // The mediating map ⟨f, g⟩ : r → left × right.
  MonoMap pairing(const MonoMap& f, const MonoMap& g) const;
};

Product product(const PosetRef& p, const PosetRef& q);

// f × g : from → to, acting componentwise.
MonoMap product_map(const Product& from, const Product& to, const MonoMap& f,
                    const MonoMap& g);

// Monotone maps p → q ordered pointwise. q must be pointed.
struct Exponential {
  PosetRef poset;

  const FunctionSpace& space() const { return *poset->space(); }
  const PosetRef& source() const { return space().source; }
  const PosetRef& target() const { return space().target; }

  MonoMap at(Elem f) const;
  Elem eval(Elem f, Elem x) const { return space().tables[f][x]; }
  std::optional<Elem> find(const std::vector<Elem>& table) const {
    return space().find(table);
  }
  // eval : [p → q] × p → q, over the given product.
  MonoMap eval_map(const Product& fx) const;
  // curry(h) : a → [p → q] for h : a × p → q.
  MonoMap curry(const Product& ap, const MonoMap& h) const;
};

Exponential exponential(const PosetRef& p, const PosetRef& q,
                        std::size_t limit = kEnumerationLimit);

struct FixedPoint {
  Elem value;
  // Number of iterations that changed the approximant.
  std::size_t iterations;
};

// Kleene iteration from ⊥. Throws PosetError if f is not an endomap of a
// pointed poset.
FixedPoint lfp(const MonoMap& f);

// Whether f preserves the supremum of every directed subset of its source.
bool preserves_directed_sups(const MonoMap& f, std::size_t limit = 16);

}  // namespace scott::domain
