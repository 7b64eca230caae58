#pragma once

#include <optional>
#include <vector>

#include "scott/bases/abstract_basis.hpp"
#include "scott/domain/maps.hpp"
#include "scott/domain/poset.hpp"

namespace scott::bases {

using domain::Subset;

inline constexpr std::size_t kIdealLimit = 10;

// ↓x = {a | a ≺ x}
Subset principal_ideal(const FiniteBasis& b, Elem x);

// Inhabited, lower and directed with respect to ≺.
bool is_ideal(const FiniteBasis& b, const Subset& s);

// ∀a ∈ I ∃c ∈ I. a ≺ c
bool is_rounded(const FiniteBasis& b, const Subset& ideal);

struct IdealCompletion {
  std::vector<Subset> ideals;     // element i of `poset` is ideals[i]
  domain::PosetRef poset;         // ordered by inclusion
  // principal[x]: index of ↓x, when ↓x is an ideal.
  std::vector<std::optional<Elem>> principal;
};

// Every ideal of a finite basis, by subset scan. Throws
// domain::LimitExceeded above kIdealLimit elements.
IdealCompletion idl_finite(const FiniteBasis& b, std::size_t limit = kIdealLimit);

bool subset_leq(const Subset& a, const Subset& b);

// I ≪ J iff some c ∈ J has I ⊆ ↓c.
bool idl_way_below(const FiniteBasis& b, const Subset& i, const Subset& j);

// x ↦ ↓x as a map from the poset to its ideal completion, when the basis is
// the poset's own order. Throws PosetError if some ↓x is not an ideal.
domain::MonoMap principal_embedding(const domain::PosetRef& p, const IdealCompletion& idl);

// Whether m is an order-isomorphism (bijective, order preserving and
// reflecting).
bool is_order_isomorphism(const domain::MonoMap& m);

}  // namespace scott::bases
