#pragma once

#include <span>
#include <utility>
#include <vector>

#include "scott/domain/maps.hpp"
#include "scott/domain/poset.hpp"

// Compact bases on finite posets and single step functions.
namespace scott::bases {

using domain::Elem;
using domain::MonoMap;
using domain::PosetRef;

// β : B → P, given as the list of images.
using BasisAssignment = std::vector<Elem>;

struct CompactBasisReport {
  bool all_compact = true;
  bool approximating = true;  // {b | β(b) ⊑ x} directed with sup x, for all x
  std::optional<Elem> witness;  // an element where a condition fails

  bool ok() const { return all_compact && approximating; }
};

CompactBasisReport check_compact_basis(const domain::FinPoset& p, const BasisAssignment& beta);

// The set of members of a list; duplicates and order are irrelevant.
domain::Subset list_to_subset(std::size_t universe, std::span<const Elem> xs);

// ⟨d ⇒ e⟩ : x ↦ e if d ⊑ x, ⊥ otherwise. q must be pointed.
MonoMap step_function(const PosetRef& p, const PosetRef& q, Elem d, Elem e);

// Finite joins of a family in a lattice: a list of indices maps to the join
// of the corresponding members, the empty list to ⊥.
class Directification {
 public:
  // Throws PosetError unless p is a lattice.
  Directification(PosetRef lattice, std::vector<Elem> family);

  Elem operator()(std::span<const std::size_t> indices) const;
  const std::vector<Elem>& family() const { return family_; }

 private:
  PosetRef lattice_;
  std::vector<Elem> family_;
  std::vector<std::vector<Elem>> joins_;
  Elem bottom_;
};

using StepPair = std::pair<Elem, Elem>;

// All (d, e) with ⟨d ⇒ e⟩ ⊑ f. Throws PosetError unless the target of f is
// a lattice.
std::vector<StepPair> decompose_into_step_functions(const MonoMap& f);

// Pointwise join of the step functions ⟨d ⇒ e⟩ for the given pairs.
MonoMap join_of_step_functions(const PosetRef& p, const PosetRef& q,
                               std::span<const StepPair> pairs);

}  // namespace scott::bases
