#pragma once

#include <span>

#include "scott/pcf/syntax.hpp"
#include "scott/wtree.hpp"

// PCF types and terms as well-sorted W-trees.
//
// Types live in a one-sorted signature with `iota` (no children) and
// `arrow` (two children). Terms are sorted by their PCF type; since the full
// term signature has a constructor per type instance, term signatures are
// built for the finite slice of instances a given set of terms uses.
namespace scott::pcf {

const wtree::Signature& type_signature();
wtree::WTree encode(const Type& t);

// Sort identifier of a PCF type in a term signature.
std::string sort_of(const Type& t);

// Labels: zero, succ, pred, ifz, k[σ,τ], s[σ,τ,ρ], fix[σ], app[σ,τ] where
// app[σ,τ] has sort τ and children of sorts σ ⇒ τ and σ.
wtree::Signature term_signature(std::span<const Term> terms);
wtree::WTree encode(const Term& t);

}  // namespace scott::pcf
