#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scott/domain/poset.hpp"

namespace scott::domain {

enum class Law { Reflexivity, Transitivity, Antisymmetry };

struct Violation {
  Law law;
  Elem a = 0;
  Elem b = 0;
  Elem c = 0;  // transitivity only: a ⊑ b ⊑ c but not a ⊑ c
};

std::string describe(const FinPoset& p, const Violation& v);

// Every violated poset law, with witnesses. Empty means the relation is a
// partial order.
std::vector<Violation> validate(const FinPoset& p);

bool is_upper_bound(const FinPoset& p, const Subset& s, Elem u);
bool is_directed(const FinPoset& p, const Subset& s);
std::optional<Elem> sup(const FinPoset& p, const Subset& s);
std::optional<Elem> least(const FinPoset& p);
std::optional<Elem> greatest(const FinPoset& p);
std::optional<Elem> join(const FinPoset& p, Elem a, Elem b);
// Least element and all binary joins exist.
bool is_lattice(const FinPoset& p);

inline constexpr std::size_t kWayBelowLimit = 12;

// x ≪ y by scanning every directed subset. Throws LimitExceeded when the
// poset has more than `limit` elements.
bool way_below(const FinPoset& p, Elem x, Elem y,
               std::size_t limit = kWayBelowLimit);
bool is_compact(const FinPoset& p, Elem x, std::size_t limit = kWayBelowLimit);

// The whole ≪ relation from a single scan; result[x][y] is x ≪ y.
std::vector<std::vector<bool>> way_below_relation(
    const FinPoset& p, std::size_t limit = kWayBelowLimit);

// A linear extension of the order, deterministic for a given poset.
std::vector<Elem> linear_extension(const FinPoset& p);

}  // namespace scott::domain
