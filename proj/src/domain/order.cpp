#include "scott/domain/order.hpp"

#include <algorithm>

namespace scott::domain {

std::string describe(const FinPoset& p, const Violation& v) {
  switch (v.law) {
    case Law::Reflexivity:
      return "reflexivity " + p.name(v.a);
    case Law::Transitivity:
      return "transitivity " + p.name(v.a) + " " + p.name(v.b) + " " +
             p.name(v.c);
    case Law::Antisymmetry:
      return "antisymmetry " + p.name(v.a) + " " + p.name(v.b);
  }
  return "unknown";
}

std::vector<Violation> validate(const FinPoset& p) {
  std::vector<Violation> out;
  const std::size_t n = p.size();
  for (Elem a = 0; a < n; ++a)
    if (!p.leq(a, a)) out.push_back({Law::Reflexivity, a, a, a});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (a == b || !p.leq(a, b)) continue;
      for (Elem c = 0; c < n; ++c)
        if (b != c && p.leq(b, c) && !p.leq(a, c))
          out.push_back({Law::Transitivity, a, b, c});
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (p.leq(a, b) && p.leq(b, a)) out.push_back({Law::Antisymmetry, a, b, 0});
  return out;
}

bool is_upper_bound(const FinPoset& p, const Subset& s, Elem u) {
  for (Elem x = 0; x < s.size(); ++x)
    if (s[x] && !p.leq(x, u)) return false;
  return true;
}

bool is_directed(const FinPoset& p, const Subset& s) {
  const auto elems = members(s);
  if (elems.empty()) return false;
  for (Elem a : elems)
    for (Elem b : elems) {
      bool bounded = false;
      for (Elem c : elems)
        if (p.leq(a, c) && p.leq(b, c)) {
          bounded = true;
          break;
        }
      if (!bounded) return false;
    }
  return true;
}

std::optional<Elem> sup(const FinPoset& p, const Subset& s) {
  std::vector<Elem> bounds;
  for (Elem u = 0; u < p.size(); ++u)
    if (is_upper_bound(p, s, u)) bounds.push_back(u);
  for (Elem u : bounds) {
    if (std::all_of(bounds.begin(), bounds.end(),
                    [&](Elem v) { return p.leq(u, v); }))
      return u;
  }
  return std::nullopt;
}

std::optional<Elem> least(const FinPoset& p) {
  for (Elem x = 0; x < p.size(); ++x) {
    bool below_all = true;
    for (Elem y = 0; y < p.size() && below_all; ++y) below_all = p.leq(x, y);
    if (below_all) return x;
  }
  return std::nullopt;
}

std::optional<Elem> greatest(const FinPoset& p) {
  for (Elem x = 0; x < p.size(); ++x) {
    bool above_all = true;
    for (Elem y = 0; y < p.size() && above_all; ++y) above_all = p.leq(y, x);
    if (above_all) return x;
  }
  return std::nullopt;
}

std::optional<Elem> join(const FinPoset& p, Elem a, Elem b) {
  Subset s = empty_subset(p);
  s[a] = true;
  s[b] = true;
  return sup(p, s);
}

bool is_lattice(const FinPoset& p) {
  if (!least(p)) return false;
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = a + 1; b < p.size(); ++b)
      if (!join(p, a, b)) return false;
  return true;
}

namespace {

void check_limit(const FinPoset& p, std::size_t limit) {
  if (p.size() > limit) {
    throw LimitExceeded("way-below scan needs 2^" + std::to_string(p.size()) +
                        " subsets; poset size " + std::to_string(p.size()) +
                        " exceeds limit " + std::to_string(limit));
  }
}

struct DirectedFamily {
  std::vector<Elem> elems;
  Elem top;
};

// Directed subsets together with their suprema. A finite directed subset
// contains its own maximum, which is the supremum.
std::vector<DirectedFamily> directed_families(const FinPoset& p) {
  std::vector<DirectedFamily> out;
  const std::size_t n = p.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Subset s(n, false);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
    if (!is_directed(p, s)) continue;
    auto top = sup(p, s);
    if (!top) continue;
    out.push_back({members(s), *top});
  }
  return out;
}

}  // namespace

bool way_below(const FinPoset& p, Elem x, Elem y, std::size_t limit) {
  check_limit(p, limit);
  for (const auto& family : directed_families(p)) {
    if (!p.leq(y, family.top)) continue;
    bool reached = std::any_of(family.elems.begin(), family.elems.end(),
                               [&](Elem s) { return p.leq(x, s); });
    if (!reached) return false;
  }
  return true;
}

bool is_compact(const FinPoset& p, Elem x, std::size_t limit) {
  return way_below(p, x, x, limit);
}

std::vector<std::vector<bool>> way_below_relation(const FinPoset& p,
                                                  std::size_t limit) {
  check_limit(p, limit);
  const std::size_t n = p.size();
  std::vector<std::vector<bool>> wb(n, std::vector<bool>(n, true));
  for (const auto& family : directed_families(p)) {
    for (Elem x = 0; x < n; ++x) {
      bool reached = std::any_of(family.elems.begin(), family.elems.end(),
                                 [&](Elem s) { return p.leq(x, s); });
      if (reached) continue;
      for (Elem y = 0; y < n; ++y)
        if (p.leq(y, family.top)) wb[x][y] = false;
    }
  }
  return wb;
}

std::vector<Elem> linear_extension(const FinPoset& p) {
  // Kahn's algorithm on the strict order, smallest index first.
  const std::size_t n = p.size();
  std::vector<std::size_t> below(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (p.lt(a, b)) ++below[b];
  std::vector<Elem> order;
  std::vector<bool> done(n, false);
  order.reserve(n);
  while (order.size() < n) {
    Elem next = n;
    for (Elem e = 0; e < n; ++e)
      if (!done[e] && below[e] == 0) {
        next = e;
        break;
      }
    if (next == n) throw PosetError("order has a cycle; no linear extension");
    done[next] = true;
    order.push_back(next);
    for (Elem b = 0; b < n; ++b)
      if (p.lt(next, b)) --below[b];
  }
  return order;
}

}  // namespace scott::domain
