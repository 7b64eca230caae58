#include "scott/bases/ideal.hpp"

#include <algorithm>

namespace scott::bases {

using domain::FinPoset;
using domain::PosetError;

Subset principal_ideal(const FiniteBasis& b, Elem x) {
  Subset s(b.size(), false);
  for (Elem a = 0; a < b.size(); ++a) s[a] = b.prec(a, x);
  return s;
}

bool is_ideal(const FiniteBasis& b, const Subset& s) {
  const auto elems = domain::members(s);
  if (elems.empty()) return false;
  for (Elem x : elems)
    for (Elem a = 0; a < b.size(); ++a)
      if (b.prec(a, x) && !s[a]) return false;
  for (Elem x : elems)
    for (Elem y : elems) {
      bool bounded = std::any_of(elems.begin(), elems.end(),
                                 [&](Elem c) { return b.prec(x, c) && b.prec(y, c); });
      if (!bounded) return false;
    }
  return true;
}

bool is_rounded(const FiniteBasis& b, const Subset& ideal) {
  const auto elems = domain::members(ideal);
  return std::all_of(elems.begin(), elems.end(), [&](Elem a) {
    return std::any_of(elems.begin(), elems.end(), [&](Elem c) { return b.prec(a, c); });
  });
}

bool subset_leq(const Subset& a, const Subset& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

IdealCompletion idl_finite(const FiniteBasis& b, std::size_t limit) {
  const std::size_t n = b.size();
  if (n > limit)
    throw domain::LimitExceeded("ideal enumeration scans 2^" + std::to_string(n) +
                                " subsets; basis size exceeds limit " + std::to_string(limit));
  IdealCompletion idl;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Subset s(n, false);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
    if (is_ideal(b, s)) idl.ideals.push_back(std::move(s));
  }
  const std::size_t m = idl.ideals.size();
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i) {
    std::string name = "{";
    bool first = true;
    for (Elem a : domain::members(idl.ideals[i])) {
      if (!first) name += ',';
      name += b.name(a);
      first = false;
    }
    names.push_back(name + "}");
    for (std::size_t j = 0; j < m; ++j) leq[i][j] = subset_leq(idl.ideals[i], idl.ideals[j]);
  }
  idl.poset = domain::share(FinPoset::from_table(std::move(names), leq));
  idl.principal.resize(n);
  for (Elem x = 0; x < n; ++x) {
    Subset down = principal_ideal(b, x);
    auto it = std::find(idl.ideals.begin(), idl.ideals.end(), down);
    if (it != idl.ideals.end()) idl.principal[x] = static_cast<Elem>(it - idl.ideals.begin());
  }
  return idl;
}

bool idl_way_below(const FiniteBasis& b, const Subset& i, const Subset& j) {
  for (Elem c : domain::members(j))
    if (subset_leq(i, principal_ideal(b, c))) return true;
  return false;
}

domain::MonoMap principal_embedding(const domain::PosetRef& p, const IdealCompletion& idl) {
  std::vector<Elem> table;
  for (Elem x = 0; x < p->size(); ++x) {
    if (x >= idl.principal.size() || !idl.principal[x])
      throw PosetError("principal ideal of '" + p->name(x) + "' is not an ideal");
    table.push_back(*idl.principal[x]);
  }
  return domain::MonoMap(p, idl.poset, std::move(table));
}

bool is_order_isomorphism(const domain::MonoMap& m) {
  const FinPoset& p = *m.source();
  const FinPoset& q = *m.target();
  if (p.size() != q.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (Elem x = 0; x < p.size(); ++x) {
    if (hit[m(x)]) return false;
    hit[m(x)] = true;
  }
  for (Elem x = 0; x < p.size(); ++x)
    for (Elem y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != q.leq(m(x), m(y))) return false;
  return true;
}

}  // namespace scott::bases
