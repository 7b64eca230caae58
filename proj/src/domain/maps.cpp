#include "scott/domain/maps.hpp"

#include <functional>

#include "scott/domain/order.hpp"

namespace scott::domain {

bool is_monotone(const FinPoset& source, const FinPoset& target,
                 const std::vector<Elem>& table) {
  const std::size_t n = source.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (x != y && source.leq(x, y) && !target.leq(table[x], table[y]))
        return false;
  return true;
}

MonoMap::MonoMap(PosetRef source, PosetRef target, std::vector<Elem> table)
    : source_(std::move(source)),
      target_(std::move(target)),
      table_(std::move(table)) {
  if (table_.size() != source_->size())
    throw PosetError("map table has " + std::to_string(table_.size()) +
                     " entries, source has " +
                     std::to_string(source_->size()) + " elements");
  for (Elem v : table_)
    if (v >= target_->size()) throw PosetError("map value outside target");
  if (!is_monotone(*source_, *target_, table_))
    throw PosetError("map is not monotone");
}

MonoMap MonoMap::unchecked(PosetRef source, PosetRef target,
                           std::vector<Elem> table) {
  MonoMap m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.table_ = std::move(table);
  return m;
}

MonoMap identity(const PosetRef& p) {
  std::vector<Elem> table(p->size());
  for (Elem x = 0; x < table.size(); ++x) table[x] = x;
  return MonoMap::unchecked(p, p, std::move(table));
}

MonoMap constant(const PosetRef& source, const PosetRef& target, Elem value) {
  if (value >= target->size()) throw PosetError("constant outside target");
  return MonoMap::unchecked(source, target,
                            std::vector<Elem>(source->size(), value));
}

MonoMap compose(const MonoMap& g, const MonoMap& f) {
  if (f.target() != g.source() && f.target()->size() != g.source()->size())
    throw PosetError("compose: codomain of f is not the domain of g");
  std::vector<Elem> table(f.source()->size());
  for (Elem x = 0; x < table.size(); ++x) table[x] = g(f(x));
  return MonoMap::unchecked(f.source(), g.target(), std::move(table));
}

bool pointwise_leq(const MonoMap& f, const MonoMap& g) {
  for (Elem x = 0; x < f.table().size(); ++x)
    if (!f.target()->leq(f(x), g(x))) return false;
  return true;
}

std::vector<std::vector<Elem>> enumerate_monotone_tables(const FinPoset& p,
                                                         const FinPoset& q,
                                                         std::size_t limit) {
  const std::size_t n = p.size();
  const std::size_t m = q.size();
  const auto order = linear_extension(p);
  // below[i]: positions j < i whose element is below order[i]. Elements above
  // order[i] come later in the extension and are checked when assigned.
  std::vector<std::vector<std::size_t>> below(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (p.leq(order[j], order[i])) below[i].push_back(j);

  std::vector<std::vector<Elem>> out;
  std::vector<Elem> values(n, 0);
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == n) {
      if (out.size() >= limit)
        throw LimitExceeded("more than " + std::to_string(limit) +
                            " monotone maps");
      std::vector<Elem> table(n);
      for (std::size_t k = 0; k < n; ++k) table[order[k]] = values[k];
      out.push_back(std::move(table));
      return;
    }
    for (Elem v = 0; v < m; ++v) {
      bool ok = true;
      for (std::size_t j : below[i])
        if (!q.leq(values[j], v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      values[i] = v;
      assign(i + 1);
    }
  };
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  if (m == 0) return out;
  assign(0);
  return out;
}

std::vector<MonoMap> enumerate_monotone_maps(const PosetRef& p,
                                             const PosetRef& q,
                                             std::size_t limit) {
  std::vector<MonoMap> out;
  for (auto& table : enumerate_monotone_tables(*p, *q, limit))
    out.push_back(MonoMap::unchecked(p, q, std::move(table)));
  return out;
}

MonoMap Product::pairing(const MonoMap& f, const MonoMap& g) const {
  if (f.source() != g.source() && f.source()->size() != g.source()->size())
    throw PosetError("pairing: maps have different sources");
  std::vector<Elem> table(f.source()->size());
  for (Elem x = 0; x < table.size(); ++x) table[x] = pair(f(x), g(x));
  return MonoMap::unchecked(f.source(), poset, std::move(table));
}

Product product(const PosetRef& p, const PosetRef& q) {
  const std::size_t n = p->size();
  const std::size_t m = q->size();
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(n * m, std::vector<bool>(n * m, false));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < m; ++b) {
      names.push_back("(" + p->name(a) + "," + q->name(b) + ")");
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < m; ++d)
          leq[a * m + b][c * m + d] = p->leq(a, c) && q->leq(b, d);
    }
  auto poset = share(FinPoset::from_table(std::move(names), leq));
  std::vector<Elem> fst(n * m), snd(n * m);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < m; ++b) {
      fst[a * m + b] = a;
      snd[a * m + b] = b;
    }
  return Product{p, q, poset, MonoMap::unchecked(poset, p, std::move(fst)),
                 MonoMap::unchecked(poset, q, std::move(snd))};
}

MonoMap product_map(const Product& from, const Product& to, const MonoMap& f,
                    const MonoMap& g) {
  const std::size_t m = from.right->size();
  std::vector<Elem> table(from.poset->size());
  for (Elem a = 0; a < from.left->size(); ++a)
    for (Elem b = 0; b < m; ++b) table[a * m + b] = to.pair(f(a), g(b));
  return MonoMap::unchecked(from.poset, to.poset, std::move(table));
}

MonoMap Exponential::at(Elem f) const {
  return MonoMap::unchecked(source(), target(), space().tables.at(f));
}

MonoMap Exponential::eval_map(const Product& fx) const {
  if (fx.left != poset || fx.right != source())
    throw PosetError("eval_map: product must be [p -> q] x p");
  const std::size_t m = source()->size();
  std::vector<Elem> table(fx.poset->size());
  for (Elem f = 0; f < poset->size(); ++f)
    for (Elem x = 0; x < m; ++x) table[f * m + x] = eval(f, x);
  return MonoMap::unchecked(fx.poset, target(), std::move(table));
}

MonoMap Exponential::curry(const Product& ap, const MonoMap& h) const {
  if (ap.right != source() || h.target() != target() ||
      h.source() != ap.poset)
    throw PosetError("curry: h must map a x p -> q");
  std::vector<Elem> table(ap.left->size());
  for (Elem a = 0; a < ap.left->size(); ++a) {
    std::vector<Elem> column(source()->size());
    for (Elem x = 0; x < column.size(); ++x) column[x] = h(ap.pair(a, x));
    auto idx = find(column);
    if (!idx) throw PosetError("curry: h is not monotone in its second argument");
    table[a] = *idx;
  }
  return MonoMap(ap.left, poset, std::move(table));
}

Exponential exponential(const PosetRef& p, const PosetRef& q,
                        std::size_t limit) {
  if (!least(*q)) throw PosetError("exponential: target is not pointed");
  auto space = std::make_shared<FunctionSpace>();
  space->source = p;
  space->target = q;
  space->tables = enumerate_monotone_tables(*p, *q, limit);
  space->index.reserve(space->tables.size());
  for (Elem i = 0; i < space->tables.size(); ++i)
    space->index.emplace(space->tables[i], i);
  return Exponential{share(FinPoset::function_space(std::move(space)))};
}

FixedPoint lfp(const MonoMap& f) {
  const FinPoset& p = *f.source();
  if (f.source() != f.target() && f.source()->size() != f.target()->size())
    throw PosetError("lfp: map is not an endomap");
  auto bottom = least(p);
  if (!bottom) throw PosetError("lfp: poset is not pointed");
  Elem x = *bottom;
  std::size_t iterations = 0;
  for (;;) {
    Elem next = f(x);
    if (next == x) return {x, iterations};
    x = next;
    ++iterations;
    if (iterations > p.size()) throw PosetError("lfp: map is not monotone");
  }
}

bool preserves_directed_sups(const MonoMap& f, std::size_t limit) {
  const FinPoset& p = *f.source();
  const FinPoset& q = *f.target();
  const std::size_t n = p.size();
  if (n > limit) throw LimitExceeded("directed-sup check: source too large");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Subset s(n, false);
    for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
    if (!is_directed(p, s)) continue;
    auto top = sup(p, s);
    if (!top) return false;
    Subset image = empty_subset(q);
    for (Elem x : members(s)) image[f(x)] = true;
    auto image_top = sup(q, image);
    if (!image_top || *image_top != f(*top)) return false;
  }
  return true;
}

}  // namespace scott::domain
