#include "scott/domain/poset.hpp"

#include <algorithm>
#include <unordered_set>

#include "scott/domain/order.hpp"

namespace scott::domain {

namespace {

// Dense tables above this size would dominate memory (|D_3| is ~1.2e5).
constexpr std::size_t kDenseLimit = 4096;

}  // namespace

std::size_t TableHash::operator()(const std::vector<Elem>& table) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Elem e : table) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<Elem> FunctionSpace::find(const std::vector<Elem>& table) const {
  auto it = index.find(table);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

FinPoset FinPoset::from_table(std::vector<std::string> names,
                              const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = names.size();
  if (leq.size() != n) throw PosetError("relation table has wrong row count");
  FinPoset p;
  p.names_ = std::move(names);
  p.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (leq[a].size() != n) throw PosetError("relation table row has wrong size");
    for (std::size_t b = 0; b < n; ++b) p.table_[a * n + b] = leq[a][b] ? 1 : 0;
  }
  return p;
}

FinPoset FinPoset::from_generators(
    std::vector<std::string> names,
    std::span<const std::pair<Elem, Elem>> pairs) {
  const std::size_t n = names.size();
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) {
      throw PosetError("duplicate element '" + name + "'");
    }
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) leq[a][a] = true;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw PosetError("generating pair out of range");
    leq[a][b] = true;
  }
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (leq[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (leq[k][b]) leq[a][b] = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (leq[a][b] && leq[b][a]) {
        throw PosetError("antisymmetry violated: '" + names[a] + "' and '" +
                         names[b] + "' are mutually below each other");
      }
  return from_table(std::move(names), leq);
}

FinPoset FinPoset::function_space(std::shared_ptr<const FunctionSpace> space) {
  FinPoset p;
  const FinPoset& target = *space->target;
  p.names_.reserve(space->tables.size());
  for (const auto& table : space->tables) {
    std::string name = "[";
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (i) name += ',';
      name += std::to_string(table[i]);
    }
    name += ']';
    p.names_.push_back(std::move(name));
  }
  const std::size_t n = p.names_.size();
  if (n <= kDenseLimit) {
    p.table_.assign(n * n, 0);
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t g = 0; g < n; ++g) {
        const auto& tf = space->tables[f];
        const auto& tg = space->tables[g];
        bool below = true;
        for (std::size_t x = 0; x < tf.size() && below; ++x)
          below = target.leq(tf[x], tg[x]);
        p.table_[f * n + g] = below ? 1 : 0;
      }
  }
  p.space_ = std::move(space);
  return p;
}

bool FinPoset::leq(Elem a, Elem b) const {
  const std::size_t n = size();
  if (!table_.empty()) return table_[a * n + b] != 0;
  const auto& tf = space_->tables[a];
  const auto& tg = space_->tables[b];
  for (std::size_t x = 0; x < tf.size(); ++x)
    if (!space_->target->leq(tf[x], tg[x])) return false;
  return true;
}

std::optional<Elem> FinPoset::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Elem>(it - names_.begin());
}

Subset empty_subset(const FinPoset& p) { return Subset(p.size(), false); }

Subset subset_of(const FinPoset& p, std::initializer_list<Elem> elems) {
  Subset s = empty_subset(p);
  for (Elem e : elems) s.at(e) = true;
  return s;
}

std::vector<Elem> members(const Subset& s) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) out.push_back(i);
  return out;
}

FinPoset chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
  }
  return FinPoset::from_table(std::move(names), leq);
}

FinPoset antichain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("a" + std::to_string(i));
    leq[i][i] = true;
  }
  return FinPoset::from_table(std::move(names), leq);
}

FinPoset diamond() {
  const std::vector<std::pair<Elem, Elem>> pairs = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return FinPoset::from_generators({"bot", "l", "r", "top"}, pairs);
}

FinPoset powerset(std::size_t n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t a = 0; a < size; ++a) {
    std::string name = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
      if (a & (std::size_t{1} << i)) {
        if (!first) name += ',';
        name += static_cast<char>('a' + i);
        first = false;
      }
    names.push_back(name + "}");
    for (std::size_t b = 0; b < size; ++b) leq[a][b] = (a & ~b) == 0;
  }
  return FinPoset::from_table(std::move(names), leq);
}

FinPoset lift_flat(std::size_t n) {
  std::vector<std::string> names = {"bot"};
  std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1, false));
  for (std::size_t i = 0; i <= n; ++i) {
    leq[0][i] = true;
    leq[i][i] = true;
    if (i > 0) names.push_back("v" + std::to_string(i - 1));
  }
  return FinPoset::from_table(std::move(names), leq);
}

}  // namespace scott::domain
