#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace scott::domain {

using Elem = std::size_t;

// Membership vector over the elements of a poset.
using Subset = std::vector<bool>;

class PosetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an exhaustive scan would exceed its configured size cap.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FinPoset;
using PosetRef = std::shared_ptr<const FinPoset>;

struct TableHash {
  std::size_t operator()(const std::vector<Elem>& table) const noexcept;
};

// Carrier of an exponential: element i is the monotone map tables[i].
struct FunctionSpace {
  PosetRef source;
  PosetRef target;
  std::vector<std::vector<Elem>> tables;
  std::unordered_map<std::vector<Elem>, Elem, TableHash> index;

  std::optional<Elem> find(const std::vector<Elem>& table) const;
};

// A finite set with a binary relation intended to be a partial order.
//
// Construction does not enforce the poset laws; `validate` reports them.
// Explicit posets keep a dense relation table. Function spaces (exponentials)
// compare pointwise on demand once they are too large to tabulate.
class FinPoset {
 public:
  FinPoset() = default;

  // `leq[a][b]` is the relation a ⊑ b.
  static FinPoset from_table(std::vector<std::string> names,
                             const std::vector<std::vector<bool>>& leq);

  // Reflexive-transitive closure of the generating pairs. Throws PosetError
  // on duplicate names or when the closure is not antisymmetric.
  static FinPoset from_generators(std::vector<std::string> names,
                                  std::span<const std::pair<Elem, Elem>> pairs);

  static FinPoset function_space(std::shared_ptr<const FunctionSpace> space);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  bool leq(Elem a, Elem b) const;
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }

  const std::string& name(Elem e) const { return names_.at(e); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Elem> find(std::string_view name) const;

  // Non-null exactly for exponentials.
  const FunctionSpace* space() const { return space_.get(); }
  const std::shared_ptr<const FunctionSpace>& space_ref() const {
    return space_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::uint8_t> table_;  // size()*size(), row-major; may be empty
  std::shared_ptr<const FunctionSpace> space_;
};

inline PosetRef share(FinPoset p) {
  return std::make_shared<const FinPoset>(std::move(p));
}

Subset empty_subset(const FinPoset& p);
Subset subset_of(const FinPoset& p, std::initializer_list<Elem> elems);
std::vector<Elem> members(const Subset& s);

// Fixtures used throughout the tests and the CLI.
FinPoset chain(std::size_t n);
FinPoset antichain(std::size_t n);
FinPoset diamond();
// Subsets of an n-element set ordered by inclusion; element i is the bitmask i.
FinPoset powerset(std::size_t n);
// ⊥ below n pairwise incomparable points.
FinPoset lift_flat(std::size_t n);

}  // namespace scott::domain
