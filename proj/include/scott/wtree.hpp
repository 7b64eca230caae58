#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// Finitely branching, multi-sorted well-founded trees (indexed W-types with
// finite arities) and their decidable equality.
namespace scott::wtree {

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Constructor {
  std::string label;
  std::string target;
  std::vector<std::string> args;
};

class Signature {
 public:
  // Throws SignatureError on undeclared sorts or duplicate labels.
  Signature(std::vector<std::string> sorts, std::vector<Constructor> constructors);

  const std::vector<std::string>& sorts() const { return sorts_; }
  const std::vector<Constructor>& constructors() const { return constructors_; }
  const Constructor* find(std::string_view label) const;
  bool has_sort(std::string_view sort) const;

 private:
  std::vector<std::string> sorts_;
  std::vector<Constructor> constructors_;
};

struct WTree {
  std::string label;
  std::vector<WTree> children;

  friend bool operator==(const WTree&, const WTree&) = default;
};

WTree leaf(std::string label);
WTree node(std::string label, std::vector<WTree> children);

// Child indices from the root.
using Path = std::vector<std::size_t>;

std::string render_path(const Path& path);

struct SortError {
  Path path;
  std::string message;
};

// Empty when `t` is a well-sorted tree of sort `sort`; otherwise the first
// mismatch in preorder.
std::optional<SortError> validate_tree(const Signature& sig, std::string_view sort,
                                       const WTree& t);

struct Equal {};
struct Unequal {
  Path path;  // first node (preorder) whose labels differ
};
using Decision = std::variant<Equal, Unequal>;

// Throws SignatureError when the trees are not well-sorted at a common sort.
Decision decide_equal(const Signature& sig, const WTree& a, const WTree& b);

inline bool is_equal(const Decision& d) { return std::holds_alternative<Equal>(d); }

std::string render(const WTree& t);

}  // namespace scott::wtree
