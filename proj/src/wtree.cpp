#include "scott/wtree.hpp"

#include <algorithm>
#include <unordered_set>

namespace scott::wtree {

Signature::Signature(std::vector<std::string> sorts,
                     std::vector<Constructor> constructors)
    : sorts_(std::move(sorts)), constructors_(std::move(constructors)) {
  std::unordered_set<std::string> sort_set(sorts_.begin(), sorts_.end());
  if (sort_set.size() != sorts_.size())
    throw SignatureError("duplicate sort identifier");
  std::unordered_set<std::string> labels;
  for (const auto& c : constructors_) {
    if (!labels.insert(c.label).second)
      throw SignatureError("duplicate constructor label '" + c.label + "'");
    if (!sort_set.count(c.target))
      throw SignatureError("constructor '" + c.label +
                           "' targets undeclared sort '" + c.target + "'");
    for (const auto& a : c.args)
      if (!sort_set.count(a))
        throw SignatureError("constructor '" + c.label +
                             "' takes undeclared sort '" + a + "'");
  }
}

const Constructor* Signature::find(std::string_view label) const {
  for (const auto& c : constructors_)
    if (c.label == label) return &c;
  return nullptr;
}

bool Signature::has_sort(std::string_view sort) const {
  return std::find(sorts_.begin(), sorts_.end(), sort) != sorts_.end();
}

WTree leaf(std::string label) { return WTree{std::move(label), {}}; }

WTree node(std::string label, std::vector<WTree> children) {
  return WTree{std::move(label), std::move(children)};
}

std::string render_path(const Path& path) {
  std::string out = "/";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '/';
    out += std::to_string(path[i]);
  }
  return out;
}

namespace {

std::optional<SortError> check(const Signature& sig, std::string_view sort,
                               const WTree& t, Path& path) {
  const Constructor* c = sig.find(t.label);
  if (!c) return SortError{path, "unknown label '" + t.label + "'"};
  if (c->target != sort)
    return SortError{path, "label '" + t.label + "' has sort '" + c->target +
                               "', expected '" + std::string(sort) + "'"};
  if (c->args.size() != t.children.size())
    return SortError{path, "label '" + t.label + "' takes " +
                               std::to_string(c->args.size()) + " children, got " +
                               std::to_string(t.children.size())};
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    path.push_back(i);
    if (auto err = check(sig, c->args[i], t.children[i], path)) return err;
    path.pop_back();
  }
  return std::nullopt;
}

// The children of a constructor form a finite (hence Π-compact) index set,
// so equality of the child families is a finite conjunction of decidable
// equalities.
std::optional<Path> first_difference(const WTree& a, const WTree& b, Path& path) {
  if (a.label != b.label) return path;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    path.push_back(i);
    if (auto d = first_difference(a.children[i], b.children[i], path)) return d;
    path.pop_back();
  }
  return std::nullopt;
}

}  // namespace

std::optional<SortError> validate_tree(const Signature& sig, std::string_view sort,
                                       const WTree& t) {
  if (!sig.has_sort(sort))
    return SortError{{}, "undeclared sort '" + std::string(sort) + "'"};
  Path path;
  return check(sig, sort, t, path);
}

Decision decide_equal(const Signature& sig, const WTree& a, const WTree& b) {
  const Constructor* ca = sig.find(a.label);
  const Constructor* cb = sig.find(b.label);
  if (!ca || !cb) throw SignatureError("tree root has an unknown label");
  if (ca->target != cb->target)
    throw SignatureError("trees have different sorts '" + ca->target +
                         "' and '" + cb->target + "'");
  if (auto err = validate_tree(sig, ca->target, a))
    throw SignatureError("left tree ill-sorted at " + render_path(err->path) +
                         ": " + err->message);
  if (auto err = validate_tree(sig, cb->target, b))
    throw SignatureError("right tree ill-sorted at " + render_path(err->path) +
                         ": " + err->message);
  Path path;
  if (auto d = first_difference(a, b, path)) return Unequal{*d};
  return Equal{};
}

std::string render(const WTree& t) {
  if (t.children.empty()) return t.label;
  std::string out = t.label + "(";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ',';
    out += render(t.children[i]);
  }
  return out + ")";
}

}  // namespace scott::wtree
