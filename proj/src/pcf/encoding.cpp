#include "scott/pcf/encoding.hpp"

#include <map>
#include <set>

namespace scott::pcf {

const wtree::Signature& type_signature() {
  static const wtree::Signature sig(
      {"type"}, {{"iota", "type", {}}, {"arrow", "type", {"type", "type"}}});
  return sig;
}

wtree::WTree encode(const Type& t) {
  if (t.is_base()) return wtree::leaf("iota");
  return wtree::node("arrow", {encode(t.domain()), encode(t.codomain())});
}

std::string sort_of(const Type& t) { return render(t); }

namespace {

std::string label_of(const Term& t) {
  switch (t.op()) {
    case Op::Zero:
    case Op::Succ:
    case Op::Pred:
    case Op::Ifz:
      return op_name(t.op());
    case Op::K:
    case Op::S:
    case Op::Fix: {
      std::string label = std::string(op_name(t.op())) + "[";
      for (std::size_t i = 0; i < t.params().size(); ++i) {
        if (i) label += ',';
        label += render(t.params()[i]);
      }
      return label + "]";
    }
    case Op::App:
      return "app[" + render(t.arg().type()) + "," + render(t.type()) + "]";
  }
  return "?";
}

void collect(const Term& t, std::map<std::string, wtree::Constructor>& ctors,
             std::set<std::string>& sorts) {
  std::string label = label_of(t);
  sorts.insert(sort_of(t.type()));
  if (ctors.count(label) == 0) {
    wtree::Constructor c{label, sort_of(t.type()), {}};
    if (t.is_app()) {
      c.args = {sort_of(t.fun().type()), sort_of(t.arg().type())};
      sorts.insert(c.args.begin(), c.args.end());
    }
    ctors.emplace(label, std::move(c));
  }
  if (t.is_app()) {
    collect(t.fun(), ctors, sorts);
    collect(t.arg(), ctors, sorts);
  }
}

}  // namespace

wtree::Signature term_signature(std::span<const Term> terms) {
  std::map<std::string, wtree::Constructor> ctors;
  std::set<std::string> sorts;
  for (const auto& t : terms) collect(t, ctors, sorts);
  std::vector<wtree::Constructor> list;
  for (auto& [label, c] : ctors) list.push_back(std::move(c));
  return wtree::Signature({sorts.begin(), sorts.end()}, std::move(list));
}

wtree::WTree encode(const Term& t) {
  if (!t.is_app()) return wtree::leaf(label_of(t));
  return wtree::node(label_of(t), {encode(t.fun()), encode(t.arg())});
}

}  // namespace scott::pcf
