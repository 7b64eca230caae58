#include "scott/pcf/syntax.hpp"

#include <algorithm>

namespace scott::pcf {

Type Type::base() { return Type(nullptr); }

Type Type::arrow(Type domain, Type codomain) {
  return Type(std::make_shared<const Node>(Node{std::move(domain), std::move(codomain)}));
}

std::size_t Type::depth() const {
  if (is_base()) return 0;
  return 1 + std::max(domain().depth(), codomain().depth());
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_base() || b.is_base()) return false;
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

Type arrows(std::initializer_list<Type> args, Type result) {
  std::vector<Type> v(args);
  for (auto it = v.rbegin(); it != v.rend(); ++it) result = Type::arrow(*it, result);
  return result;
}

bool type_eq(const Type& a, const Type& b) { return a == b; }

std::string render(const Type& t) {
  if (t.is_base()) return "nat";
  std::string dom = render(t.domain());
  if (t.domain().is_arrow()) dom = "(" + dom + ")";
  return dom + " -> " + render(t.codomain());
}

const char* op_name(Op op) {
  switch (op) {
    case Op::Zero: return "zero";
    case Op::Succ: return "succ";
    case Op::Pred: return "pred";
    case Op::Ifz: return "ifz";
    case Op::K: return "k";
    case Op::S: return "s";
    case Op::Fix: return "fix";
    case Op::App: return "app";
  }
  return "?";
}

namespace {

Type nat() { return Type::base(); }

Type nat_to_nat() { return Type::arrow(nat(), nat()); }

}  // namespace

Term Term::zero() {
  static const Term t(std::make_shared<const Node>(Node{Op::Zero, nat(), {}, nullptr, nullptr}));
  return t;
}

Term Term::succ() {
  static const Term t(
      std::make_shared<const Node>(Node{Op::Succ, nat_to_nat(), {}, nullptr, nullptr}));
  return t;
}

Term Term::pred() {
  static const Term t(
      std::make_shared<const Node>(Node{Op::Pred, nat_to_nat(), {}, nullptr, nullptr}));
  return t;
}

Term Term::ifz() {
  static const Term t(std::make_shared<const Node>(
      Node{Op::Ifz, arrows({nat(), nat(), nat()}, nat()), {}, nullptr, nullptr}));
  return t;
}

Term Term::k(Type sigma, Type tau) {
  Type type = arrows({sigma, tau}, sigma);
  return Term(std::make_shared<const Node>(
      Node{Op::K, std::move(type), {std::move(sigma), std::move(tau)}, nullptr, nullptr}));
}

Term Term::s(Type sigma, Type tau, Type rho) {
  Type type = arrows({arrows({sigma, tau}, rho), Type::arrow(sigma, tau), sigma}, rho);
  return Term(std::make_shared<const Node>(
      Node{Op::S, std::move(type), {std::move(sigma), std::move(tau), std::move(rho)},
           nullptr, nullptr}));
}

Term Term::fix(Type sigma) {
  Type type = Type::arrow(Type::arrow(sigma, sigma), sigma);
  return Term(std::make_shared<const Node>(
      Node{Op::Fix, std::move(type), {std::move(sigma)}, nullptr, nullptr}));
}

Term Term::app(Term fun, Term arg) {
  const Type& ft = fun.type();
  if (!ft.is_arrow())
    throw TypeError("cannot apply a term of type " + render(ft) + "; it is not a function");
  if (!(ft.domain() == arg.type()))
    throw TypeError("argument has type " + render(arg.type()) + " but the function expects " +
                    render(ft.domain()));
  Type result = ft.codomain();
  return Term(std::make_shared<const Node>(
      Node{Op::App, std::move(result), {}, std::make_shared<const Term>(std::move(fun)),
           std::make_shared<const Term>(std::move(arg))}));
}

std::size_t Term::size() const {
  if (!is_app()) return 1;
  return 1 + fun().size() + arg().size();
}

std::size_t Term::depth() const {
  if (!is_app()) return 0;
  return 1 + std::max(fun().depth(), arg().depth());
}

Term apply(Term f, std::initializer_list<Term> args) {
  for (const auto& a : args) f = Term::app(std::move(f), a);
  return f;
}

Term numeral(Nat n) {
  Term t = Term::zero();
  for (Nat i = 0; i < n; ++i) t = Term::app(Term::succ(), std::move(t));
  return t;
}

std::optional<Nat> as_numeral(const Term& t) {
  Nat n = 0;
  const Term* cur = &t;
  while (cur->is_app()) {
    if (cur->fun().op() != Op::Succ) return std::nullopt;
    cur = &cur->arg();
    ++n;
  }
  if (cur->op() != Op::Zero) return std::nullopt;
  return n;
}

bool term_eq(const Term& a, const Term& b) {
  if (a.id() == b.id()) return true;
  if (a.op() != b.op()) return false;
  if (a.is_app()) return term_eq(a.fun(), b.fun()) && term_eq(a.arg(), b.arg());
  const auto& pa = a.params();
  const auto& pb = b.params();
  return pa.size() == pb.size() && std::equal(pa.begin(), pa.end(), pb.begin());
}

namespace {

std::string render_atom(const Term& t);

std::string render_app(const Term& t) {
  if (!t.is_app()) return render_atom(t);
  return render_app(t.fun()) + " " + render_atom(t.arg());
}

std::string render_atom(const Term& t) {
  if (auto n = as_numeral(t); n && *n > 0) return "#" + std::to_string(*n);
  switch (t.op()) {
    case Op::Zero:
    case Op::Succ:
    case Op::Pred:
    case Op::Ifz:
      return op_name(t.op());
    case Op::K:
    case Op::S:
    case Op::Fix:
      return std::string("(") + op_name(t.op()) + " : " + render(t.type()) + ")";
    case Op::App:
      return "(" + render_app(t) + ")";
  }
  return "?";
}

}  // namespace

std::string render(const Term& t) {
  if (auto n = as_numeral(t); n && *n > 0) return "#" + std::to_string(*n);
  return render_app(t);
}

}  // namespace scott::pcf
