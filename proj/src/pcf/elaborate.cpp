#include "scott/pcf/elaborate.hpp"

#include <vector>

namespace scott::pcf {

AmbiguityError::AmbiguityError(SourcePos pos, const std::string& message)
    : TypeError(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos) {}

namespace {

using MetaId = std::size_t;

// Monotypes with metavariables, stored in an arena.
class Unifier {
 public:
  MetaId fresh() { return add({Kind::Var, 0, 0}); }
  MetaId base() { return add({Kind::Base, 0, 0}); }
  MetaId arrow(MetaId a, MetaId b) { return add({Kind::Arrow, a, b}); }

  MetaId from_type(const Type& t) {
    if (t.is_base()) return base();
    MetaId d = from_type(t.domain());
    return arrow(d, from_type(t.codomain()));
  }

  void unify(MetaId a, MetaId b, SourcePos pos) {
    a = resolve(a);
    b = resolve(b);
    if (a == b) return;
    const Node na = nodes_[a];
    const Node nb = nodes_[b];
    if (na.kind == Kind::Var) return bind_var(a, b, pos);
    if (nb.kind == Kind::Var) return bind_var(b, a, pos);
    if (na.kind == Kind::Base && nb.kind == Kind::Base) return;
    if (na.kind == Kind::Arrow && nb.kind == Kind::Arrow) {
      unify(na.left, nb.left, pos);
      unify(na.right, nb.right, pos);
      return;
    }
    throw mismatch(a, b, pos);
  }

  // nullopt while some metavariable inside is unbound, unless defaulting.
  std::optional<Type> to_type(MetaId n, bool default_to_base) {
    n = resolve(n);
    const Node node = nodes_[n];
    switch (node.kind) {
      case Kind::Base:
        return Type::base();
      case Kind::Var:
        if (!default_to_base) return std::nullopt;
        bind_[n] = base();
        return Type::base();
      case Kind::Arrow: {
        auto d = to_type(node.left, default_to_base);
        if (!d) return std::nullopt;
        auto c = to_type(node.right, default_to_base);
        if (!c) return std::nullopt;
        return Type::arrow(*d, *c);
      }
    }
    return std::nullopt;
  }

  std::string show(MetaId n) {
    n = resolve(n);
    const Node node = nodes_[n];
    switch (node.kind) {
      case Kind::Base:
        return "nat";
      case Kind::Var:
        return "?" + std::to_string(n);
      case Kind::Arrow: {
        std::string d = show(node.left);
        if (nodes_[resolve(node.left)].kind == Kind::Arrow) d = "(" + d + ")";
        return d + " -> " + show(node.right);
      }
    }
    return "?";
  }

 private:
  enum class Kind { Base, Arrow, Var };
  struct Node {
    Kind kind;
    MetaId left;
    MetaId right;
  };

  MetaId add(Node n) {
    nodes_.push_back(n);
    bind_.push_back(kUnbound);
    return nodes_.size() - 1;
  }

  MetaId resolve(MetaId n) {
    while (nodes_[n].kind == Kind::Var && bind_[n] != kUnbound) n = bind_[n];
    return n;
  }

  bool occurs(MetaId var, MetaId n) {
    n = resolve(n);
    if (n == var) return true;
    const Node node = nodes_[n];
    return node.kind == Kind::Arrow && (occurs(var, node.left) || occurs(var, node.right));
  }

  void bind_var(MetaId var, MetaId to, SourcePos pos) {
    if (occurs(var, to)) {
      throw TypeError(std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                      ": type mismatch: " + show(var) + " vs " + show(to) +
                      " (would need an infinite type)");
    }
    bind_[var] = to;
  }

  TypeError mismatch(MetaId a, MetaId b, SourcePos pos) {
    return TypeError(std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                     ": type mismatch: " + show(a) + " vs " + show(b));
  }

  static constexpr MetaId kUnbound = static_cast<MetaId>(-1);
  std::vector<Node> nodes_;
  std::vector<MetaId> bind_;
};

// Term skeleton awaiting its type parameters.
struct Pending {
  Op op;
  std::vector<MetaId> params;
  std::unique_ptr<Pending> fun;
  std::unique_ptr<Pending> arg;
  SourcePos pos;
};

class Elaborator {
 public:
  explicit Elaborator(bool default_to_base) : default_to_base_(default_to_base) {}

  MetaId infer(const RawTerm& raw, std::unique_ptr<Pending>& out) {
    switch (raw.kind) {
      case RawTerm::Kind::Ascribe: {
        MetaId t = infer(*raw.arg, out);
        u_.unify(t, u_.from_type(*raw.ascription), raw.pos);
        return t;
      }
      case RawTerm::Kind::App: {
        out = std::make_unique<Pending>();
        out->op = Op::App;
        out->pos = raw.pos;
        MetaId f = infer(*raw.fun, out->fun);
        MetaId a = infer(*raw.arg, out->arg);
        MetaId r = u_.fresh();
        u_.unify(f, u_.arrow(a, r), raw.arg->pos);
        return r;
      }
      case RawTerm::Kind::Const:
        break;
    }
    out = std::make_unique<Pending>();
    out->op = raw.constant;
    out->pos = raw.pos;
    auto nat = [&] { return u_.base(); };
    switch (raw.constant) {
      case Op::Zero:
        return nat();
      case Op::Succ:
      case Op::Pred:
        return u_.arrow(nat(), nat());
      case Op::Ifz:
        return u_.arrow(nat(), u_.arrow(nat(), u_.arrow(nat(), nat())));
      case Op::K: {
        MetaId s = u_.fresh(), t = u_.fresh();
        out->params = {s, t};
        return u_.arrow(s, u_.arrow(t, s));
      }
      case Op::S: {
        MetaId s = u_.fresh(), t = u_.fresh(), r = u_.fresh();
        out->params = {s, t, r};
        MetaId f = u_.arrow(s, u_.arrow(t, r));
        MetaId g = u_.arrow(s, t);
        return u_.arrow(f, u_.arrow(g, u_.arrow(s, r)));
      }
      case Op::Fix: {
        MetaId s = u_.fresh();
        out->params = {s};
        return u_.arrow(u_.arrow(s, s), s);
      }
      case Op::App:
        break;
    }
    throw TypeError("malformed raw term");
  }

  Term build(const Pending& p) {
    if (p.op == Op::App) {
      Term f = build(*p.fun);
      return Term::app(std::move(f), build(*p.arg));
    }
    std::vector<Type> params;
    for (MetaId m : p.params) {
      auto t = u_.to_type(m, default_to_base_);
      if (!t) {
        throw AmbiguityError(p.pos, std::string("ambiguous type for `") + op_name(p.op) +
                                        "`: parameter " + u_.show(m) +
                                        " is undetermined; add an ascription");
      }
      params.push_back(*t);
    }
    switch (p.op) {
      case Op::Zero: return Term::zero();
      case Op::Succ: return Term::succ();
      case Op::Pred: return Term::pred();
      case Op::Ifz: return Term::ifz();
      case Op::K: return Term::k(params[0], params[1]);
      case Op::S: return Term::s(params[0], params[1], params[2]);
      case Op::Fix: return Term::fix(params[0]);
      case Op::App: break;
    }
    throw TypeError("malformed pending term");
  }

  Unifier& unifier() { return u_; }

 private:
  Unifier u_;
  bool default_to_base_;
};

}  // namespace

Term elaborate(const RawTerm& raw, const ElabOptions& options) {
  Elaborator e(options.default_to_base);
  std::unique_ptr<Pending> pending;
  MetaId root = e.infer(raw, pending);
  if (options.expected) e.unifier().unify(root, e.unifier().from_type(*options.expected), raw.pos);
  return e.build(*pending);
}

Term parse_term(std::string_view source, const ElabOptions& options) {
  return elaborate(*parse(source), options);
}

Term parse_program(std::string_view source) {
  return parse_term(source, ElabOptions{Type::base(), true});
}

}  // namespace scott::pcf
