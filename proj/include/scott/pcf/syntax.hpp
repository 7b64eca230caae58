#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Combinatory PCF: types ι and σ ⇒ τ, and the constants zero, succ, pred,
// ifz, k_{σ,τ}, s_{σ,τ,ρ}, fix_σ closed under application.
namespace scott::pcf {

using Nat = std::uint64_t;

class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Type {
 public:
  static Type base();
  static Type arrow(Type domain, Type codomain);

  bool is_base() const { return node_ == nullptr; }
  bool is_arrow() const { return node_ != nullptr; }
  // Precondition: is_arrow().
  const Type& domain() const;
  const Type& codomain() const;

  std::size_t depth() const;

  friend bool operator==(const Type& a, const Type& b);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;  // null for ι
};

struct Type::Node {
  Type domain;
  Type codomain;
};

inline const Type& Type::domain() const { return node_->domain; }
inline const Type& Type::codomain() const { return node_->codomain; }

// σ1 ⇒ σ2 ⇒ ... ⇒ result
Type arrows(std::initializer_list<Type> args, Type result);

bool type_eq(const Type& a, const Type& b);
std::string render(const Type& t);

enum class Op { Zero, Succ, Pred, Ifz, K, S, Fix, App };

const char* op_name(Op op);

// An elaborated term. Every Term carries its PCF type, and construction
// rejects ill-typed applications, so a Term is well-typed by construction.
class Term {
 public:
  static Term zero();
  static Term succ();
  static Term pred();
  static Term ifz();
  static Term k(Type sigma, Type tau);
  static Term s(Type sigma, Type tau, Type rho);
  static Term fix(Type sigma);
  // Throws TypeError unless type(fun) = type(arg) ⇒ τ.
  static Term app(Term fun, Term arg);

  Op op() const { return node_->op; }
  const Type& type() const { return node_->type; }
  // Type subscripts of k, s and fix; empty for the other constants.
  const std::vector<Type>& params() const { return node_->params; }
  // Precondition: op() == Op::App.
  const Term& fun() const { return *node_->fun; }
  const Term& arg() const { return *node_->arg; }

  bool is_app() const { return op() == Op::App; }
  // Node identity; equal pointers imply equal terms.
  const void* id() const { return node_.get(); }

  std::size_t size() const;
  std::size_t depth() const;

 private:
  struct Node {
    Op op;
    Type type;
    std::vector<Type> params;
    std::shared_ptr<const Term> fun;
    std::shared_ptr<const Term> arg;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Left-nested application f a1 a2 ... an.
Term apply(Term f, std::initializer_list<Term> args);

Term numeral(Nat n);
std::optional<Nat> as_numeral(const Term& t);

bool term_eq(const Term& a, const Term& b);

// Concrete syntax that parses and elaborates back to an equal term: k, s
// and fix carry type ascriptions; zero/succ/pred/ifz are monomorphic.
std::string render(const Term& t);

}  // namespace scott::pcf
