#include "scott/scott_model.hpp"

namespace scott::model {

using pcf::Op;

std::optional<std::pair<std::size_t, Nat>> PartialNat::first_defined(
    std::size_t max_fuel) const {
  for (std::size_t k = 0; k <= max_fuel; ++k)
    if (auto v = approx_(k)) return std::make_pair(k, *v);
  return std::nullopt;
}

PartialNat eta(Nat n) {
  return PartialNat([n](std::size_t) { return std::optional<Nat>(n); });
}

PartialNat bottom_pn() {
  return PartialNat([](std::size_t) { return std::optional<Nat>(); });
}

PartialNat kleisli(std::function<PartialNat(Nat)> f, PartialNat x) {
  return PartialNat([f = std::move(f), x = std::move(x)](std::size_t k) -> std::optional<Nat> {
    auto v = x(k);
    if (!v) return std::nullopt;
    return f(*v)(k);
  });
}

Denotation Denotation::base(std::optional<Nat> value) { return Denotation(Type::base(), value); }

Denotation Denotation::function(Type type, Fn fn) {
  return Denotation(std::move(type), std::make_shared<const Fn>(std::move(fn)));
}

Denotation Denotation::bottom(const Type& type) {
  if (type.is_base()) return base(std::nullopt);
  Denotation result = bottom(type.codomain());
  return function(type, [result](const Denotation&) { return result; });
}

Denotation Denotation::operator()(const Denotation& arg) const {
  return (*std::get<std::shared_ptr<const Fn>>(rep_))(arg);
}

namespace {

Denotation lifted(Nat (*fn)(Nat)) {
  return Denotation::function(Type::arrow(Type::base(), Type::base()),
                              [fn](const Denotation& x) {
                                auto v = x.value();
                                return Denotation::base(v ? std::optional<Nat>(fn(*v))
                                                          : std::nullopt);
                              });
}

Nat successor(Nat n) { return n + 1; }
Nat predecessor(Nat n) { return n == 0 ? 0 : n - 1; }

Denotation denote_constant(const Term& t, std::size_t fuel) {
  const Type& type = t.type();
  switch (t.op()) {
    case Op::Zero:
      return Denotation::base(0);
    case Op::Succ:
      return lifted(successor);
    case Op::Pred:
      return lifted(predecessor);
    case Op::Ifz: {
      // λx y. χ_{x,y}^#
      return Denotation::function(type, [type](const Denotation& x) {
        const Type& t1 = type.codomain();
        return Denotation::function(t1, [t1, x](const Denotation& y) {
          return Denotation::function(t1.codomain(), [x, y](const Denotation& n) {
            auto v = n.value();
            if (!v) return Denotation::base(std::nullopt);
            return *v == 0 ? x : y;
          });
        });
      });
    }
    case Op::K:
      return Denotation::function(type, [type](const Denotation& x) {
        return Denotation::function(type.codomain(), [x](const Denotation&) { return x; });
      });
    case Op::S:
      return Denotation::function(type, [type](const Denotation& f) {
        const Type& t1 = type.codomain();
        return Denotation::function(t1, [t1, f](const Denotation& g) {
          return Denotation::function(t1.codomain(),
                                      [f, g](const Denotation& x) { return f(x)(g(x)); });
        });
      });
    case Op::Fix: {
      // f ↦ f^fuel(⊥)
      const Type sigma = t.params()[0];
      return Denotation::function(type, [sigma, fuel](const Denotation& f) {
        Denotation approx = Denotation::bottom(sigma);
        for (std::size_t i = 0; i < fuel; ++i) approx = f(approx);
        return approx;
      });
    }
    case Op::App:
      break;
  }
  throw pcf::TypeError("denote: unexpected application node");
}

}  // namespace

// Terms are closed and well-typed by construction, so every term has a
// denotation.
Denotation denote_at(const Term& t, std::size_t fuel) {
  if (!t.is_app()) return denote_constant(t, fuel);
  Denotation f = denote_at(t.fun(), fuel);
  return f(denote_at(t.arg(), fuel));
}

PartialNat denote(const Term& t) {
  if (!t.type().is_base())
    throw pcf::TypeError("denote: expected a term of type nat, got " + pcf::render(t.type()));
  return PartialNat([t](std::size_t fuel) { return denote_at(t, fuel).value(); });
}

namespace {

DenotationalOutcome scan(const Term& t, std::size_t max_fuel) {
  DenotationalOutcome out;
  if (auto d = denote(t).first_defined(max_fuel)) {
    out.fuel = d->first;
    out.value = d->second;
  }
  return out;
}

}  // namespace

SoundnessReport check_soundness(const Term& s, const Term& t, const Budget& budget) {
  if (!s.type().is_base() || !t.type().is_base())
    throw PreconditionError("check_soundness: terms must have type nat");
  if (!opsem::reduces_star(s, t, budget.steps))
    throw PreconditionError("check_soundness: " + pcf::render(s) + " does not reduce to " +
                            pcf::render(t) + " within " + std::to_string(budget.steps) +
                            " steps");
  SoundnessReport r;
  r.source = scan(s, budget.fuel);
  r.target = scan(t, budget.fuel);
  r.agree = r.source.value == r.target.value;
  return r;
}

AdequacyReport check_adequacy(const Term& t, const Budget& budget) {
  if (!t.type().is_base())
    throw pcf::TypeError("check_adequacy: expected a term of type nat, got " +
                         pcf::render(t.type()));
  AdequacyReport r{opsem::run(t, budget.steps), scan(t, budget.fuel), false};
  if (const auto* d = std::get_if<opsem::Defined>(&r.operational)) {
    r.agree = r.denotational.value == d->value;
  } else if (std::holds_alternative<opsem::OutOfFuel>(r.operational)) {
    r.agree = !r.denotational.value.has_value();
  }
  return r;
}

std::string describe(const opsem::RunResult& r) {
  if (const auto* d = std::get_if<opsem::Defined>(&r))
    return "Defined " + std::to_string(d->value) + " in " + std::to_string(d->steps) +
           (d->steps == 1 ? " step" : " steps");
  if (const auto* o = std::get_if<opsem::OutOfFuel>(&r))
    return "OutOfFuel after " + std::to_string(o->steps) + " steps";
  const auto& s = std::get<opsem::Stuck>(r);
  return "Stuck at " + pcf::render(s.term) + " after " + std::to_string(s.steps) + " steps";
}

std::string describe(const DenotationalOutcome& d, std::size_t max_fuel) {
  if (d.value)
    return "defined at fuel " + std::to_string(*d.fuel) + ": " + std::to_string(*d.value);
  return "undefined ≤ " + std::to_string(max_fuel);
}

}  // namespace scott::model
