#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "scott/opsem.hpp"
#include "scott/pcf/syntax.hpp"

// Fuel-indexed reading of the Scott model of PCF.
//
// A partial natural number is observed through approximants: at fuel k it
// is either some value or still undefined, and once defined it stays defined
// with the same value as the fuel grows. Every fix occurrence is unrolled
// k times from ⊥ at fuel k; the true denotation is the supremum over k.
namespace scott::model {

using pcf::Nat;
using pcf::Term;
using pcf::Type;

class PartialNat {
 public:
  using Approximant = std::function<std::optional<Nat>(std::size_t)>;

  explicit PartialNat(Approximant approx) : approx_(std::move(approx)) {}

  std::optional<Nat> operator()(std::size_t fuel) const { return approx_(fuel); }

  // The first fuel ≤ max_fuel at which the value is defined.
  std::optional<std::pair<std::size_t, Nat>> first_defined(std::size_t max_fuel) const;

 private:
  Approximant approx_;
};

PartialNat eta(Nat n);
PartialNat bottom_pn();
// f^#(x): result(k) = f(v)(k) when x(k) = v, undefined otherwise.
PartialNat kleisli(std::function<PartialNat(Nat)> f, PartialNat x);

// ⟦σ⟧ at one fuel: a possibly-undefined natural at ι, a function value at
// arrow types. Function values are intensional and never compared.
class Denotation {
 public:
  using Fn = std::function<Denotation(const Denotation&)>;

  static Denotation base(std::optional<Nat> value);
  static Denotation function(Type type, Fn fn);
  // ⊥_ι = undefined; ⊥_{σ⇒τ} = λx.⊥_τ
  static Denotation bottom(const Type& type);

  const Type& type() const { return type_; }
  bool is_base() const { return type_.is_base(); }
  // Precondition: is_base().
  std::optional<Nat> value() const { return std::get<std::optional<Nat>>(rep_); }
  // Precondition: !is_base().
  Denotation operator()(const Denotation& arg) const;

 private:
  Denotation(Type type, std::variant<std::optional<Nat>, std::shared_ptr<const Fn>> rep)
      : type_(std::move(type)), rep_(std::move(rep)) {}
  Type type_;
  std::variant<std::optional<Nat>, std::shared_ptr<const Fn>> rep_;
};

Denotation denote_at(const Term& t, std::size_t fuel);

// k ↦ value of denote_at(t, k). Throws pcf::TypeError unless t : ι.
PartialNat denote(const Term& t);

struct Budget {
  std::size_t steps = 10'000;
  std::size_t fuel = 200;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DenotationalOutcome {
  std::optional<std::size_t> fuel;  // first fuel at which defined
  std::optional<Nat> value;
};

struct SoundnessReport {
  DenotationalOutcome source;
  DenotationalOutcome target;
  bool agree = false;
};

// For s ▷* t (checked within budget.steps, else PreconditionError), scans
// both denotations over fuels 0..budget.fuel. They agree when both stay
// undefined or both become defined with equal values.
SoundnessReport check_soundness(const Term& s, const Term& t, const Budget& budget = {});

struct AdequacyReport {
  opsem::RunResult operational;
  DenotationalOutcome denotational;
  bool agree = false;
};

AdequacyReport check_adequacy(const Term& t, const Budget& budget = {});

std::string describe(const opsem::RunResult& r);
std::string describe(const DenotationalOutcome& d, std::size_t max_fuel);

}  // namespace scott::model
