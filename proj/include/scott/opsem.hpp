#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

#include "scott/pcf/syntax.hpp"

// Small-step operational semantics of combinatory PCF and decision
// procedures for its (k-step) reflexive transitive closure.
namespace scott::opsem {

using pcf::Nat;
using pcf::Term;

// t_0 ▷ t_1 ▷ ... ▷ t_j
using StepTrace = std::vector<Term>;

// The unique t' with t ▷ t', if any rule applies.
std::optional<Term> step(const Term& t);

enum class Rule {
  PredZero,   // pred 0 ▷ 0
  PredSucc,   // pred (n+1) ▷ n
  IfzZero,    // ifz s t 0 ▷ s
  IfzSucc,    // ifz s t (n+1) ▷ t
  K,          // k s t ▷ s
  S,          // s f g t ▷ f t (g t)
  Fix,        // fix f ▷ f (fix f)
  AppFun,     // f ▷ g  ⟹  f t ▷ g t
  SuccArg,    // s ▷ t  ⟹  succ s ▷ succ t
  PredArg,    // s ▷ t  ⟹  pred s ▷ pred t
  IfzArg,     // r ▷ r' ⟹  ifz s t r ▷ ifz s t r'
};

const char* rule_name(Rule r);

struct Derivation {
  Rule rule;  // last rule of the derivation
  Term result;
};

// Every derivation of t ▷ _ found by matching each rule independently
// (no rule priority). Single-valuedness means this has at most one entry.
std::vector<Derivation> derivations(const Term& t);

// Throws pcf::TypeError when the terms have different types.
bool steps_to(const Term& s, const Term& t);

// x R_0 y iff x = y; x R_{k+1} y iff x ▷ z and z R_k y.
bool k_step_exact(const Term& s, const Term& t, std::size_t k);

struct ReachResult {
  bool reached = false;
  // s = t_0 ▷ ... ▷ t_j; ends at t when reached.
  StepTrace trace;
};

// ∃ j ≤ k. k_step_exact(s, t, j)
ReachResult k_step_at_most(const Term& s, const Term& t, std::size_t k);

// Semidecision of s ▷* t: true is definitive; false means "not within budget".
bool reduces_star(const Term& s, const Term& t, std::size_t budget);

struct Defined {
  Nat value;
  std::size_t steps;
  StepTrace trace;
};
struct OutOfFuel {
  std::size_t steps;
};
struct Stuck {
  Term term;
  std::size_t steps;
};
using RunResult = std::variant<Defined, OutOfFuel, Stuck>;

// Steps a closed base-type term until it is a numeral, no rule applies, or
// `fuel` steps have been taken. Throws pcf::TypeError on non-base input.
RunResult run(const Term& t, std::size_t fuel);

// p(fuel) holds iff run(t, fuel) is Defined; monotone in fuel.
std::function<bool(std::size_t)> semidecide_defined(const Term& t);

// One term per line, each prefixed by its step index.
void write_trace(std::ostream& out, const StepTrace& trace);

}  // namespace scott::opsem
