#include "scott/opsem.hpp"

#include <ostream>

namespace scott::opsem {

using pcf::Op;

namespace {

bool is_const(const Term& t, Op op) { return !t.is_app() && t.op() == op; }

// t = app(app(c, x), y) for the constant c
bool is_binary(const Term& t, Op c) {
  return t.is_app() && t.fun().is_app() && is_const(t.fun().fun(), c);
}

// pred n ▷ n-1, with pred 0 ▷ 0
std::optional<Term> pred_redex(const Term& arg) {
  auto n = pcf::as_numeral(arg);
  if (!n) return std::nullopt;
  return *n == 0 ? arg : arg.arg();
}

}  // namespace

// Redex rules first, then congruences in the order succ, pred, ifz, function
// position. On well-typed terms at most one rule applies, so the order only
// matters for failure paths.
std::optional<Term> step(const Term& t) {
  if (!t.is_app()) return std::nullopt;
  const Term& f = t.fun();
  const Term& a = t.arg();

  if (is_const(f, Op::Pred))
    if (auto r = pred_redex(a)) return r;
  if (is_binary(f, Op::Ifz))
    if (auto n = pcf::as_numeral(a)) return *n == 0 ? f.fun().arg() : f.arg();
  if (f.is_app() && is_const(f.fun(), Op::K)) return f.arg();
  if (is_binary(f, Op::S)) {
    const Term& ff = f.fun().arg();
    const Term& g = f.arg();
    return Term::app(Term::app(ff, a), Term::app(g, a));
  }
  if (is_const(f, Op::Fix)) return Term::app(a, t);

  if (is_const(f, Op::Succ))
    if (auto r = step(a)) return Term::app(f, *r);
  if (is_const(f, Op::Pred))
    if (auto r = step(a)) return Term::app(f, *r);
  if (is_binary(f, Op::Ifz))
    if (auto r = step(a)) return Term::app(f, *r);
  if (auto r = step(f)) return Term::app(*r, a);
  return std::nullopt;
}

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::PredZero: return "pred-zero";
    case Rule::PredSucc: return "pred-succ";
    case Rule::IfzZero: return "ifz-zero";
    case Rule::IfzSucc: return "ifz-succ";
    case Rule::K: return "k";
    case Rule::S: return "s";
    case Rule::Fix: return "fix";
    case Rule::AppFun: return "app-fun";
    case Rule::SuccArg: return "succ-arg";
    case Rule::PredArg: return "pred-arg";
    case Rule::IfzArg: return "ifz-arg";
  }
  return "?";
}

std::vector<Derivation> derivations(const Term& t) {
  std::vector<Derivation> out;
  if (!t.is_app()) return out;
  const Term& f = t.fun();
  const Term& a = t.arg();
  auto n = pcf::as_numeral(a);

  if (is_const(f, Op::Pred) && n && *n == 0) out.push_back({Rule::PredZero, a});
  if (is_const(f, Op::Pred) && n && *n > 0) out.push_back({Rule::PredSucc, a.arg()});
  if (is_binary(f, Op::Ifz) && n && *n == 0) out.push_back({Rule::IfzZero, f.fun().arg()});
  if (is_binary(f, Op::Ifz) && n && *n > 0) out.push_back({Rule::IfzSucc, f.arg()});
  if (f.is_app() && is_const(f.fun(), Op::K)) out.push_back({Rule::K, f.arg()});
  if (is_binary(f, Op::S))
    out.push_back({Rule::S, Term::app(Term::app(f.fun().arg(), a), Term::app(f.arg(), a))});
  if (is_const(f, Op::Fix)) out.push_back({Rule::Fix, Term::app(a, t)});

  for (const auto& d : derivations(f)) out.push_back({Rule::AppFun, Term::app(d.result, a)});
  if (is_const(f, Op::Succ))
    for (const auto& d : derivations(a)) out.push_back({Rule::SuccArg, Term::app(f, d.result)});
  if (is_const(f, Op::Pred))
    for (const auto& d : derivations(a)) out.push_back({Rule::PredArg, Term::app(f, d.result)});
  if (is_binary(f, Op::Ifz))
    for (const auto& d : derivations(a)) out.push_back({Rule::IfzArg, Term::app(f, d.result)});
  return out;
}

bool steps_to(const Term& s, const Term& t) {
  if (!(s.type() == t.type()))
    throw pcf::TypeError("steps_to: terms have types " + pcf::render(s.type()) + " and " +
                         pcf::render(t.type()));
  auto next = step(s);
  return next && pcf::term_eq(*next, t);
}

bool k_step_exact(const Term& s, const Term& t, std::size_t k) {
  Term cur = s;
  for (std::size_t i = 0; i < k; ++i) {
    auto next = step(cur);
    if (!next) return false;
    cur = std::move(*next);
  }
  return pcf::term_eq(cur, t);
}

ReachResult k_step_at_most(const Term& s, const Term& t, std::size_t k) {
  ReachResult r;
  r.trace.push_back(s);
  for (std::size_t j = 0;; ++j) {
    if (pcf::term_eq(r.trace.back(), t)) {
      r.reached = true;
      return r;
    }
    if (j == k) return r;
    auto next = step(r.trace.back());
    if (!next) return r;
    r.trace.push_back(std::move(*next));
  }
}

bool reduces_star(const Term& s, const Term& t, std::size_t budget) {
  return k_step_at_most(s, t, budget).reached;
}

RunResult run(const Term& t, std::size_t fuel) {
  if (!t.type().is_base())
    throw pcf::TypeError("run: expected a term of type nat, got " + pcf::render(t.type()));
  StepTrace trace{t};
  for (std::size_t steps = 0;; ++steps) {
    const Term& cur = trace.back();
    if (auto n = pcf::as_numeral(cur)) return Defined{*n, steps, std::move(trace)};
    if (steps == fuel) return OutOfFuel{steps};
    auto next = step(cur);
    if (!next) return Stuck{cur, steps};
    trace.push_back(std::move(*next));
  }
}

std::function<bool(std::size_t)> semidecide_defined(const Term& t) {
  if (!t.type().is_base())
    throw pcf::TypeError("semidecide_defined: expected a term of type nat");
  return [t](std::size_t fuel) { return std::holds_alternative<Defined>(run(t, fuel)); };
}

void write_trace(std::ostream& out, const StepTrace& trace) {
  for (std::size_t i = 0; i < trace.size(); ++i)
    out << i << ": " << pcf::render(trace[i]) << '\n';
}

}  // namespace scott::opsem
