#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

#include "scott/bases/abstract_basis.hpp"
#include "scott/bases/ideal.hpp"
#include "scott/dinfty.hpp"
#include "scott/domain/maps.hpp"
#include "scott/domain/order.hpp"
#include "scott/domain/text_format.hpp"
#include "scott/dyadic.hpp"
#include "scott/opsem.hpp"
#include "scott/pcf/elaborate.hpp"
#include "scott/scott_model.hpp"

namespace scott::cli {

namespace {

constexpr std::size_t kMaxPropsDepth = 6;
constexpr std::size_t kMaxDumpSize = 4096;

const char* pass(bool ok) { return ok ? "pass" : "fail"; }
const char* boolean(bool b) { return b ? "true" : "false"; }

pcf::Term load_program(const std::string& path) {
  return pcf::parse_program(domain::read_file(path));
}

int pcf_run(const std::string& file, std::size_t fuel, bool trace, std::ostream& out) {
  const pcf::Term t = load_program(file);
  const opsem::RunResult r = opsem::run(t, fuel);
  if (trace) {
    opsem::StepTrace steps{t};
    while (steps.size() <= fuel) {
      auto next = opsem::step(steps.back());
      if (!next) break;
      steps.push_back(*next);
    }
    opsem::write_trace(out, steps);
  }
  out << model::describe(r) << "\n";
  if (std::holds_alternative<opsem::OutOfFuel>(r)) return kOutOfFuel;
  if (std::holds_alternative<opsem::Stuck>(r)) return kStuck;
  return kOk;
}

int pcf_deno(const std::string& file, std::size_t fuel, std::ostream& out) {
  const pcf::Term t = load_program(file);
  auto first = model::denote(t).first_defined(fuel);
  model::DenotationalOutcome d;
  if (first) {
    d.fuel = first->first;
    d.value = first->second;
  }
  out << model::describe(d, fuel) << "\n";
  return kOk;
}

int pcf_adequacy(const std::string& file, std::size_t fuel, std::size_t steps,
                 std::ostream& out) {
  const pcf::Term t = load_program(file);
  const auto report = model::check_adequacy(t, {steps, fuel});
  out << "operational: " << model::describe(report.operational) << "\n";
  out << "denotational: " << model::describe(report.denotational, fuel) << "\n";
  out << "agree: " << boolean(report.agree) << "\n";
  return report.agree ? kOk : kCheckFailed;
}

int dom_check(const std::string& file, std::ostream& out) {
  const domain::FinPoset p = domain::read_poset_file(file);
  const auto violations = domain::validate(p);
  if (!violations.empty()) {
    for (const auto& v : violations) out << "violation: " << domain::describe(p, v) << "\n";
    return kCheckFailed;
  }
  out << "ok\n";
  out << "elements: " << p.size() << "\n";
  auto bottom = domain::least(p);
  out << "bottom: " << (bottom ? p.name(*bottom) : std::string("none")) << "\n";
  out << "lattice: " << boolean(domain::is_lattice(p)) << "\n";
  return kOk;
}

int dom_exp(const std::string& a, const std::string& b, bool dump, std::ostream& out) {
  auto p = domain::share(domain::read_poset_file(a));
  auto q = domain::share(domain::read_poset_file(b));
  const auto exp = domain::exponential(p, q);
  out << "source: " << p->size() << "\n";
  out << "target: " << q->size() << "\n";
  out << "elements: " << exp.poset->size() << "\n";
  if (dump) {
    if (exp.poset->size() > kMaxDumpSize)
      throw std::runtime_error("refusing to dump more than " + std::to_string(kMaxDumpSize) +
                               " elements");
    domain::write_poset(out, *exp.poset);
  }
  return kOk;
}

int dom_lfp(const std::string& poset_file, const std::string& map_file, std::ostream& out) {
  auto p = domain::share(domain::read_poset_file(poset_file));
  const auto f = domain::parse_map(domain::read_file(map_file), p, p);
  const auto fix = domain::lfp(f);
  out << "lfp: " << p->name(fix.value) << "\n";
  out << "iterations: " << fix.iterations << "\n";
  return kOk;
}

int dyadics_props(std::size_t depth, std::ostream& out) {
  if (depth > kMaxPropsDepth)
    throw std::runtime_error("depth " + std::to_string(depth) + " exceeds the limit of " +
                             std::to_string(kMaxPropsDepth));
  using dyadic::Dyadic;
  const auto xs = dyadic::enumerate_depth(depth);
  bool trichotomy = true, density = true, irreflexive = true, transitive = true;
  for (const Dyadic& x : xs) {
    if (dyadic::prec(x, x)) irreflexive = false;
    for (const Dyadic& y : xs) {
      const bool lt = dyadic::prec(x, y), gt = dyadic::prec(y, x), eq = x == y;
      if (lt + gt + eq != 1) trichotomy = false;
      if (lt) {
        const Dyadic z = dyadic::interpolant(x, y);
        if (!dyadic::prec(x, z) || !dyadic::prec(z, y)) density = false;
        for (const Dyadic& w : xs)
          if (dyadic::prec(y, w) && !dyadic::prec(x, w)) transitive = false;
      }
    }
  }
  out << "trichotomy:" << pass(trichotomy) << " density:" << pass(density)
      << " irreflexive:" << pass(irreflexive) << " transitive:" << pass(transitive) << " over "
      << xs.size() << " elements\n";
  return trichotomy && density && irreflexive && transitive ? kOk : kCheckFailed;
}

int idl_wb(const std::string& a, const std::string& b, std::ostream& out) {
  const auto x = dyadic::Dyadic::parse(a);
  const auto y = dyadic::Dyadic::parse(b);
  out << "way-below: " << boolean(dyadic::principal_way_below(x, y)) << "\n";
  return kOk;
}

int idl_check(const std::string& file, std::ostream& out) {
  const auto basis = bases::parse_basis(domain::read_file(file));
  const auto report = bases::check_abstract_basis(basis);
  out << "transitive:" << pass(report.transitive) << " nullary:" << pass(report.nullary)
      << " binary:" << pass(report.binary) << "\n";
  if (!report.ok()) {
    out << "failure: " << report.failure << "\n";
    return kCheckFailed;
  }
  const auto idl = bases::idl_finite(basis);
  out << "ideals: " << idl.ideals.size() << "\n";
  for (domain::Elem i = 0; i < idl.ideals.size(); ++i)
    out << "ideal: " << idl.poset->name(i) << "\n";
  return kOk;
}

struct DinftyOptions {
  std::size_t rank = 2;
  bool verify = false;
  std::optional<std::size_t> dump_level;
  std::string dump_file;
};

int dinfty_build(const DinftyOptions& o, std::ostream& out) {
  const auto t = dinfty::build_tower(o.rank);
  for (std::size_t n = 0; n <= t.rank(); ++n)
    out << "level " << n << ": " << t.level(n)->size() << "\n";
  bool ok = true;
  if (o.verify) {
    const auto report = dinfty::verify_laws(t);
    for (const auto& c : report.checks) {
      out << "law " << c.name << ": " << pass(c.passed) << " checked " << c.checked << "\n";
      if (!c.passed) out << "witness " << c.name << ": " << c.witness << "\n";
    }
    ok = report.all_passed();
    out << "laws: " << pass(ok) << "\n";
  }
  if (o.dump_level) {
    const std::size_t n = *o.dump_level;
    if (n > t.rank())
      throw dinfty::RankError("dump level " + std::to_string(n) + " is beyond rank " +
                              std::to_string(t.rank()));
    const auto& p = *t.level(n);
    if (p.size() > kMaxDumpSize)
      throw std::runtime_error("D_" + std::to_string(n) + " has " + std::to_string(p.size()) +
                               " elements; refusing to dump more than " +
                               std::to_string(kMaxDumpSize));
    if (o.dump_file.empty()) {
      domain::write_poset(out, p);
    } else {
      std::ofstream f(o.dump_file);
      if (!f) throw std::runtime_error("cannot write '" + o.dump_file + "'");
      domain::write_poset(f, p);
      out << "dumped: " << o.dump_file << "\n";
    }
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-rank experiments with Scott domains and PCF", "scott"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string file, second;
  std::size_t fuel = 0, steps = 10'000;
  bool trace = false;

  auto* pcf = app.add_subcommand("pcf", "Run and interpret combinatory PCF programs");
  pcf->require_subcommand(1);
  auto* run_cmd = pcf->add_subcommand("run", "Small-step evaluation");
  run_cmd->add_option("file", file, "Program file")->required();
  run_cmd->add_option("--fuel", fuel, "Step budget")->default_val(10'000);
  run_cmd->add_flag("--trace", trace, "Print every step");
  run_cmd->callback([&] { action = [&] { return pcf_run(file, fuel, trace, out); }; });

  auto* deno_cmd = pcf->add_subcommand("deno", "Scan the denotation over fuels");
  deno_cmd->add_option("file", file, "Program file")->required();
  deno_cmd->add_option("--fuel", fuel, "Largest fuel")->default_val(200);
  deno_cmd->callback([&] { action = [&] { return pcf_deno(file, fuel, out); }; });

  auto* adeq_cmd = pcf->add_subcommand("adequacy", "Compare evaluation with the denotation");
  adeq_cmd->add_option("file", file, "Program file")->required();
  adeq_cmd->add_option("--fuel", fuel, "Largest fuel")->default_val(200);
  adeq_cmd->add_option("--steps", steps, "Step budget")->default_val(10'000);
  adeq_cmd->callback([&] { action = [&] { return pcf_adequacy(file, fuel, steps, out); }; });

  auto* dom = app.add_subcommand("dom", "Finite poset operations");
  dom->require_subcommand(1);
  auto* check_cmd = dom->add_subcommand("check", "Validate a poset file");
  check_cmd->add_option("poset", file, "Poset file")->required();
  check_cmd->callback([&] { action = [&] { return dom_check(file, out); }; });

  bool dump = false;
  auto* exp_cmd = dom->add_subcommand("exp", "Monotone function space A -> B");
  exp_cmd->add_option("A", file, "Source poset file")->required();
  exp_cmd->add_option("B", second, "Target poset file")->required();
  exp_cmd->add_flag("--dump", dump, "Print the function space as a poset file");
  exp_cmd->callback([&] { action = [&] { return dom_exp(file, second, dump, out); }; });

  auto* lfp_cmd = dom->add_subcommand("lfp", "Least fixed point of a monotone endomap");
  lfp_cmd->add_option("poset", file, "Poset file")->required();
  lfp_cmd->add_option("map", second, "Map file")->required();
  lfp_cmd->callback([&] { action = [&] { return dom_lfp(file, second, out); }; });

  std::size_t depth = 4;
  auto* dyadics = app.add_subcommand("dyadics", "The inductive dyadics");
  dyadics->require_subcommand(1);
  auto* props_cmd = dyadics->add_subcommand("props", "Check order properties exhaustively");
  props_cmd->add_option("--depth", depth, "Largest depth")->default_val(4);
  props_cmd->callback([&] { action = [&] { return dyadics_props(depth, out); }; });

  auto* idl = app.add_subcommand("idl", "Abstract bases and ideal completion");
  idl->require_subcommand(1);
  auto* wb_cmd = idl->add_subcommand("wb", "Way-below between principal dyadic ideals");
  wb_cmd->add_option("a", file, "Dyadic such as LRm")->required();
  wb_cmd->add_option("b", second, "Dyadic")->required();
  wb_cmd->callback([&] { action = [&] { return idl_wb(file, second, out); }; });

  auto* basis_cmd = idl->add_subcommand("check", "Check a finite abstract basis");
  basis_cmd->add_option("basis", file, "Basis file")->required();
  basis_cmd->callback([&] { action = [&] { return idl_check(file, out); }; });

  DinftyOptions dopt;
  auto* dinfty = app.add_subcommand("dinfty", "The inverse-limit tower");
  dinfty->require_subcommand(1);
  auto* build_cmd = dinfty->add_subcommand("build", "Build D_0 .. D_rank");
  build_cmd->add_option("--rank", dopt.rank, "Top rank")->default_val(2);
  build_cmd->add_flag("--verify", dopt.verify, "Check the embedding-projection laws");
  build_cmd->add_option("--dump-level", dopt.dump_level, "Write D_n as a poset file");
  build_cmd->add_option("--dump-file", dopt.dump_file, "Destination for --dump-level");
  build_cmd->callback([&] { action = [&] { return dinfty_build(dopt, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    return action ? action() : kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace scott::cli
