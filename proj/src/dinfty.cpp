#include "scott/dinfty.hpp"

#include <cstdlib>
#include <random>

#include "scott/domain/order.hpp"

namespace scott::dinfty {

using domain::FinPoset;

std::size_t rank_cap_from_env() {
  const char* env = std::getenv("SCOTT_RANK_CAP");
  if (!env || !*env) return kDefaultRankCap;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0') throw RankError(std::string("SCOTT_RANK_CAP is not a number: ") + env);
  return static_cast<std::size_t>(v);
}

const domain::Exponential& Tower::exponential(std::size_t n) const {
  if (n == 0) throw RankError("D_0 is not an exponential");
  return exps_.at(n - 1);
}

void Tower::set_projection(std::size_t n, MonoMap pi) {
  if (pi.source() != levels_.at(n + 1) || pi.target() != levels_.at(n))
    throw RankError("projection must map D_{n+1} to D_n");
  pi_.at(n) = std::move(pi);
}

Tower build_tower(std::size_t rank, std::optional<std::size_t> cap) {
  const std::size_t limit = cap ? *cap : rank_cap_from_env();
  if (rank > limit)
    throw RankError("rank " + std::to_string(rank) + " exceeds the rank cap " +
                    std::to_string(limit) + " (set SCOTT_RANK_CAP to raise it)");
  Tower t;
  const std::vector<std::pair<Elem, Elem>> sierpinski = {{0, 1}};
  t.levels_.push_back(domain::share(FinPoset::from_generators({"bot", "top"}, sierpinski)));
  t.bottoms_.push_back(0);

  for (std::size_t n = 1; n <= rank; ++n) {
    t.exps_.push_back(domain::exponential(t.levels_[n - 1], t.levels_[n - 1]));
    const auto& exp = t.exps_.back();
    t.levels_.push_back(exp.poset);
    std::vector<Elem> const_bottom(t.levels_[n - 1]->size(), t.bottoms_[n - 1]);
    t.bottoms_.push_back(exp.find(const_bottom).value());
  }

  for (std::size_t n = 0; n < rank; ++n) {
    const PosetRef& lo = t.levels_[n];
    const PosetRef& hi = t.levels_[n + 1];
    const auto& hi_exp = t.exps_[n];
    std::vector<Elem> eps(lo->size());
    std::vector<Elem> pi(hi->size());
    if (n == 0) {
      // ε_0(x) = λ_.x ; π_0(f) = f(⊥)
      for (Elem x = 0; x < lo->size(); ++x)
        eps[x] = hi_exp.find(std::vector<Elem>(lo->size(), x)).value();
      for (Elem f = 0; f < hi->size(); ++f) pi[f] = hi_exp.eval(f, t.bottoms_[0]);
    } else {
      // ε_n(f) = ε_{n-1} ∘ f ∘ π_{n-1} ; π_n(g) = π_{n-1} ∘ g ∘ ε_{n-1}
      const MonoMap& eps_prev = t.eps_[n - 1];
      const MonoMap& pi_prev = t.pi_[n - 1];
      const auto& lo_exp = t.exps_[n - 1];
      for (Elem f = 0; f < lo->size(); ++f) {
        std::vector<Elem> table(lo->size());
        for (Elem y = 0; y < lo->size(); ++y) table[y] = eps_prev(lo_exp.eval(f, pi_prev(y)));
        eps[f] = hi_exp.find(table).value();
      }
      const std::size_t below = t.levels_[n - 1]->size();
      for (Elem g = 0; g < hi->size(); ++g) {
        std::vector<Elem> table(below);
        for (Elem x = 0; x < below; ++x) table[x] = pi_prev(hi_exp.eval(g, eps_prev(x)));
        pi[g] = lo_exp.find(table).value();
      }
    }
    t.eps_.push_back(MonoMap::unchecked(lo, hi, std::move(eps)));
    t.pi_.push_back(MonoMap::unchecked(hi, lo, std::move(pi)));
  }
  return t;
}

namespace {

void check_range(const Tower& t, std::size_t n, std::size_t m) {
  if (n > m) throw RankError("need n <= m, got " + std::to_string(n) + " > " + std::to_string(m));
  if (m > t.rank())
    throw RankError("rank " + std::to_string(m) + " is beyond the tower rank " +
                    std::to_string(t.rank()));
}

Elem embed_elem(const Tower& t, std::size_t n, std::size_t m, Elem x) {
  for (std::size_t k = n; k < m; ++k) x = t.eps(k)(x);
  return x;
}

Elem project_elem(const Tower& t, std::size_t n, std::size_t m, Elem x) {
  for (std::size_t k = m; k > n; --k) x = t.pi(k - 1)(x);
  return x;
}

std::vector<Elem> elements_to_check(std::size_t size, const VerifyOptions& opt,
                                    std::mt19937_64& rng) {
  std::vector<Elem> out;
  if (size <= opt.exhaustive_limit) {
    for (Elem x = 0; x < size; ++x) out.push_back(x);
  } else {
    std::uniform_int_distribution<Elem> pick(0, size - 1);
    for (std::size_t i = 0; i < opt.samples; ++i) out.push_back(pick(rng));
  }
  return out;
}

}  // namespace

MonoMap eps_nm(const Tower& t, std::size_t n, std::size_t m) {
  check_range(t, n, m);
  MonoMap acc = domain::identity(t.level(n));
  for (std::size_t k = n; k < m; ++k) acc = domain::compose(t.eps(k), acc);
  return acc;
}

MonoMap pi_nm(const Tower& t, std::size_t n, std::size_t m) {
  check_range(t, n, m);
  MonoMap acc = domain::identity(t.level(m));
  for (std::size_t k = m; k > n; --k) acc = domain::compose(t.pi(k - 1), acc);
  return acc;
}

bool LawReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

LawReport verify_laws(const Tower& t, const VerifyOptions& options) {
  LawReport report;
  std::mt19937_64 rng(options.seed);
  const std::size_t r = t.rank();
  auto fail = [](LawCheck& c, std::string witness) {
    if (c.passed) c.witness = std::move(witness);
    c.passed = false;
  };

  for (std::size_t n = 0; n < r; ++n) {
    const FinPoset& lo = *t.level(n);
    const FinPoset& hi = *t.level(n + 1);
    LawCheck section{"pi_eps_identity[" + std::to_string(n) + "]"};
    for (Elem x : elements_to_check(lo.size(), options, rng)) {
      ++section.checked;
      if (t.pi(n)(t.eps(n)(x)) != x) fail(section, lo.name(x));
    }
    report.checks.push_back(std::move(section));

    LawCheck deflation{"eps_pi_deflationary[" + std::to_string(n) + "]"};
    for (Elem f : elements_to_check(hi.size(), options, rng)) {
      ++deflation.checked;
      Elem g = t.eps(n)(t.pi(n)(f));
      if (!hi.leq(g, f)) fail(deflation, hi.name(f) + " -> " + hi.name(g));
    }
    report.checks.push_back(std::move(deflation));
  }

  LawCheck eps_comp{"eps_composites"};
  LawCheck pi_comp{"pi_composites"};
  for (std::size_t n = 0; n <= r; ++n)
    for (std::size_t m = n; m <= r; ++m)
      for (std::size_t k = m; k <= r; ++k) {
        const std::string where =
            "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(k) + ")";
        for (Elem x : elements_to_check(t.level(n)->size(), options, rng)) {
          ++eps_comp.checked;
          if (embed_elem(t, n, k, x) != embed_elem(t, m, k, embed_elem(t, n, m, x)))
            fail(eps_comp, where + " at " + t.level(n)->name(x));
        }
        for (Elem x : elements_to_check(t.level(k)->size(), options, rng)) {
          ++pi_comp.checked;
          if (project_elem(t, n, k, x) != project_elem(t, n, m, project_elem(t, m, k, x)))
            fail(pi_comp, where + " at " + t.level(k)->name(x));
        }
      }
  report.checks.push_back(std::move(eps_comp));
  report.checks.push_back(std::move(pi_comp));

  LawCheck chain{"eps_pi_chain[" + std::to_string(r) + "]"};
  const FinPoset& top = *t.level(r);
  for (Elem x : elements_to_check(top.size(), options, rng)) {
    ++chain.checked;
    Elem prev = embed_elem(t, 0, r, project_elem(t, 0, r, x));
    for (std::size_t n = 1; n <= r; ++n) {
      Elem cur = embed_elem(t, n, r, project_elem(t, n, r, x));
      if (!top.leq(prev, cur)) fail(chain, top.name(x) + " not increasing at " + std::to_string(n));
      prev = cur;
    }
    if (prev != x) fail(chain, top.name(x) + " not reached at rank " + std::to_string(r));
  }
  report.checks.push_back(std::move(chain));
  return report;
}

DInftyElem embed_to(const Tower& t, const DInftyElem& e, std::size_t m) {
  check_range(t, e.rank, m);
  return {m, embed_elem(t, e.rank, m, e.elem)};
}

bool is_normalized(const Tower& t, const DInftyElem& e) {
  if (e.rank == 0) return true;
  return t.eps(e.rank - 1)(t.pi(e.rank - 1)(e.elem)) != e.elem;
}

DInftyElem normalize(const Tower& t, const DInftyElem& e) {
  check_range(t, e.rank, e.rank);
  DInftyElem cur = e;
  while (!is_normalized(t, cur)) cur = {cur.rank - 1, t.pi(cur.rank - 1)(cur.elem)};
  return cur;
}

bool equal(const Tower& t, const DInftyElem& a, const DInftyElem& b) {
  const std::size_t m = std::max(a.rank, b.rank);
  return embed_to(t, a, m).elem == embed_to(t, b, m).elem;
}

bool leq(const Tower& t, const DInftyElem& a, const DInftyElem& b) {
  const std::size_t m = std::max(a.rank, b.rank);
  return t.level(m)->leq(embed_to(t, a, m).elem, embed_to(t, b, m).elem);
}

DInftyElem apply(const Tower& t, const DInftyElem& f, const DInftyElem& x, std::size_t n) {
  if (n == 0 || n < f.rank || n < x.rank + 1)
    throw RankError("apply: working rank " + std::to_string(n) +
                    " must be at least max(rank f, rank x + 1)");
  if (n > t.rank())
    throw RankError("apply: working rank " + std::to_string(n) + " is beyond the tower rank " +
                    std::to_string(t.rank()));
  Elem g = embed_elem(t, f.rank, n, f.elem);
  Elem y = embed_elem(t, x.rank, n - 1, x.elem);
  return {n - 1, t.exponential(n).eval(g, y)};
}

std::string render(const Tower& t, const DInftyElem& e) {
  return "D" + std::to_string(e.rank) + ":" + t.level(e.rank)->name(e.elem);
}

}  // namespace scott::dinfty
