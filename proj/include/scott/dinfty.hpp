#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scott/domain/maps.hpp"
#include "scott/domain/poset.hpp"

// The tower D_0 = L(1), D_{n+1} = [D_n → D_n] with embedding-projection
// pairs (ε_n, π_n), and finite-rank representatives of elements of D_∞.
namespace scott::dinfty {

using domain::Elem;
using domain::MonoMap;
using domain::PosetRef;

class RankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultRankCap = 3;

// SCOTT_RANK_CAP when set to a number, else kDefaultRankCap.
std::size_t rank_cap_from_env();

class Tower {
 public:
  std::size_t rank() const { return levels_.size() - 1; }
  const PosetRef& level(std::size_t n) const { return levels_.at(n); }
  // D_n for n ≥ 1 as an exponential of D_{n-1}.
  const domain::Exponential& exponential(std::size_t n) const;
  Elem bottom(std::size_t n) const { return bottoms_.at(n); }

  const MonoMap& eps(std::size_t n) const { return eps_.at(n); }  // D_n → D_{n+1}
  const MonoMap& pi(std::size_t n) const { return pi_.at(n); }    // D_{n+1} → D_n

  // Replaces π_n; used to check that law verification catches faults.
  void set_projection(std::size_t n, MonoMap pi);

 private:
  friend Tower build_tower(std::size_t rank, std::optional<std::size_t> cap);
  std::vector<PosetRef> levels_;
  std::vector<domain::Exponential> exps_;  // exps_[n-1] is D_n
  std::vector<Elem> bottoms_;
  std::vector<MonoMap> eps_;
  std::vector<MonoMap> pi_;
};

// Builds D_0..D_rank. Throws RankError when rank exceeds the cap
// (rank_cap_from_env() when not given).
Tower build_tower(std::size_t rank, std::optional<std::size_t> cap = std::nullopt);

// ε_{n,m} : D_n → D_m and π_{n,m} : D_m → D_n for n ≤ m, as composites of the
// generating maps; the identity when n = m.
MonoMap eps_nm(const Tower& t, std::size_t n, std::size_t m);
MonoMap pi_nm(const Tower& t, std::size_t n, std::size_t m);

struct LawCheck {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string witness{};  // first counterexample
};

struct LawReport {
  std::vector<LawCheck> checks;
  bool all_passed() const;
};

struct VerifyOptions {
  // Levels larger than this are checked on a random sample.
  std::size_t exhaustive_limit = 5000;
  std::size_t samples = 1000;
  std::uint64_t seed = 20240501;
};

LawReport verify_laws(const Tower& t, const VerifyOptions& options = {});

struct DInftyElem {
  std::size_t rank;
  Elem elem;
};

// ε_{rank,m}(e); throws RankError if m < rank or m > tower rank.
DInftyElem embed_to(const Tower& t, const DInftyElem& e, std::size_t m);
// Projects down while ε ∘ π fixes the element.
DInftyElem normalize(const Tower& t, const DInftyElem& e);
bool is_normalized(const Tower& t, const DInftyElem& e);

// Comparison at the common rank.
bool equal(const Tower& t, const DInftyElem& a, const DInftyElem& b);
bool leq(const Tower& t, const DInftyElem& a, const DInftyElem& b);

// f applied to x at working rank N: f is represented in D_N as a map
// D_{N-1} → D_{N-1}, x in D_{N-1}; the result lives at rank N−1.
// Requires max(rank f, rank x + 1) ≤ N ≤ tower rank.
DInftyElem apply(const Tower& t, const DInftyElem& f, const DInftyElem& x, std::size_t n);

std::string render(const Tower& t, const DInftyElem& e);

}  // namespace scott::dinfty
