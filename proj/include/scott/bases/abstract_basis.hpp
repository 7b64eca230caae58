#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scott/domain/poset.hpp"

namespace scott::bases {

using domain::Elem;

// A finite carrier with a decidable relation ≺.
class FiniteBasis {
 public:
  // prec[a][b] is a ≺ b. With `reflexive`, a ≺ a is added for every a.
  FiniteBasis(std::vector<std::string> names, std::vector<std::vector<bool>> prec,
              bool reflexive);

  // The order of a poset, read as a reflexive basis.
  static FiniteBasis from_poset(const domain::FinPoset& p);

  std::size_t size() const { return names_.size(); }
  bool prec(Elem a, Elem b) const { return prec_[a][b]; }
  bool reflexive() const { return reflexive_; }
  const std::string& name(Elem a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> prec_;
  bool reflexive_;
};

// Basis file: an optional `reflexive` line, then `elem <name>` and
// `prec <a> <b>` lines (`#` comments). ≺ is taken as listed, not closed.
FiniteBasis parse_basis(std::string_view text);

struct NullaryWitness {
  std::size_t a;  // sample index
  std::string below;
};

struct BinaryWitness {
  std::size_t a1, a2, b;  // sample indices
  std::string between;
};

struct BasisReport {
  bool transitive = true;
  bool nullary = true;
  bool binary = true;
  std::string failure;  // first failure, rendered
  std::size_t checked_triples = 0;
  std::vector<NullaryWitness> nullary_witnesses;
  std::vector<BinaryWitness> binary_witnesses;

  bool ok() const { return transitive && nullary && binary; }
};

// Transitivity and both interpolation axioms, exhaustively over the carrier;
// interpolants are found by search.
BasisReport check_abstract_basis(const FiniteBasis& b);

// The same axioms over a sample of an unbounded basis. Interpolants come
// from the supplied witness functions and are verified with `prec`.
template <class T>
struct SampledBasis {
  std::vector<T> sample;
  std::function<bool(const T&, const T&)> prec;
  std::function<T(const T&)> nullary;                      // b ≺ a
  std::function<T(const T&, const T&, const T&)> binary;   // a1, a2 ≺ c ≺ b
  std::function<std::string(const T&)> show;
};

template <class T>
BasisReport check_abstract_basis(const SampledBasis<T>& b) {
  BasisReport r;
  const auto& xs = b.sample;
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!b.prec(xs[i], xs[j])) continue;
      for (std::size_t k = 0; k < n; ++k) {
        ++r.checked_triples;
        if (b.prec(xs[j], xs[k]) && !b.prec(xs[i], xs[k]) && r.transitive) {
          r.transitive = false;
          r.failure = "transitivity " + b.show(xs[i]) + " " + b.show(xs[j]) + " " +
                      b.show(xs[k]);
        }
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    T w = b.nullary(xs[i]);
    if (!b.prec(w, xs[i])) {
      if (r.nullary) r.failure = "nullary interpolation " + b.show(xs[i]);
      r.nullary = false;
    } else {
      r.nullary_witnesses.push_back({i, b.show(w)});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!b.prec(xs[i], xs[k]) || !b.prec(xs[j], xs[k])) continue;
        T c = b.binary(xs[i], xs[j], xs[k]);
        if (b.prec(xs[i], c) && b.prec(xs[j], c) && b.prec(c, xs[k])) {
          r.binary_witnesses.push_back({i, j, k, b.show(c)});
        } else {
          if (r.binary)
            r.failure = "binary interpolation " + b.show(xs[i]) + " " + b.show(xs[j]) + " " +
                        b.show(xs[k]);
          r.binary = false;
        }
      }
  return r;
}

}  // namespace scott::bases
