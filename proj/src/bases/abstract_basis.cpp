#include "scott/bases/abstract_basis.hpp"

#include <sstream>

#include "scott/domain/text_format.hpp"

namespace scott::bases {

FiniteBasis::FiniteBasis(std::vector<std::string> names, std::vector<std::vector<bool>> prec,
                         bool reflexive)
    : names_(std::move(names)), prec_(std::move(prec)), reflexive_(reflexive) {
  const std::size_t n = names_.size();
  if (prec_.size() != n) throw domain::PosetError("basis relation has wrong row count");
  for (std::size_t a = 0; a < n; ++a) {
    if (prec_[a].size() != n) throw domain::PosetError("basis relation row has wrong size");
    if (reflexive_) prec_[a][a] = true;
  }
}

FiniteBasis FiniteBasis::from_poset(const domain::FinPoset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<bool>> prec(n, std::vector<bool>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) prec[a][b] = p.leq(a, b);
  return FiniteBasis(p.names(), std::move(prec), true);
}

FiniteBasis parse_basis(std::string_view text) {
  bool reflexive = false;
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::size_t> pair_lines;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> t;
    for (std::string tok; ls >> tok;) t.push_back(tok);
    if (t.empty()) continue;
    if (t[0] == "reflexive" && t.size() == 1) {
      reflexive = true;
    } else if (t[0] == "elem" && t.size() == 2) {
      names.push_back(t[1]);
    } else if (t[0] == "prec" && t.size() == 3) {
      pairs.emplace_back(t[1], t[2]);
      pair_lines.push_back(lineno);
    } else {
      throw domain::FormatError(lineno, "expected `reflexive`, `elem <name>` or `prec <a> <b>`");
    }
  }
  const std::size_t n = names.size();
  auto index_of = [&](const std::string& name, std::size_t at) {
    for (std::size_t i = 0; i < n; ++i)
      if (names[i] == name) return i;
    throw domain::FormatError(at, "undeclared element '" + name + "'");
  };
  std::vector<std::vector<bool>> prec(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    prec[index_of(pairs[i].first, pair_lines[i])][index_of(pairs[i].second, pair_lines[i])] =
        true;
  return FiniteBasis(std::move(names), std::move(prec), reflexive);
}

BasisReport check_abstract_basis(const FiniteBasis& b) {
  BasisReport r;
  const std::size_t n = b.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!b.prec(x, y)) continue;
      for (Elem z = 0; z < n; ++z) {
        ++r.checked_triples;
        if (b.prec(y, z) && !b.prec(x, z) && r.transitive) {
          r.transitive = false;
          r.failure = "transitivity " + b.name(x) + " " + b.name(y) + " " + b.name(z);
        }
      }
    }
  for (Elem a = 0; a < n; ++a) {
    std::optional<Elem> w;
    for (Elem c = 0; c < n && !w; ++c)
      if (b.prec(c, a)) w = c;
    if (w) {
      r.nullary_witnesses.push_back({a, b.name(*w)});
    } else {
      if (r.nullary && r.transitive) r.failure = "nullary interpolation " + b.name(a);
      r.nullary = false;
    }
  }
  for (Elem a1 = 0; a1 < n; ++a1)
    for (Elem a2 = 0; a2 < n; ++a2)
      for (Elem c = 0; c < n; ++c) {
        if (!b.prec(a1, c) || !b.prec(a2, c)) continue;
        std::optional<Elem> w;
        for (Elem m = 0; m < n && !w; ++m)
          if (b.prec(a1, m) && b.prec(a2, m) && b.prec(m, c)) w = m;
        if (w) {
          r.binary_witnesses.push_back({a1, a2, c, b.name(*w)});
        } else {
          if (r.binary && r.transitive && r.nullary)
            r.failure = "binary interpolation " + b.name(a1) + " " + b.name(a2) + " " + b.name(c);
          r.binary = false;
        }
      }
  return r;
}

}  // namespace scott::bases
