#include "scott/dyadic.hpp"

namespace scott::dyadic {

Dyadic Dyadic::parse(std::string_view text) {
  if (text.empty() || text.back() != 'm')
    throw std::invalid_argument("dyadic must end in 'm': '" + std::string(text) + "'");
  std::string path(text.substr(0, text.size() - 1));
  for (char c : path)
    if (c != 'L' && c != 'R')
      throw std::invalid_argument("dyadic may only contain L/R before 'm': '" +
                                  std::string(text) + "'");
  return Dyadic(std::move(path));
}

bool prec(const Dyadic& x, const Dyadic& y) {
  if (x.is_middle()) return y.is_right();
  if (x.is_left()) {
    if (y.is_middle() || y.is_right()) return true;
    return prec(x.inner(), y.inner());
  }
  if (y.is_right()) return prec(x.inner(), y.inner());
  return false;
}

Ordering compare(const Dyadic& x, const Dyadic& y) {
  if (x == y) return Ordering::Equal;
  return prec(x, y) ? Ordering::Less : Ordering::Greater;
}

Dyadic interpolant(const Dyadic& x, const Dyadic& y) {
  if (!prec(x, y))
    throw std::invalid_argument("interpolant: " + x.str() + " is not below " + y.str());
  if (x.is_middle()) return Dyadic::right(Dyadic::left(y.inner()));
  if (x.is_left() && y.is_middle()) return Dyadic::left(Dyadic::right(x.inner()));
  if (x.is_left() && y.is_right()) return Dyadic::middle();
  if (x.is_left()) return Dyadic::left(interpolant(x.inner(), y.inner()));
  return Dyadic::right(interpolant(x.inner(), y.inner()));
}

std::pair<Dyadic, Dyadic> endpoints(const Dyadic& x) {
  return {Dyadic::left(x), Dyadic::right(x)};
}

Dyadic binary_interpolant(const Dyadic& a1, const Dyadic& a2, const Dyadic& b) {
  const Dyadic& larger = prec(a1, a2) ? a2 : a1;
  return interpolant(larger, b);
}

std::vector<Dyadic> enumerate_depth(std::size_t d) {
  std::vector<Dyadic> out{Dyadic::middle()};
  std::size_t level_start = 0;
  for (std::size_t depth = 1; depth <= d; ++depth) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      out.push_back(Dyadic::left(out[i]));
      out.push_back(Dyadic::right(out[i]));
    }
    level_start = level_end;
  }
  return out;
}

Rational to_rational(const Dyadic& x) {
  // Apply the innermost constructor first: middle = 0.
  const std::string s = x.str();
  Rational r{0, 0};
  for (auto it = s.rbegin() + 1; it != s.rend(); ++it) {
    // (num/2^e ± 1)/2 = (num ± 2^e) / 2^{e+1}
    const std::int64_t one = std::int64_t{1} << r.exp;
    r.num = (*it == 'L') ? r.num - one : r.num + one;
    ++r.exp;
  }
  return r;
}

std::string render_rational(const Dyadic& x) {
  Rational r = to_rational(x);
  while (r.exp > 0 && r.num % 2 == 0) {
    r.num /= 2;
    --r.exp;
  }
  if (r.exp == 0) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(std::int64_t{1} << r.exp);
}

bool principal_way_below(const Dyadic& a, const Dyadic& b) { return prec(a, b); }

std::optional<Dyadic> way_below_witness(const Dyadic& a, const Dyadic& b) {
  if (!prec(a, b)) return std::nullopt;
  return interpolant(a, b);
}

}  // namespace scott::dyadic
