#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// The inductive dyadics: middle, left(x), right(x), with the strict order
// given by case analysis on the outermost constructors.
namespace scott::dyadic {

class Dyadic {
 public:
  static Dyadic middle() { return Dyadic(std::string()); }
  static Dyadic left(const Dyadic& x) { return Dyadic("L" + x.path_); }
  static Dyadic right(const Dyadic& x) { return Dyadic("R" + x.path_); }

  // "m", "Lm", "LRm", ...; throws std::invalid_argument otherwise.
  static Dyadic parse(std::string_view text);

  bool is_middle() const { return path_.empty(); }
  bool is_left() const { return !path_.empty() && path_.front() == 'L'; }
  bool is_right() const { return !path_.empty() && path_.front() == 'R'; }
  // The argument of the outermost left/right. Precondition: !is_middle().
  Dyadic inner() const { return Dyadic(path_.substr(1)); }

  std::size_t depth() const { return path_.size(); }
  // Outermost constructor first, e.g. "LRm" = left(right(middle)).
  std::string str() const { return path_ + "m"; }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;

 private:
  explicit Dyadic(std::string path) : path_(std::move(path)) {}
  std::string path_;
};

bool prec(const Dyadic& x, const Dyadic& y);

enum class Ordering { Less, Equal, Greater };
Ordering compare(const Dyadic& x, const Dyadic& y);

// z with x ≺ z ≺ y, following the density construction. Throws
// std::invalid_argument unless x ≺ y.
Dyadic interpolant(const Dyadic& x, const Dyadic& y);

// (left x, right x), so that left x ≺ x ≺ right x.
std::pair<Dyadic, Dyadic> endpoints(const Dyadic& x);

// c with a1, a2 ≺ c ≺ b, for a1, a2 ≺ b.
Dyadic binary_interpolant(const Dyadic& a1, const Dyadic& a2, const Dyadic& b);

// All dyadics of depth ≤ d (2^{d+1} − 1 of them), shallowest first.
std::vector<Dyadic> enumerate_depth(std::size_t d);

// Debug rendering as num / 2^exp in (−1, 1), via l(x) = (x−1)/2 and
// r(x) = (x+1)/2. Never used in decisions.
struct Rational {
  std::int64_t num;
  std::uint32_t exp;
};
Rational to_rational(const Dyadic& x);
std::string render_rational(const Dyadic& x);

// ↓a ≪ ↓b in the ideal completion: there is c ≺ b with ↓a ⊆ ↓c. For the
// dyadics this holds exactly when a ≺ b.
bool principal_way_below(const Dyadic& a, const Dyadic& b);

// The witness c for principal_way_below(a, b), when it holds.
std::optional<Dyadic> way_below_witness(const Dyadic& a, const Dyadic& b);

}  // namespace scott::dyadic
