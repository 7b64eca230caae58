#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "scott/domain/maps.hpp"
#include "scott/domain/poset.hpp"

// Line-oriented poset files.
//
//   # comment                 (also blank lines)
//   elem <name>               declares an element; declaration order = index
//   le <a> <b>                generating pair a ⊑ b
//
// Tokens are separated by spaces or tabs. Names are any run of non-blank
// characters. The loader takes the reflexive-transitive closure of the `le`
// pairs and rejects cycles (antisymmetry violations).
//
// Map files use `map <a> <b>` lines, one per source element, naming the
// image of a under the map.
namespace scott::domain {

class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

FinPoset parse_poset(std::string_view text);
FinPoset read_poset_file(const std::string& path);

MonoMap parse_map(std::string_view text, const PosetRef& source,
                  const PosetRef& target);

// Writes `elem` lines and the covering pairs as `le` lines.
void write_poset(std::ostream& out, const FinPoset& p);

std::string read_file(const std::string& path);

}  // namespace scott::domain
