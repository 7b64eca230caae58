#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "scott/pcf/syntax.hpp"

// Concrete syntax:
//
//   term := atom | term atom
//   atom := zero | succ | pred | ifz | k | s | fix | #digits
//         | ( term ) | ( term : type )
//   type := nat | type -> type | ( type )
//
// Application associates to the left, `->` to the right. `--` starts a line
// comment. `#n` abbreviates n applications of succ to zero.
namespace scott::pcf {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

struct RawTerm;
using RawRef = std::shared_ptr<const RawTerm>;

// Parse tree before type elaboration.
struct RawTerm {
  enum class Kind { Const, App, Ascribe };

  Kind kind = Kind::Const;
  Op constant = Op::Zero;  // Kind::Const
  RawRef fun;              // Kind::App
  RawRef arg;              // Kind::App; the ascribed term for Kind::Ascribe
  std::optional<Type> ascription;
  SourcePos pos;
};

RawRef raw_const(Op op, SourcePos pos = {});
RawRef raw_app(RawRef fun, RawRef arg);
RawRef raw_ascribe(RawRef term, Type type);

// Structural equality ignoring source positions.
bool raw_eq(const RawTerm& a, const RawTerm& b);
std::string render(const RawTerm& t);

RawRef parse(std::string_view source);
Type parse_type(std::string_view source);

}  // namespace scott::pcf
