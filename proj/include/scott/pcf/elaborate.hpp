#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "scott/pcf/parse.hpp"
#include "scott/pcf/syntax.hpp"

namespace scott::pcf {

// Raised when a type parameter of some k/s/fix occurrence is left
// undetermined by unification.
class AmbiguityError : public TypeError {
 public:
  AmbiguityError(SourcePos pos, const std::string& message);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

struct ElabOptions {
  // Constrains the type of the whole term.
  std::optional<Type> expected;
  // Resolve leftover metavariables to ι instead of reporting ambiguity.
  bool default_to_base = false;
};

// First-order unification over monotypes with a fresh metavariable per
// constant occurrence. Throws TypeError (with the two conflicting types)
// or AmbiguityError.
Term elaborate(const RawTerm& raw, const ElabOptions& options = {});

// parse + elaborate
Term parse_term(std::string_view source, const ElabOptions& options = {});

// Convenience for programs run at base type: expects ι and defaults
// leftover metavariables to ι.
Term parse_program(std::string_view source);

}  // namespace scott::pcf
