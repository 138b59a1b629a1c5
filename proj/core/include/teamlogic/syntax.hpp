#pragma once

#include <string>
#include <string_view>

#include "teamlogic/formula.hpp"

namespace teamlogic {

/// Parses the ASCII formula syntax:
///
///     atom   := IDENT | "~" IDENT | "top" | "bot"
///     unary  := "dia" f | "box" f | "nab" f
///     incl   := "[" f ("," f)* "<=" f ("," f)* "]"
///     binary := f "&" f | f "|" f | f "|!" f
///
/// Unary operators bind tightest, then "&", then "|" and "|!" (same level).
/// All binary operators associate to the left. Throws ParseError with the
/// offending byte offset.
Formula parse_formula(std::string_view text);

/// Canonical concrete syntax. A binary operand is parenthesized unless it is
/// an atom, a unary formula, or the left operand of the same operator.
std::string print_formula(const Formula& f);

}  // namespace teamlogic
