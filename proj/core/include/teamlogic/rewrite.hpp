#pragma once

#include "teamlogic/formula.hpp"

namespace teamlogic {

/// Replaces every `nab t` (bottom-up) by `t |! top`. Throws FormulaError if
/// an inclusion atom occurs.
Formula nabla_to_nedis(const Formula& f);

/// Replaces every `a |! b` (bottom-up) by `(a | b) & (nab a & nab b)`.
/// Throws FormulaError if an inclusion atom occurs.
Formula nedis_to_nabla(const Formula& f);

}  // namespace teamlogic
