#pragma once

#include <string>
#include <string_view>

#include "twoloop/knot_record.hpp"

namespace twoloop {

/*
 * Line-oriented UTF-8 record format (".knot"):
 *
 *   # comments run to end of line (outside quoted strings)
 *   knot "<name>"
 *   provenance "<text>"          (optional)
 *   alexander:
 *     <exp> <coeff>              (one term per indented line, ascending)
 *   theta:
 *     <n> <m> <coeff>            (ascending lexicographic)
 *   end
 *
 * Exponents are the true half-integer values: an integer, or a/2 with odd
 * a. Coefficients are z or z/w in lowest terms with w > 0. theta stores the
 * full symmetrized polynomial, not its fundamental domain.
 */

// Throws SyntaxError (with line/column) on grammar violations and
// ValidationError (naming the invariant) on content violations. The
// returned record has passed the full invariant suite.
KnotRecord parse_record(std::string_view text);

// Canonical serialization: equal records produce identical bytes, and
// parse followed by serialize reproduces canonical documents exactly.
std::string serialize_record(const KnotRecord& record);

// "unknot" or "torus:p:q". Throws UnknownBuiltinError / InvalidParamsError.
KnotRecord builtin_record(const std::string& name);

}  // namespace twoloop
