#pragma once

// Text form of elements.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' ['-'] int)?
//   atom   := int | 't' | ident | 'd' ('^' int)? '(' expr ')' | '(' expr ')'
//           | 'tensor' '(' expr (',' expr)* ')'          (tensor powers only)
//
// Division and negative powers are accepted only when the divisor is a unit,
// i.e. a nonzero scalar times a product of designated denominators.

#include <string>
#include <string_view>

#include "diffhopf/diffpoly.hpp"

namespace diffhopf {

/// Parses `text` as an element of `ring`. For tensor powers the only atoms
/// allowed outside `tensor(...)` are scalars.
Element parse_expr(std::string_view text, const RingPtr& ring);

Scalar parse_scalar(std::string_view text, FieldKind field);

std::string to_string(const Poly& p, const Ring& ring);
/// Canonical text; tensor-power elements print as sums of tensor(...) terms.
std::string to_string(const Element& x);

}  // namespace diffhopf
