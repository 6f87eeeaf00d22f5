#ifndef ORDREV_PARSER_HPP
#define ORDREV_PARSER_HPP

#include <string>
#include <string_view>

#include "ordrev/family.hpp"

namespace ordrev {

// Parses the family DSL:
//
//   file    := stmt (";" stmt)* [";"]
//   stmt    := orient "(" body ")" [for] mult?
//   orient  := "wo" | "rwo"
//   mult    := "x" (NAT | "inf" | "aleph" NAT)
//   body    := ordexpr | ordexpr? tail [for]
//   ordexpr := term ("+" term)*
//   term    := "w" ("^" exp)? ("*" NAT)? | NAT
//   exp     := NAT | "w" | "(" ordexpr ")"
//   tail    := (NAT "+")? NAT "*" IDENT ("+" NAT)?
//   for     := "for" IDENT "in" "nat"
//
// "#" starts a line comment. Aleph multiplicities collapse to inf. The
// for-clause is accepted both inside the parentheses and directly after
// them; the canonical printer emits the latter.
//
// Throws ParseError (with span and expected-token set) on syntax errors,
// and ZeroOrdinal / MalformedCnf (wrapped with spans into ParseError) on
// value-level violations.
FamilyPresentation parse(std::string_view text);

// Canonical one-statement-per-line text of a normalized presentation;
// parsing it yields the identical presentation.
std::string canonicalText(const FamilyPresentation& p);

}  // namespace ordrev

#endif
