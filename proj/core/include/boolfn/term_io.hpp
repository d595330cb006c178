/// @file  term_io.hpp
/// @brief Canonical text form for decision-diagram terms.
///
/// Grammar (single spaces, full parenthesization):
///   term ::= "BDD" <nvars> <bt> | "MTBDD" <m> <n> <bt>
///   bt   ::= "(C " <nat> ")" | "(D " <level> " " <bt> " " <bt> ")"
///
/// render and parse are exact inverses on well-formed values, which makes
/// rendered terms usable as byte-comparable golden data and as the CLI
/// wire format.

#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "boolfn/bdd.hpp"
#include "boolfn/mtbdd.hpp"

namespace boolfn {

using Term = std::variant<Bdd, Mtbdd>;

/// "(C 0)" / "(D 1 (C 1) (C 0))" form of a bare tree.
std::string render(const DecisionTree& t);

/// "BDD <nvars> <bt>".
std::string render(const Bdd& b);

/// "MTBDD <m> <n> <bt>".
std::string render(const Mtbdd& x);

std::string render(const Term& t);

/// Parses a rendered term.  Tolerates arbitrary whitespace between
/// tokens.  Throws std::invalid_argument with the offending offset on
/// syntax errors and on out-of-range levels or leaf values.
Term parse_term(std::string_view text);

}  // namespace boolfn
