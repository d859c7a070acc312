#pragma once

// Text syntax shared by the CLI and the test fixtures.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := int ['/' int] | 'i' | 'sqrt2' | 'q(' a ',' b ')' ['^' ['-'] n]
//           | 'x' a ['^' n] | 'dx' a | '(' expr ')'
//
// Words are normal ordered as they are read, so "x2*x1" parses to
// q(1,2)^-1*x1*x2 in D >= 4.

#include <stdexcept>
#include <string>
#include <string_view>

#include "twistcalc/ncalg.hpp"

namespace twistcalc {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

Element parse_expr(const ContextPtr& ctx, std::string_view text);
/// Parses an expression that must be a pure scalar (no x or dx).
ExactScalar parse_scalar(const ContextPtr& ctx, std::string_view text);

std::string to_string(const Context& ctx, const ExactScalar& s);
std::string to_string(const Element& e);
std::string to_string(const Context& ctx, const Monomial& m);

}  // namespace twistcalc
