#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "quatnf/polynomial.hpp"
#include "quatnf/qpolynomial.hpp"

namespace quatnf {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A parsed expression over either vector letters (v1, v2, ..., with
/// optional central symbols s1, s2, ...) or quaternionic letters (q1, q1', ...).
struct ParsedExpression {
  bool quaternionic = false;
  /// Word letters are vector indices, or q-letter codes when quaternionic.
  ScalarPolynomial value;

  bool has_scalar_symbols() const;
  /// Throws std::domain_error when quaternionic or scalar symbols occur.
  RationalPolynomial vector_polynomial() const;
  /// Throws std::domain_error unless quaternionic.
  QPolynomial q_polynomial() const;
};

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INT ['/' INT] | 'v' INT | 's' INT ['^' INT] | 'q' INT ["'"]
///           | '(' expr ')' | 'S(' expr ')' | 'A(' expr ')' | 'rev(' expr ')'
///           | 'cross(' expr ',' expr ')'
/// Whitespace is ignored between tokens. Mixing v and q letters, or s
/// symbols with q letters, is a ParseError.
ParsedExpression parse_expression(std::string_view text);

/// parse_expression restricted to rational vector polynomials.
RationalPolynomial parse_vector_polynomial(std::string_view text);

}  // namespace quatnf
