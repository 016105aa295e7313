#include "quatnf/parser.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include "quatnf/qvars.hpp"

namespace quatnf {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

bool ParsedExpression::has_scalar_symbols() const {
  for (const auto& [w, c] : value.terms()) {
    if (!c.is_constant()) return true;
  }
  return false;
}

RationalPolynomial ParsedExpression::vector_polynomial() const {
  if (quaternionic) throw std::domain_error("expected a vector expression, got quaternionic variables");
  if (has_scalar_symbols()) throw std::domain_error("expected rational coefficients, got scalar symbols");
  RationalPolynomial out;
  for (const auto& [w, c] : value.terms()) out.add_term(w, c.constant_term());
  return out;
}

QPolynomial ParsedExpression::q_polynomial() const {
  if (!quaternionic && !value.is_zero() && value.max_letter() != 0) {
    throw std::domain_error("expected a quaternionic expression, got vector variables");
  }
  RationalPolynomial out;
  for (const auto& [w, c] : value.terms()) out.add_term(w, c.constant_term());
  return QPolynomial(std::move(out));
}

namespace {

using Poly = ScalarPolynomial;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedExpression run() {
    classify();
    skip_space();
    if (at_end()) fail("empty expression");
    Poly p = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return {quaternionic_, std::move(p)};
  }

 private:
  // Finds the alphabet before parsing so that S, A, rev know their meaning.
  void classify() {
    std::optional<std::size_t> first_v, first_q, first_s;
    for (std::size_t i = 0; i < text_.size(); ++i) {
      const char c = text_[i];
      const bool starts = i == 0 || !std::isalnum(static_cast<unsigned char>(text_[i - 1]));
      if (!starts || i + 1 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i + 1]))) continue;
      if (c == 'v' && !first_v) first_v = i;
      if (c == 'q' && !first_q) first_q = i;
      if (c == 's' && !first_s) first_s = i;
    }
    if (first_q && first_v) fail_at(std::max(*first_q, *first_v), "cannot mix v and q variables");
    if (first_q && first_s) fail_at(std::max(*first_q, *first_s), "scalar symbols cannot be combined with q variables");
    quaternionic_ = first_q.has_value();
  }

  Poly expr() {
    skip_space();
    bool negate = false;
    if (accept('+')) {
    } else if (accept('-')) {
      negate = true;
    }
    Poly sum = term();
    if (negate) sum = -sum;
    while (true) {
      skip_space();
      if (accept('+')) {
        sum += term();
      } else if (accept('-')) {
        sum -= term();
      } else {
        return sum;
      }
    }
  }

  Poly term() {
    Poly prod = factor();
    while (true) {
      skip_space();
      if (!accept('*')) return prod;
      prod = prod * factor();
    }
  }

  Poly factor() {
    skip_space();
    if (at_end()) fail("expected a factor");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      std::string name;
      while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) name += text_[pos_++];
      if (name == "S" || name == "A" || name == "rev" || name == "cross") return function(name, start);
      if (name.size() == 1 && (name == "v" || name == "s" || name == "q")) return variable(name[0], start);
      fail_at(start, "unknown identifier '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Poly function(const std::string& name, std::size_t start) {
    skip_space();
    if (!accept('(')) fail_at(start, name + " must be followed by '('");
    Poly a = expr();
    if (name == "cross") {
      expect(',');
      Poly b = expr();
      expect(')');
      return cross(a, b);
    }
    expect(')');
    if (name == "rev") return reversion(a);
    const Poly conj = conjugate_of(a);
    Poly out = name == "S" ? a + conj : a - conj;
    out *= Rational(1, 2);
    return out;
  }

  Poly conjugate_of(const Poly& p) const {
    if (!quaternionic_) return conjugate(p);
    return transform_words(p, [](const Word& w) {
      std::string bytes = w.reversed().bytes();
      for (char& c : bytes) c = static_cast<char>(qletter::bar(static_cast<Letter>(c)));
      return std::pair{Word(bytes), false};
    });
  }

  Poly variable(char kind, std::size_t start) {
    const long index = integer(start);
    if (index < 1) fail_at(start, "variable index must be at least 1");
    if (kind == 'v') {
      if (index > 255) fail_at(start, "vector index above 255");
      return Poly::variable(static_cast<int>(index));
    }
    if (kind == 's') {
      if (index > 255) fail_at(start, "scalar index above 255");
      ScalarCoeff sym = ScalarCoeff::symbol(static_cast<int>(index));
      skip_space();
      if (accept('^')) {
        skip_space();
        const long power = integer(pos_);
        ScalarCoeff base = sym;
        sym = ScalarCoeff(1);
        for (long i = 0; i < power; ++i) sym *= base;
      }
      return Poly(sym);
    }
    if (index > 127) fail_at(start, "quaternionic index above 127");
    const bool bar = accept('\'');
    const Letter l = bar ? qletter::qbar(static_cast<int>(index)) : qletter::q(static_cast<int>(index));
    return Poly::term(Word{l});
  }

  Poly number() {
    const std::size_t start = pos_;
    std::string digits = digits_at();
    skip_space();
    if (accept('/')) {
      skip_space();
      const std::string den = digits_at();
      if (den.empty()) fail("expected a denominator");
      digits += "/" + den;
    }
    try {
      return Poly(ScalarCoeff(parse_rational(digits)));
    } catch (const std::invalid_argument&) {
      fail_at(start, "invalid number '" + digits + "'");
    }
  }

  std::string digits_at() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += text_[pos_++];
    return out;
  }

  long integer(std::size_t start) {
    const std::string digits = digits_at();
    if (digits.empty()) fail_at(start, "expected an integer");
    if (digits.size() > 9) fail_at(start, "integer too large");
    return std::stol(digits);
  }

  void expect(char c) {
    skip_space();
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept(char c) {
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool quaternionic_ = false;
};

}  // namespace

ParsedExpression parse_expression(std::string_view text) { return Parser(text).run(); }

RationalPolynomial parse_vector_polynomial(std::string_view text) {
  ParsedExpression e = parse_expression(text);
  if (e.quaternionic) throw ParseError(1, 1, "expected vector variables, got quaternionic variables");
  if (e.has_scalar_symbols()) throw ParseError(1, 1, "expected rational coefficients, got scalar symbols");
  return e.vector_polynomial();
}

}  // namespace quatnf
