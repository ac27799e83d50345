#include "loja/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "loja/errors.hpp"

namespace loja {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i != 0) out += ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected,
                         const std::string& found)
    : PositionedError("SyntaxError",
                      "expected " + join_expected(expected) + " but found " + found,
                      position),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Int, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;  // absolute byte offset
  std::string text;
  std::size_t var_index = 0;  // zero-based, for Tok::Var
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(std::string_view text, std::size_t base,
                       const ParseOptions& options) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t pos = base + i;
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < text.size() && is_digit(text[j])) ++j;
      if (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) {
        // "2x1": implicit multiplication is not part of the grammar
        throw SyntaxError(base + j, {"'*'", "'+'", "'-'", "'^'", "'/'"},
                          "'" + std::string(1, text[j]) + "'");
      }
      out.push_back({Tok::Int, pos, std::string(text.substr(i, j - i))});
      i = j;
      continue;
    }
    if (c == 'x') {
      std::size_t j = i + 1;
      while (j < text.size() && is_alnum(text[j])) ++j;
      const std::string word(text.substr(i, j - i));
      const std::string_view suffix = text.substr(i + 1, j - i - 1);
      const bool numeric = !suffix.empty() &&
                           std::all_of(suffix.begin(), suffix.end(), is_digit);
      if (!numeric || suffix.size() > 9) throw BadVariableIndex(pos, word);
      const std::size_t index = std::stoul(std::string(suffix));
      if (index == 0 || index > options.max_variable_index) {
        throw BadVariableIndex(pos, word);
      }
      out.push_back({Tok::Var, pos, word, index - 1});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw SyntaxError(pos, {"number", "variable", "operator", "'('", "')'"},
                          "'" + std::string(1, c) + "'");
    }
    out.push_back({kind, pos, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, base + text.size(), ""});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t nvars, const ParseOptions& options)
      : tokens_(std::move(tokens)), nvars_(nvars), options_(options) {}

  MultiPoly parse() {
    MultiPoly result = expr();
    if (peek().kind != Tok::End) {
      const bool nested = depth_ > 0;
      std::vector<std::string> expected = {"'+'", "'-'", "'*'", "'^'"};
      expected.push_back(nested ? "')'" : "end of input");
      throw SyntaxError(peek().pos, expected, describe(peek()));
    }
    return result;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& next() { return tokens_[at_++]; }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      MultiPoly rhs = term();
      acc = minus ? sub(acc, rhs) : add(acc, rhs);
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (peek().kind == Tok::Star) {
      next();
      acc = mul(acc, factor());
    }
    return acc;
  }

  MultiPoly factor() {
    if (peek().kind == Tok::Minus) {
      next();
      return negate(factor());
    }
    MultiPoly b = base();
    if (peek().kind == Tok::Caret) {
      next();
      const Token& e = next();
      if (e.kind != Tok::Int) {
        throw SyntaxError(e.pos, {"natural-number exponent"}, describe(e));
      }
      const BigInt value(e.text);
      if (value > BigInt(static_cast<unsigned long>(options_.exponent_cap))) {
        throw ExponentOverflow(e.pos, e.text);
      }
      b = pow(b, value.get_ui());
      if (peek().kind == Tok::Caret) {
        throw SyntaxError(peek().pos, {"'*'", "'+'", "'-'", "')'", "end of input"},
                          describe(peek()));
      }
    }
    return b;
  }

  MultiPoly base() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Int: {
        BigInt num(t.text);
        BigInt den = 1;
        if (peek().kind == Tok::Slash) {
          next();
          const Token& d = next();
          if (d.kind != Tok::Int) {
            throw SyntaxError(d.pos, {"positive-integer denominator"}, describe(d));
          }
          den = BigInt(d.text);
          if (den == 0) throw ZeroDenominator(d.pos);
        }
        return MultiPoly::constant(nvars_, make_rational(num, den));
      }
      case Tok::Var:
        return MultiPoly::variable(nvars_, t.var_index);
      case Tok::LParen: {
        ++depth_;
        MultiPoly inner = expr();
        const Token& close = next();
        if (close.kind != Tok::RParen) {
          throw SyntaxError(close.pos, {"'+'", "'-'", "'*'", "'^'", "')'"},
                            describe(close));
        }
        --depth_;
        return inner;
      }
      default:
        throw SyntaxError(t.pos, {"number", "variable", "'('", "'-'"}, describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  std::size_t depth_ = 0;
  std::size_t nvars_;
  const ParseOptions& options_;
};

MultiPoly parse_poly_at(std::string_view text, std::optional<std::size_t> nvars_hint,
                        const ParseOptions& options, std::size_t base) {
  std::vector<Token> tokens = lex(text, base, options);
  std::size_t nvars = std::max<std::size_t>(nvars_hint.value_or(1), 1);
  for (const auto& t : tokens) {
    if (t.kind == Tok::Var) nvars = std::max(nvars, t.var_index + 1);
  }
  return Parser(std::move(tokens), nvars, options).parse();
}

std::string monomial_text(const ExpVec& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Returns the declared count if `line` is an "nvars: k" directive.
std::optional<std::size_t> parse_directive(std::string_view line, std::size_t base) {
  const std::string_view body = trim(line);
  constexpr std::string_view key = "nvars";
  if (body.substr(0, key.size()) != key) return std::nullopt;
  std::string_view rest = body.substr(key.size());
  std::size_t offset = base + static_cast<std::size_t>(body.data() - line.data()) + key.size();
  while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) {
    rest.remove_prefix(1);
    ++offset;
  }
  if (rest.empty() || rest.front() != ':') {
    // "nvars" without a colon is not a polynomial either; report it here
    throw SyntaxError(offset, {"':'"}, rest.empty() ? "end of line" : "'" + std::string(1, rest.front()) + "'");
  }
  rest.remove_prefix(1);
  ++offset;
  while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) {
    rest.remove_prefix(1);
    ++offset;
  }
  if (rest.empty() || !std::all_of(rest.begin(), rest.end(), is_digit) || rest.size() > 6) {
    throw SyntaxError(offset, {"positive integer"},
                      rest.empty() ? "end of line" : "'" + std::string(rest) + "'");
  }
  const std::size_t k = std::stoul(std::string(rest));
  if (k == 0) throw DomainError("nvars must be positive");
  return k;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, std::optional<std::size_t> nvars_hint,
                     const ParseOptions& options) {
  return parse_poly_at(text, nvars_hint, options, 0);
}

std::string print_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(c);
    const std::string mono = monomial_text(e);
    if (mono.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += to_string(magnitude) + '*' + mono;
    }
  }
  return out;
}

MaxSystem parse_system_file(std::string_view text, const ParseOptions& options) {
  std::optional<std::size_t> declared;
  bool seen_content = false;
  struct Line {
    std::string_view body;
    std::size_t offset;
  };
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    const std::string_view body = trim(line);
    if (!body.empty() && body.front() != '#') {
      if (!seen_content) {
        declared = parse_directive(line, start);
        seen_content = true;
        if (!declared) lines.push_back({line, start});
      } else {
        lines.push_back({line, start});
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (lines.empty()) throw EmptySystem("system file contains no polynomials");

  std::vector<MultiPoly> polys;
  std::size_t nvars = declared.value_or(1);
  for (const auto& line : lines) {
    polys.push_back(parse_poly_at(line.body, declared, options, line.offset));
    nvars = std::max(nvars, polys.back().nvars());
  }
  for (auto& p : polys) p = p.embed(nvars);
  return MaxSystem(std::move(polys));
}

std::string print_system_file(const MaxSystem& sys, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  std::size_t used = 0;
  for (const auto& p : sys.polys()) {
    for (std::size_t i = used; i < sys.nvars(); ++i) {
      if (p.uses_variable(i)) used = i + 1;
    }
  }
  if (used < sys.nvars()) out << "nvars: " << sys.nvars() << '\n';
  for (const auto& p : sys.polys()) out << print_poly(p) << '\n';
  return out.str();
}

}  // namespace loja
