#ifndef LOJA_TEXT_HPP
#define LOJA_TEXT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "loja/poly.hpp"

namespace loja {

struct ParseOptions {
  std::uint64_t exponent_cap = 1'000'000;
  // Largest accepted k in x<k>.
  std::size_t max_variable_index = 4096;
};

// Grammar (whitespace insignificant):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | base ('^' nat)?
//   base   := int ('/' int)? | x<k> | '(' expr ')'
// The result has max(nvars_hint, largest k used, 1) variables.
MultiPoly parse_poly(std::string_view text,
                     std::optional<std::size_t> nvars_hint = std::nullopt,
                     const ParseOptions& options = {});

// Graded-lex order, exact coefficients; re-parseable by parse_poly.
std::string print_poly(const MultiPoly& p);

// One polynomial per nonblank line, '#' comment lines, and an optional
// leading "nvars: k" directive. Error positions are byte offsets into the
// whole text.
MaxSystem parse_system_file(std::string_view text, const ParseOptions& options = {});

// Inverse of parse_system_file. The nvars directive is written only when
// the highest variable does not occur in any member.
std::string print_system_file(const MaxSystem& sys,
                              std::string_view comment = {});

}  // namespace loja

#endif  // LOJA_TEXT_HPP
