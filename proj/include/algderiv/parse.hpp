#ifndef ALGDERIV_PARSE_HPP
#define ALGDERIV_PARSE_HPP

#include <string>
#include <string_view>

#include "algderiv/eigenvalue.hpp"
#include "algderiv/poly.hpp"

namespace algderiv {

/* Expression grammar (no implicit multiplication):
 *   expr     := term (("+" | "-") term)*
 *   term     := factor ("*" factor)*
 *   factor   := base ("^" nonneg-integer)?
 *   base     := rational | variable | "(" expr ")"
 *   rational := integer ("/" positive-integer)?
 *   variable := lowercase letter followed by lowercase letters/digits
 */

class ParseError : public Error {
public:
    enum class Kind { Syntax, UnknownVariable, NegativeExponent };

    ParseError(Kind kind, std::size_t position, const std::string& what);

    Kind kind() const { return kind_; }
    std::size_t position() const { return position_; } // 1-based column

private:
    static std::string code_for(Kind kind);
    Kind kind_;
    std::size_t position_;
};

Poly parse_poly(std::string_view text, const RingPtr& ring);

// Canonical text form: terms in descending graded-lex order, exact
// rational coefficients, explicit '*' and '^'. parse_poly inverts it.
std::string format_poly(const Poly& p);

// Rational linear combination of declared weight symbols plus a
// rational constant, e.g. "2*w1 + 1/2*w2 - 3".
Eigenvalue parse_weight_expr(std::string_view text, const WeightSymbolsPtr& symbols);

} // namespace algderiv

#endif
