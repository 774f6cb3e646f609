#pragma once

// Expression text for plane elements.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' exponent)?
//   base   := 'x' | 'y' | 'u' | 'q' | 'i' | scalar | '(' expr ')'
//   scalar := uint ['/' uint]
//
// Whitespace is insignificant.  Exponents are unsigned; only q may carry a
// negative exponent ("q^-3").  Errors throw SyntaxError with the 1-based
// column; an unclosed group reports the column of its '('.

#include "qplane/plane.hpp"
#include "qplane/scalar.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace qplane::ast {

enum class Kind { GenX, GenY, GenU, Scalar, QPower, Add, Mul, Pow, Neg, Paren };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    Kind kind;
    GaussianRational scalar;      // Scalar
    BigInt exponent;              // QPower: any sign; Pow: >= 0
    std::vector<NodePtr> kids;    // Add/Mul: 2, Pow/Neg/Paren: 1
};

NodePtr make(Kind kind, std::vector<NodePtr> kids = {});

}  // namespace qplane::ast

namespace qplane {

ast::NodePtr parse_expression(std::string_view text);

PlaneElement evaluate(const ast::NodePtr& node);

inline PlaneElement parse_to_element(std::string_view text) {
    return evaluate(parse_expression(text));
}

// Canonical expression text with precedence-driven parentheses; parsing the
// result evaluates to the same element.
std::string print_expression(const ast::NodePtr& node);

// Scalar (generator-free) expression; q powers of any sign allowed.
QScalar parse_scalar_expression(std::string_view text);

// Exact scalar from expression text ("3/2", "1/2+1/3*i", "-2*q^3" is
// rejected: the value must be q-free and scalar).
GaussianRational parse_gaussian(std::string_view text);

// Float scalar: "0.3", "-0.25+0.5i", "0.4i".
Complex parse_complex(std::string_view text);

}  // namespace qplane
