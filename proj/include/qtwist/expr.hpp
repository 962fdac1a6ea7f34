#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "qtwist/pbw.hpp"

namespace qtwist {

/// Syntax error with the byte offset it occurred at and the tokens that
/// would have been accepted there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::string expected);
    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

/// AST over the CLI expression language:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' int]
///   atom   := '(' expr ')' | generator | rational | 'q'
///   generator := e[i,j] | f[i,j] | g[i,j] | h[i,j] | d | d1 | d2
struct ExprAst {
    enum class Node { Add, Sub, Neg, Mul, Pow, Gen, Rat, Q };

    Node node = Node::Rat;
    std::vector<ExprAst> children;
    GenId gen{};       // Node::Gen
    Rational value;    // Node::Rat
    long exponent = 0; // Node::Pow
};

ExprAst parse_expr(const std::string& text);

/// Evaluates an AST in the enveloping algebra. Negative powers are only
/// defined for invertible scalars (single q-monomials).
UElt eval(const ExprAst& ast);

/// parse + eval.
UElt eval_expr(const std::string& text);

/// The element as a Lie-algebra combination, when every monomial is a single
/// generator with no scalar part.
std::optional<LieElt> as_lie(const UElt& x);

}  // namespace qtwist
