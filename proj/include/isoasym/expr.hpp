#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "isoasym/errors.hpp"

namespace isoasym {

/// The three parameters an expression may depend on.
enum class Var { S, T, Q };

enum class BinaryOp { Add, Sub, Mul, Div, Pow };

enum class Func { Sin, Cos, Tan, Exp, Ln, Sqrt };

/// Immutable scalar expression in the variables s, t, q. Cheap to copy
/// (shared tree); safe for concurrent reads.
class Expr {
  public:
    enum class Kind { Number, Variable, Pi, Neg, Binary, Call };

    /// Default-constructed Expr is the literal 0.
    Expr();

    static Expr number(double value);
    static Expr variable(Var v);
    static Expr pi();
    static Expr neg(Expr operand);
    static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
    static Expr call(Func f, Expr arg);

    Kind kind() const;
    double number_value() const; // Kind::Number only
    Var variable() const;        // Kind::Variable only
    BinaryOp op() const;         // Kind::Binary only
    Func func() const;           // Kind::Call only
    Expr lhs() const;            // Binary
    Expr rhs() const;            // Binary
    Expr operand() const;        // Neg / Call

    /// Standard real evaluation. Throws DomainError on division by zero,
    /// ln of non-positive, sqrt of negative, or ^ producing a non-finite
    /// value from finite inputs.
    double eval(double s, double t, double q) const;

    /// Symbolic partial derivative with respect to `v`. Constant subtrees
    /// fold to the literal 0; newly built nodes get light simplification
    /// (constant folding, x*0 -> 0, x*1 -> x, x+0 -> x). Throws
    /// UnsupportedNode if a ^ node has a non-constant exponent.
    Expr differentiate(Var v) const;

    /// Parseable text form with minimal parentheses.
    std::string str() const;

    /// True when the tree contains no variable nodes (pi counts as constant).
    bool is_constant() const;

    bool uses(Var v) const;

  private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Recursive-descent parser for the grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := unary ('^' factor)?
///   unary  := '-' unary | atom
///   atom   := NUMBER | 's'|'t'|'q' | 'pi' | FUNC '(' expr ')' | '(' expr ')'
///   FUNC   := sin|cos|tan|exp|ln|sqrt
/// Whitespace is insignificant. A ^ exponent must be a constant expression.
/// Throws SyntaxError (with byte offset) on malformed input.
Expr parse(std::string_view text);

} // namespace isoasym
