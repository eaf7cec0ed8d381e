#include "isoasym/expr.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <cmath>

namespace isoasym {

struct Expr::Node {
    Kind kind;
    double num = 0.0;
    Var var = Var::S;
    BinaryOp bop = BinaryOp::Add;
    Func fn = Func::Sin;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
};

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr::Expr() : Expr(number(0.0)) {}

Expr Expr::number(double value) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Number;
    n->num = value;
    return Expr(std::move(n));
}

Expr Expr::variable(Var v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Variable;
    n->var = v;
    return Expr(std::move(n));
}

Expr Expr::pi() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pi;
    return Expr(std::move(n));
}

Expr Expr::neg(Expr operand) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Neg;
    n->a = std::move(operand.node_);
    return Expr(std::move(n));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Binary;
    n->bop = op;
    n->a = std::move(lhs.node_);
    n->b = std::move(rhs.node_);
    return Expr(std::move(n));
}

Expr Expr::call(Func f, Expr arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Call;
    n->fn = f;
    n->a = std::move(arg.node_);
    return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }

double Expr::number_value() const {
    assert(node_->kind == Kind::Number);
    return node_->num;
}

Var Expr::variable() const {
    assert(node_->kind == Kind::Variable);
    return node_->var;
}

BinaryOp Expr::op() const {
    assert(node_->kind == Kind::Binary);
    return node_->bop;
}

Func Expr::func() const {
    assert(node_->kind == Kind::Call);
    return node_->fn;
}

Expr Expr::lhs() const {
    assert(node_->kind == Kind::Binary);
    return Expr(node_->a);
}

Expr Expr::rhs() const {
    assert(node_->kind == Kind::Binary);
    return Expr(node_->b);
}

Expr Expr::operand() const {
    assert(node_->kind == Kind::Neg || node_->kind == Kind::Call);
    return Expr(node_->a);
}

bool Expr::is_constant() const {
    switch (node_->kind) {
        case Kind::Number:
        case Kind::Pi: return true;
        case Kind::Variable: return false;
        case Kind::Neg:
        case Kind::Call: return Expr(node_->a).is_constant();
        case Kind::Binary:
            return Expr(node_->a).is_constant() && Expr(node_->b).is_constant();
    }
    return false;
}

bool Expr::uses(Var v) const {
    switch (node_->kind) {
        case Kind::Number:
        case Kind::Pi: return false;
        case Kind::Variable: return node_->var == v;
        case Kind::Neg:
        case Kind::Call: return Expr(node_->a).uses(v);
        case Kind::Binary:
            return Expr(node_->a).uses(v) || Expr(node_->b).uses(v);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string format_number(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

const char* func_name(Func f) {
    switch (f) {
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Tan: return "tan";
        case Func::Exp: return "exp";
        case Func::Ln: return "ln";
        case Func::Sqrt: return "sqrt";
    }
    return "?";
}

// Printer precedence: +,- lowest, then *,/ then unary - then ^ then atoms.
int precedence(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Binary:
            switch (e.op()) {
                case BinaryOp::Add:
                case BinaryOp::Sub: return 10;
                case BinaryOp::Mul:
                case BinaryOp::Div: return 20;
                case BinaryOp::Pow: return 40;
            }
            return 10;
        case Expr::Kind::Neg: return 30;
        default: return 100;
    }
}

void print(const Expr& e, std::string& out) {
    switch (e.kind()) {
        case Expr::Kind::Number:
            out += format_number(e.number_value());
            return;
        case Expr::Kind::Pi:
            out += "pi";
            return;
        case Expr::Kind::Variable:
            out += (e.variable() == Var::S ? 's' : e.variable() == Var::T ? 't' : 'q');
            return;
        case Expr::Kind::Call:
            out += func_name(e.func());
            out += '(';
            print(e.operand(), out);
            out += ')';
            return;
        case Expr::Kind::Neg: {
            out += '-';
            // Parenthesize any binary operand so "-(a^2)" cannot reparse as
            // "(-a)^2".
            const Expr inner = e.operand();
            const bool parens = inner.kind() == Expr::Kind::Binary;
            if (parens) out += '(';
            print(inner, out);
            if (parens) out += ')';
            return;
        }
        case Expr::Kind::Binary: {
            const int p = precedence(e);
            const Expr l = e.lhs();
            const Expr r = e.rhs();
            const char opc = e.op() == BinaryOp::Add   ? '+'
                             : e.op() == BinaryOp::Sub ? '-'
                             : e.op() == BinaryOp::Mul ? '*'
                             : e.op() == BinaryOp::Div ? '/'
                                                       : '^';
            if (e.op() == BinaryOp::Pow) {
                // Right-associative; base must be an atom or parenthesized.
                const bool lp = precedence(l) <= p;
                const bool rp = precedence(r) < p;
                if (lp) out += '(';
                print(l, out);
                if (lp) out += ')';
                out += opc;
                if (rp) out += '(';
                print(r, out);
                if (rp) out += ')';
            } else {
                // Left-associative; parenthesize a same-precedence right
                // operand so grouping (and floating-point rounding) survives
                // the round trip.
                const bool lp = precedence(l) < p;
                const bool rp = precedence(r) <= p;
                if (lp) out += '(';
                print(l, out);
                if (lp) out += ')';
                out += opc;
                if (rp) out += '(';
                print(r, out);
                if (rp) out += ')';
            }
            return;
        }
    }
}

} // namespace

std::string Expr::str() const {
    std::string out;
    print(*this, out);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation

double Expr::eval(double s, double t, double q) const {
    switch (node_->kind) {
        case Kind::Number: return node_->num;
        case Kind::Pi: return M_PI;
        case Kind::Variable:
            switch (node_->var) {
                case Var::S: return s;
                case Var::T: return t;
                default: return q;
            }
        case Kind::Neg: return -Expr(node_->a).eval(s, t, q);
        case Kind::Binary: {
            const double a = Expr(node_->a).eval(s, t, q);
            const double b = Expr(node_->b).eval(s, t, q);
            switch (node_->bop) {
                case BinaryOp::Add: return a + b;
                case BinaryOp::Sub: return a - b;
                case BinaryOp::Mul: return a * b;
                case BinaryOp::Div:
                    if (b == 0.0) throw DomainError("division by zero", str());
                    return a / b;
                case BinaryOp::Pow: {
                    const double r = std::pow(a, b);
                    if (!std::isfinite(r))
                        throw DomainError("power is not finite", str());
                    return r;
                }
            }
            return 0.0;
        }
        case Kind::Call: {
            const double a = Expr(node_->a).eval(s, t, q);
            switch (node_->fn) {
                case Func::Sin: return std::sin(a);
                case Func::Cos: return std::cos(a);
                case Func::Tan: return std::tan(a);
                case Func::Exp: return std::exp(a);
                case Func::Ln:
                    if (a <= 0.0) throw DomainError("ln of non-positive value", str());
                    return std::log(a);
                case Func::Sqrt:
                    if (a < 0.0) throw DomainError("sqrt of negative value", str());
                    return std::sqrt(a);
            }
            return 0.0;
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// Differentiation

namespace {

bool is_num(const Expr& e, double v) {
    return e.kind() == Expr::Kind::Number && e.number_value() == v;
}

bool is_number(const Expr& e) { return e.kind() == Expr::Kind::Number; }

Expr c_neg(Expr a) {
    if (is_number(a)) return Expr::number(-a.number_value());
    if (a.kind() == Expr::Kind::Neg) return a.operand();
    return Expr::neg(std::move(a));
}

Expr c_add(Expr a, Expr b) {
    if (is_num(a, 0.0)) return b;
    if (is_num(b, 0.0)) return a;
    if (is_number(a) && is_number(b))
        return Expr::number(a.number_value() + b.number_value());
    return Expr::binary(BinaryOp::Add, std::move(a), std::move(b));
}

Expr c_sub(Expr a, Expr b) {
    if (is_num(b, 0.0)) return a;
    if (is_number(a) && is_number(b))
        return Expr::number(a.number_value() - b.number_value());
    if (is_num(a, 0.0)) return c_neg(std::move(b));
    return Expr::binary(BinaryOp::Sub, std::move(a), std::move(b));
}

Expr c_mul(Expr a, Expr b) {
    if (is_num(a, 0.0) || is_num(b, 0.0)) return Expr::number(0.0);
    if (is_num(a, 1.0)) return b;
    if (is_num(b, 1.0)) return a;
    if (is_number(a) && is_number(b))
        return Expr::number(a.number_value() * b.number_value());
    return Expr::binary(BinaryOp::Mul, std::move(a), std::move(b));
}

Expr c_div(Expr a, Expr b) {
    if (is_num(b, 1.0)) return a;
    if (is_number(a) && is_number(b) && b.number_value() != 0.0)
        return Expr::number(a.number_value() / b.number_value());
    return Expr::binary(BinaryOp::Div, std::move(a), std::move(b));
}

Expr c_pow(Expr a, Expr b) {
    if (is_num(b, 1.0)) return a;
    if (is_num(b, 0.0)) return Expr::number(1.0);
    if (is_number(a) && is_number(b)) {
        const double r = std::pow(a.number_value(), b.number_value());
        if (std::isfinite(r)) return Expr::number(r);
    }
    return Expr::binary(BinaryOp::Pow, std::move(a), std::move(b));
}

} // namespace

Expr Expr::differentiate(Var v) const {
    switch (node_->kind) {
        case Kind::Number:
        case Kind::Pi: return number(0.0);
        case Kind::Variable: return number(node_->var == v ? 1.0 : 0.0);
        case Kind::Neg: return c_neg(Expr(node_->a).differentiate(v));
        case Kind::Binary: {
            const Expr a(node_->a);
            const Expr b(node_->b);
            switch (node_->bop) {
                case BinaryOp::Add:
                    return c_add(a.differentiate(v), b.differentiate(v));
                case BinaryOp::Sub:
                    return c_sub(a.differentiate(v), b.differentiate(v));
                case BinaryOp::Mul:
                    return c_add(c_mul(a.differentiate(v), b),
                                 c_mul(a, b.differentiate(v)));
                case BinaryOp::Div:
                    return c_div(c_sub(c_mul(a.differentiate(v), b),
                                       c_mul(a, b.differentiate(v))),
                                 c_pow(b, number(2.0)));
                case BinaryOp::Pow: {
                    if (!b.is_constant())
                        throw UnsupportedNode(
                            "cannot differentiate ^ with a non-constant exponent: " +
                            str());
                    // Power rule: d(a^c) = c * a^(c-1) * da.
                    Expr cm1 = c_sub(b, number(1.0));
                    return c_mul(c_mul(b, c_pow(a, std::move(cm1))),
                                 a.differentiate(v));
                }
            }
            return number(0.0);
        }
        case Kind::Call: {
            const Expr a(node_->a);
            Expr da = a.differentiate(v);
            switch (node_->fn) {
                case Func::Sin: return c_mul(std::move(da), call(Func::Cos, a));
                case Func::Cos:
                    return c_neg(c_mul(std::move(da), call(Func::Sin, a)));
                case Func::Tan:
                    return c_div(std::move(da),
                                 c_pow(call(Func::Cos, a), number(2.0)));
                case Func::Exp: return c_mul(std::move(da), call(Func::Exp, a));
                case Func::Ln: return c_div(std::move(da), a);
                case Func::Sqrt:
                    return c_div(std::move(da),
                                 c_mul(number(2.0), call(Func::Sqrt, a)));
            }
            return number(0.0);
        }
    }
    return number(0.0);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr run() {
        Expr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr parse_expr() {
        Expr e = parse_term();
        for (;;) {
            if (accept('+'))
                e = Expr::binary(BinaryOp::Add, std::move(e), parse_term());
            else if (accept('-'))
                e = Expr::binary(BinaryOp::Sub, std::move(e), parse_term());
            else
                return e;
        }
    }

    Expr parse_term() {
        Expr e = parse_factor();
        for (;;) {
            if (accept('*'))
                e = Expr::binary(BinaryOp::Mul, std::move(e), parse_factor());
            else if (accept('/'))
                e = Expr::binary(BinaryOp::Div, std::move(e), parse_factor());
            else
                return e;
        }
    }

    Expr parse_factor() {
        Expr base = parse_unary();
        if (accept('^')) {
            skip_ws();
            const std::size_t exp_pos = pos_;
            Expr exponent = parse_factor();
            if (!exponent.is_constant())
                throw SyntaxError("exponent of ^ must be constant", exp_pos);
            return Expr::binary(BinaryOp::Pow, std::move(base), std::move(exponent));
        }
        return base;
    }

    Expr parse_unary() {
        if (accept('-')) return Expr::neg(parse_unary());
        return parse_atom();
    }

    Expr parse_atom() {
        if (at_end()) throw SyntaxError("unexpected end of input", pos_);
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)))
            return parse_identifier();
        if (accept('(')) {
            Expr e = parse_expr();
            skip_ws();
            if (!accept(')'))
                throw SyntaxError("expected ')'", pos_);
            return e;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    Expr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
                ++pos_;
            if (pos_ < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            } else {
                pos_ = mark; // the e/E belongs to an identifier, not this number
            }
        }
        double value = 0.0;
        const auto res =
            std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (res.ec != std::errc() || res.ptr != text_.data() + pos_)
            throw SyntaxError("malformed number", start);
        return Expr::number(value);
    }

    Expr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "s") return Expr::variable(Var::S);
        if (name == "t") return Expr::variable(Var::T);
        if (name == "q") return Expr::variable(Var::Q);
        if (name == "pi") return Expr::pi();
        Func f;
        if (name == "sin") f = Func::Sin;
        else if (name == "cos") f = Func::Cos;
        else if (name == "tan") f = Func::Tan;
        else if (name == "exp") f = Func::Exp;
        else if (name == "ln") f = Func::Ln;
        else if (name == "sqrt") f = Func::Sqrt;
        else
            throw SyntaxError("unknown identifier '" + std::string(name) + "'",
                              start);
        skip_ws();
        if (!accept('('))
            throw SyntaxError("expected '(' after function name", pos_);
        Expr arg = parse_expr();
        skip_ws();
        if (!accept(')'))
            throw SyntaxError("expected ')'", pos_);
        return Expr::call(f, std::move(arg));
    }
};

} // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

} // namespace isoasym
