#include "fcheck/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace fcheck::expr {

struct Expression::Node {
    enum class Kind { Constant, Variable, Neg, Add, Sub, Mul, Div, Pow, Exp, Sin, Cos, Sqrt };
    Kind kind;
    Complex constant{};
    std::size_t variable = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;
using Kind = Node::Kind;

NodePtr leaf(Complex c) { return std::make_shared<Node>(Node{Kind::Constant, c, 0, {}, {}}); }
NodePtr variable(std::size_t k) { return std::make_shared<Node>(Node{Kind::Variable, {}, k, {}, {}}); }
NodePtr unary(Kind k, NodePtr a) { return std::make_shared<Node>(Node{k, {}, 0, std::move(a), {}}); }
NodePtr binary(Kind k, NodePtr a, NodePtr b) {
    return std::make_shared<Node>(Node{k, {}, 0, std::move(a), std::move(b)});
}

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

    NodePtr parse_all() {
        NodePtr e = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr e = term();
        for (;;) {
            if (accept('+')) e = binary(Kind::Add, e, term());
            else if (accept('-')) e = binary(Kind::Sub, e, term());
            else return e;
        }
    }

    NodePtr term() {
        NodePtr e = unary_expr();
        for (;;) {
            if (accept('*')) e = binary(Kind::Mul, e, unary_expr());
            else if (accept('/')) e = binary(Kind::Div, e, unary_expr());
            else return e;
        }
    }

    NodePtr unary_expr() {
        if (accept('-')) return unary(Kind::Neg, unary_expr());
        if (accept('+')) return unary_expr();
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (accept('^')) return binary(Kind::Pow, base, unary_expr());
        return base;
    }

    NodePtr atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    NodePtr number() {
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        double v = 0.0;
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc()) fail("malformed number");
        pos_ += static_cast<std::size_t>(res.ptr - first);
        return leaf(v);
    }

    NodePtr name() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string id(text_.substr(start, pos_ - start));
        for (std::size_t k = 0; k < vars_.size(); ++k)
            if (vars_[k] == id) return variable(k);
        if (id == "pi") return leaf(kPi);
        if (id == "i") return leaf(kI);
        Kind fn;
        if (id == "exp") fn = Kind::Exp;
        else if (id == "sin") fn = Kind::Sin;
        else if (id == "cos") fn = Kind::Cos;
        else if (id == "sqrt") fn = Kind::Sqrt;
        else {
            pos_ = start;
            fail("unknown name '" + id + "'");
        }
        if (!accept('(')) fail("expected '(' after " + id);
        NodePtr arg = expr();
        if (!accept(')')) fail("expected ')'");
        return unary(fn, std::move(arg));
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

Complex evaluate(const Node& n, std::span<const Complex> v) {
    switch (n.kind) {
    case Kind::Constant: return n.constant;
    case Kind::Variable: return v[n.variable];
    case Kind::Neg: return -evaluate(*n.lhs, v);
    case Kind::Add: return evaluate(*n.lhs, v) + evaluate(*n.rhs, v);
    case Kind::Sub: return evaluate(*n.lhs, v) - evaluate(*n.rhs, v);
    case Kind::Mul: return evaluate(*n.lhs, v) * evaluate(*n.rhs, v);
    case Kind::Div: return evaluate(*n.lhs, v) / evaluate(*n.rhs, v);
    case Kind::Pow: {
        const Complex b = evaluate(*n.lhs, v);
        const Complex e = evaluate(*n.rhs, v);
        // Real integer exponents by repeated multiplication keep 0^k and
        // negative bases exact.
        if (e.imag() == 0.0 && e.real() == std::round(e.real()) && std::abs(e.real()) <= 64.0) {
            const int k = static_cast<int>(e.real());
            Complex r = 1.0;
            for (int j = 0; j < std::abs(k); ++j) r *= b;
            return k < 0 ? 1.0 / r : r;
        }
        return std::pow(b, e);
    }
    case Kind::Exp: return std::exp(evaluate(*n.lhs, v));
    case Kind::Sin: return std::sin(evaluate(*n.lhs, v));
    case Kind::Cos: return std::cos(evaluate(*n.lhs, v));
    case Kind::Sqrt: return std::sqrt(evaluate(*n.lhs, v));
    }
    return {};
}

} // namespace

Expression Expression::parse(std::string_view text, std::vector<std::string> variables) {
    Expression e;
    e.source_ = std::string(text);
    e.variables_ = std::move(variables);
    e.root_ = Parser(e.source_, e.variables_).parse_all();
    return e;
}

Complex Expression::eval(std::span<const Complex> values) const {
    if (values.size() != variables_.size())
        throw DomainError("Expression::eval: expected " + std::to_string(variables_.size()) +
                          " values, got " + std::to_string(values.size()));
    return evaluate(*root_, values);
}

} // namespace fcheck::expr
