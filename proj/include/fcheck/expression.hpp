#pragma once

// Complex arithmetic expressions over named real variables, used for
// user-supplied kernels on the command line.
//
// Grammar (^ is right-associative and binds tighter than unary minus):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' unary)?
//   atom   := number | name | name '(' expr ')' | '(' expr ')'
// Names are the declared variables, the constants pi and i, and the
// functions exp, sin, cos, sqrt.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fcheck/common.hpp"

namespace fcheck::expr {

class Expression {
public:
    /// ParseError (with the offending position) on malformed input or an
    /// undeclared name.
    static Expression parse(std::string_view text, std::vector<std::string> variables);

    /// `values` are bound to the declared variables in order.
    Complex eval(std::span<const Complex> values) const;
    Complex operator()(std::initializer_list<Complex> values) const {
        return eval(std::span<const Complex>(values.begin(), values.size()));
    }

    const std::string& source() const { return source_; }
    const std::vector<std::string>& variables() const { return variables_; }

    struct Node;

private:
    std::string source_;
    std::vector<std::string> variables_;
    std::shared_ptr<const Node> root_;
};

} // namespace fcheck::expr
