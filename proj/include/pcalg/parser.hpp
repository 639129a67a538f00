#pragma once

#include "pcalg/backend.hpp"
#include "pcalg/pcpoly.hpp"
#include "pcalg/weyl.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcalg {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

/// AST for the expression grammar
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := rational | ident | '[' expr ',' expr ']' ('_' nat)? | '(' expr ')'
/// with rationals written p or p/q. Power binds tighter than product, which
/// binds tighter than sum; a bracket [a,b]_k is the k-fold iterated
/// commutator [a,...,a,b] and is an atom.
struct ExprAST {
    enum class Tag { rational, ident, sum, product, power, bracket };
    Tag tag = Tag::rational;
    Rat value;                 // rational
    std::string name;          // ident
    std::vector<ExprAST> kids; // sum/product children; bracket: exactly 2; power: 1
    std::vector<int> signs;    // sum only: +1 / -1 per child
    int exponent = 0;          // power
    int depth = 1;             // bracket subscript
    size_t pos = 0;            // source position, for diagnostics
};

ExprAST parse_expression(std::string_view text);

/// Lowers an AST to a partially commutative polynomial over X_1..X_n, U, V.
/// Unknown identifiers and X-indices outside 1..n raise ParseError.
PCPoly ast_to_pcpoly(const ExprAST& ast, int n);

/// Lowers an AST to an element of an algebra, resolving identifiers through
/// the given table (e.g. {"v", "w"} for the Weyl backend).
template <EvaluationAlgebra A>
typename A::Element ast_to_element(const ExprAST& ast, const A& alg,
                                   const std::map<std::string, typename A::Element>& idents) {
    switch (ast.tag) {
    case ExprAST::Tag::rational:
        return alg.scale(ast.value, alg.unit());
    case ExprAST::Tag::ident: {
        auto it = idents.find(ast.name);
        if (it == idents.end()) throw ParseError("unknown identifier '" + ast.name + "'", ast.pos);
        return it->second;
    }
    case ExprAST::Tag::sum: {
        auto acc = alg.zero();
        for (size_t i = 0; i < ast.kids.size(); ++i) {
            auto term = ast_to_element(ast.kids[i], alg, idents);
            acc = ast.signs[i] > 0 ? alg.add(acc, term) : alg.sub(acc, term);
        }
        return acc;
    }
    case ExprAST::Tag::product: {
        auto acc = alg.unit();
        for (const auto& kid : ast.kids) acc = alg.mul(acc, ast_to_element(kid, alg, idents));
        return acc;
    }
    case ExprAST::Tag::power: {
        auto base = ast_to_element(ast.kids[0], alg, idents);
        auto acc = alg.unit();
        for (int i = 0; i < ast.exponent; ++i) acc = alg.mul(acc, base);
        return acc;
    }
    case ExprAST::Tag::bracket: {
        auto a = ast_to_element(ast.kids[0], alg, idents);
        auto acc = ast_to_element(ast.kids[1], alg, idents);
        for (int i = 0; i < ast.depth; ++i) acc = alg.sub(alg.mul(a, acc), alg.mul(acc, a));
        return acc;
    }
    }
    throw ParseError("corrupt expression tree", ast.pos);
}

PCPoly parse_pcpoly(std::string_view text, int n);
WeylElement parse_weyl(std::string_view text);

} // namespace pcalg
