#include "pcalg/parser.hpp"

#include <cctype>

namespace pcalg {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprAST run() {
        auto ast = parse_expr();
        skip_ws();
        if (pos_ < text_.size()) throw ParseError("unexpected trailing input", pos_);
        return ast;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!consume(c)) throw ParseError(std::string("expected ") + what, pos_);
    }

    int parse_nat() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected a natural number", start);
        int value = 0;
        for (size_t i = start; i < pos_; ++i) {
            value = value * 10 + (text_[i] - '0');
            if (value > 1'000'000) throw ParseError("exponent too large", start);
        }
        return value;
    }

    ExprAST parse_expr() {
        ExprAST sum;
        sum.tag = ExprAST::Tag::sum;
        sum.pos = pos_;
        int sign = consume('-') ? -1 : 1;
        sum.kids.push_back(parse_term());
        sum.signs.push_back(sign);
        while (true) {
            if (consume('+'))
                sign = 1;
            else if (consume('-'))
                sign = -1;
            else
                break;
            sum.kids.push_back(parse_term());
            sum.signs.push_back(sign);
        }
        if (sum.kids.size() == 1 && sum.signs[0] == 1) return std::move(sum.kids[0]);
        return sum;
    }

    ExprAST parse_term() {
        ExprAST prod;
        prod.tag = ExprAST::Tag::product;
        prod.pos = pos_;
        prod.kids.push_back(parse_factor());
        while (consume('*')) prod.kids.push_back(parse_factor());
        if (prod.kids.size() == 1) return std::move(prod.kids[0]);
        return prod;
    }

    ExprAST parse_factor() {
        ExprAST atom = parse_atom();
        skip_ws();
        if (consume('^')) {
            ExprAST pow;
            pow.tag = ExprAST::Tag::power;
            pow.pos = atom.pos;
            pow.exponent = parse_nat();
            pow.kids.push_back(std::move(atom));
            return pow;
        }
        return atom;
    }

    ExprAST parse_atom() {
        char c = peek();
        size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
        if (consume('(')) {
            auto inner = parse_expr();
            expect(')', "')'");
            return inner;
        }
        if (consume('[')) {
            ExprAST bracket;
            bracket.tag = ExprAST::Tag::bracket;
            bracket.pos = start;
            bracket.kids.push_back(parse_expr());
            expect(',', "','");
            bracket.kids.push_back(parse_expr());
            expect(']', "']'");
            bracket.depth = 1;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '_') {
                ++pos_;
                bracket.depth = parse_nat();
            }
            return bracket;
        }
        throw ParseError("expected a rational, identifier, bracket or '('", start);
    }

    ExprAST parse_rational() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string literal(text_.substr(start, pos_ - start));
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == dstart) throw ParseError("expected denominator digits after '/'", dstart);
            literal += "/" + std::string(text_.substr(dstart, pos_ - dstart));
        }
        ExprAST node;
        node.tag = ExprAST::Tag::rational;
        node.pos = start;
        try {
            node.value = rat_from_string(literal);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), start);
        }
        return node;
    }

    ExprAST parse_ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])))) ++pos_;
        ExprAST node;
        node.tag = ExprAST::Tag::ident;
        node.pos = start;
        node.name = std::string(text_.substr(start, pos_ - start));
        return node;
    }

    std::string_view text_;
    size_t pos_ = 0;
};

} // namespace

ExprAST parse_expression(std::string_view text) {
    return Parser(text).run();
}

PCPoly ast_to_pcpoly(const ExprAST& ast, int n) {
    switch (ast.tag) {
    case ExprAST::Tag::rational:
        return ast.value * PCPoly::unit(n);
    case ExprAST::Tag::ident: {
        if (ast.name == "U") return PCPoly::u(n);
        if (ast.name == "V") return PCPoly::v(n);
        if (ast.name.size() >= 2 && ast.name[0] == 'X') {
            int j = 0;
            for (size_t i = 1; i < ast.name.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(ast.name[i])))
                    throw ParseError("unknown identifier '" + ast.name + "'", ast.pos);
                j = j * 10 + (ast.name[i] - '0');
            }
            if (j < 1 || j > n)
                throw ParseError("variable X" + std::to_string(j) + " out of range 1.." + std::to_string(n),
                                 ast.pos);
            return PCPoly::x(n, j);
        }
        throw ParseError("unknown identifier '" + ast.name + "'", ast.pos);
    }
    case ExprAST::Tag::sum: {
        PCPoly acc(n);
        for (size_t i = 0; i < ast.kids.size(); ++i) {
            PCPoly term = ast_to_pcpoly(ast.kids[i], n);
            if (ast.signs[i] > 0)
                acc += term;
            else
                acc -= term;
        }
        return acc;
    }
    case ExprAST::Tag::product: {
        PCPoly acc = PCPoly::unit(n);
        for (const auto& kid : ast.kids) acc = acc * ast_to_pcpoly(kid, n);
        return acc;
    }
    case ExprAST::Tag::power: {
        PCPoly base = ast_to_pcpoly(ast.kids[0], n);
        PCPoly acc = PCPoly::unit(n);
        for (int i = 0; i < ast.exponent; ++i) acc = acc * base;
        return acc;
    }
    case ExprAST::Tag::bracket:
        return ad_pow(ast_to_pcpoly(ast.kids[0], n), ast_to_pcpoly(ast.kids[1], n), ast.depth);
    }
    throw ParseError("corrupt expression tree", ast.pos);
}

PCPoly parse_pcpoly(std::string_view text, int n) {
    return ast_to_pcpoly(parse_expression(text), n);
}

WeylElement parse_weyl(std::string_view text) {
    WeylAlgebra alg;
    std::map<std::string, WeylElement> idents{{"v", WeylElement::v()}, {"w", WeylElement::w()}};
    return ast_to_element(parse_expression(text), alg, idents);
}

} // namespace pcalg
