#include "qtwist/expr.hpp"

#include <cctype>

namespace qtwist {

ParseError::ParseError(std::size_t offset, std::string expected)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": expected " +
                         expected),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(pos, what);
    }

    long integer(const char* what) {
        skip_ws();
        bool neg = false;
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError(pos, what);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        (void)start;
        return neg ? -v : v;
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(const std::string& text) : lex{text} {}

    ExprAst parse() {
        ExprAst e = expr();
        if (!lex.eof()) throw ParseError(lex.pos, "'+', '-', '*', '^' or end of input");
        return e;
    }

    ExprAst expr() {
        ExprAst acc;
        if (lex.accept('-')) {
            acc.node = ExprAst::Node::Neg;
            acc.children.push_back(term());
        } else {
            acc = term();
        }
        while (true) {
            if (lex.accept('+')) {
                ExprAst sum;
                sum.node = ExprAst::Node::Add;
                sum.children.push_back(std::move(acc));
                sum.children.push_back(term());
                acc = std::move(sum);
            } else if (lex.accept('-')) {
                ExprAst diff;
                diff.node = ExprAst::Node::Sub;
                diff.children.push_back(std::move(acc));
                diff.children.push_back(term());
                acc = std::move(diff);
            } else {
                return acc;
            }
        }
    }

    ExprAst term() {
        ExprAst acc = factor();
        while (lex.accept('*')) {
            ExprAst prod;
            prod.node = ExprAst::Node::Mul;
            prod.children.push_back(std::move(acc));
            prod.children.push_back(factor());
            acc = std::move(prod);
        }
        return acc;
    }

    ExprAst factor() {
        ExprAst base = atom();
        if (lex.accept('^')) {
            ExprAst pw;
            pw.node = ExprAst::Node::Pow;
            pw.exponent = lex.integer("an integer exponent");
            pw.children.push_back(std::move(base));
            return pw;
        }
        return base;
    }

    ExprAst atom() {
        if (lex.accept('(')) {
            ExprAst inner = expr();
            lex.expect(')', "')'");
            return inner;
        }
        char c = lex.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (c == 'q') {
            ++lex.pos;
            ExprAst node;
            node.node = ExprAst::Node::Q;
            return node;
        }
        if (c == 'd') return derivation();
        if (c == 'e' || c == 'f' || c == 'g' || c == 'h') return graded_generator();
        throw ParseError(lex.pos, "'(', a number, 'q' or a generator");
    }

    ExprAst rational() {
        ExprAst node;
        node.node = ExprAst::Node::Rat;
        long num = lex.integer("a number");
        if (lex.accept('/')) {
            long den = lex.integer("a denominator");
            if (den == 0) throw ParseError(lex.pos, "a nonzero denominator");
            node.value = rat(num, den);
        } else {
            node.value = num;
        }
        return node;
    }

    ExprAst derivation() {
        ++lex.pos;  // past 'd'
        ExprAst node;
        node.node = ExprAst::Node::Gen;
        if (lex.pos < lex.text.size() && (lex.text[lex.pos] == '1' || lex.text[lex.pos] == '2')) {
            node.gen = lex.text[lex.pos] == '1' ? GenId::d1() : GenId::d2();
            ++lex.pos;
        } else {
            node.gen = GenId::d();
        }
        return node;
    }

    ExprAst graded_generator() {
        char letter = lex.text[lex.pos++];
        lex.expect('[', "'['");
        long m1 = lex.integer("an integer degree");
        lex.expect(',', "','");
        long m2 = lex.integer("an integer degree");
        lex.expect(']', "']'");
        GenKind kind = letter == 'e'   ? GenKind::E
                       : letter == 'f' ? GenKind::F
                       : letter == 'g' ? GenKind::G
                                       : GenKind::H;
        if ((kind == GenKind::G || kind == GenKind::H) && m1 == 0 && m2 == 0)
            throw ParseError(lex.pos, "a nonzero degree (g[0,0] and h[0,0] do not exist)");
        ExprAst node;
        node.node = ExprAst::Node::Gen;
        node.gen = GenId::make(kind, static_cast<int>(m1), static_cast<int>(m2));
        return node;
    }
};

}  // namespace

ExprAst parse_expr(const std::string& text) { return Parser(text).parse(); }

UElt eval(const ExprAst& ast) {
    switch (ast.node) {
        case ExprAst::Node::Add: return eval(ast.children[0]) + eval(ast.children[1]);
        case ExprAst::Node::Sub: return eval(ast.children[0]) - eval(ast.children[1]);
        case ExprAst::Node::Neg: return -eval(ast.children[0]);
        case ExprAst::Node::Mul: return eval(ast.children[0]) * eval(ast.children[1]);
        case ExprAst::Node::Gen: return UElt::gen(ast.gen);
        case ExprAst::Node::Rat: return UElt::scalar(LaurentQ(ast.value));
        case ExprAst::Node::Q: return UElt::scalar(LaurentQ::q_pow(1));
        case ExprAst::Node::Pow: {
            UElt base = eval(ast.children[0]);
            if (ast.exponent >= 0) return u_pow(base, static_cast<unsigned>(ast.exponent));
            auto scalar = base.as_scalar();
            std::optional<LaurentQ> inv;
            if (scalar) inv = scalar->try_inverse();
            if (!inv)
                throw std::invalid_argument(
                    "negative powers are only defined for invertible scalars");
            UElt ib = UElt::scalar(*inv);
            return u_pow(ib, static_cast<unsigned>(-ast.exponent));
        }
    }
    throw std::logic_error("eval: unreachable");
}

UElt eval_expr(const std::string& text) { return eval(parse_expr(text)); }

std::optional<LieElt> as_lie(const UElt& x) {
    LieElt v;
    for (const auto& [mono, c] : x.terms()) {
        if (mono.size() != 1) return std::nullopt;
        v.add(mono.factors()[0], c);
    }
    return v;
}

}  // namespace qtwist
