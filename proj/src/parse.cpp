#include "qplane/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>

namespace qplane {

namespace ast {

NodePtr make(Kind kind, std::vector<NodePtr> kids) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->kids = std::move(kids);
    return n;
}

}  // namespace ast

namespace {

using ast::Kind;
using ast::Node;
using ast::NodePtr;

std::shared_ptr<Node> make_mut(Kind kind, std::vector<NodePtr> kids = {}) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->kids = std::move(kids);
    return n;
}

enum class Tok { End, Plus, Minus, Star, Caret, Slash, LParen, RParen, X, Y, U, Q, I, UInt };

struct Token {
    Tok kind = Tok::End;
    std::size_t column = 0;  // 1-based
    BigInt value;            // UInt
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_ = Token{};
        current_.column = pos_ + 1;
        if (pos_ >= text_.size()) {
            current_.kind = Tok::End;
            return;
        }
        const char c = text_[pos_];
        switch (c) {
            case '+': current_.kind = Tok::Plus; ++pos_; return;
            case '-': current_.kind = Tok::Minus; ++pos_; return;
            case '*': current_.kind = Tok::Star; ++pos_; return;
            case '^': current_.kind = Tok::Caret; ++pos_; return;
            case '/': current_.kind = Tok::Slash; ++pos_; return;
            case '(': current_.kind = Tok::LParen; ++pos_; return;
            case ')': current_.kind = Tok::RParen; ++pos_; return;
            case 'x': current_.kind = Tok::X; ++pos_; return;
            case 'y': current_.kind = Tok::Y; ++pos_; return;
            case 'u': current_.kind = Tok::U; ++pos_; return;
            case 'q': current_.kind = Tok::Q; ++pos_; return;
            case 'i': current_.kind = Tok::I; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            current_.kind = Tok::UInt;
            current_.value = BigInt(std::string(text_.substr(start, pos_ - start)));
            return;
        }
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", pos_ + 1);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    NodePtr parse() {
        NodePtr e = expr();
        if (lex_.peek().kind != Tok::End)
            throw SyntaxError("unexpected trailing input", lex_.peek().column);
        return e;
    }

private:
    NodePtr expr() {
        NodePtr left;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            left = ast::make(Kind::Neg, {term()});
        } else {
            left = term();
        }
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            const bool minus = lex_.take().kind == Tok::Minus;
            NodePtr right = term();
            if (minus) right = ast::make(Kind::Neg, {right});
            left = ast::make(Kind::Add, {left, right});
        }
        return left;
    }

    NodePtr term() {
        NodePtr left = factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            left = ast::make(Kind::Mul, {left, factor()});
        }
        return left;
    }

    NodePtr factor() {
        NodePtr b = base();
        if (lex_.peek().kind != Tok::Caret) return b;
        const Token caret = lex_.take();
        bool negate = false;
        if (lex_.peek().kind == Tok::Minus) {
            if (b->kind != Kind::QPower)
                throw SyntaxError("negative exponent is only allowed on q", lex_.peek().column);
            lex_.take();
            negate = true;
        }
        if (lex_.peek().kind != Tok::UInt)
            throw SyntaxError("expected exponent after '^'", lex_.peek().column);
        BigInt e = lex_.take().value;
        if (negate) e = -e;
        if (b->kind == Kind::QPower) {
            auto n = make_mut(Kind::QPower);
            n->exponent = b->exponent * e;  // base is always bare q here
            return n;
        }
        auto n = make_mut(Kind::Pow, {std::move(b)});
        n->exponent = std::move(e);
        (void)caret;
        return n;
    }

    NodePtr base() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::X: lex_.take(); return ast::make(Kind::GenX);
            case Tok::Y: lex_.take(); return ast::make(Kind::GenY);
            case Tok::U: lex_.take(); return ast::make(Kind::GenU);
            case Tok::Q: {
                lex_.take();
                auto n = make_mut(Kind::QPower);
                n->exponent = 1;
                return n;
            }
            case Tok::I: {
                lex_.take();
                auto n = make_mut(Kind::Scalar);
                n->scalar = GaussianRational(Rational(0), Rational(1));
                return n;
            }
            case Tok::UInt: {
                lex_.take();
                Rational v(t.value);
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.take();
                    if (lex_.peek().kind != Tok::UInt)
                        throw SyntaxError("expected denominator after '/'", lex_.peek().column);
                    const Token d = lex_.take();
                    if (d.value == 0) throw SyntaxError("zero denominator", d.column);
                    v /= Rational(d.value);
                }
                auto n = make_mut(Kind::Scalar);
                n->scalar = GaussianRational(v);
                return n;
            }
            case Tok::LParen: {
                lex_.take();
                open_parens_.push_back(t.column);
                NodePtr inner = expr();
                if (lex_.peek().kind != Tok::RParen) {
                    if (lex_.peek().kind == Tok::End)
                        throw SyntaxError("unclosed '('", t.column);
                    throw SyntaxError("expected ')'", lex_.peek().column);
                }
                lex_.take();
                open_parens_.pop_back();
                return ast::make(Kind::Paren, {std::move(inner)});
            }
            case Tok::End:
                if (!open_parens_.empty())
                    throw SyntaxError("unclosed '('", open_parens_.back());
                throw SyntaxError("unexpected end of input", t.column);
            default:
                throw SyntaxError("unexpected token", t.column);
        }
    }

    Lexer lex_;
    std::vector<std::size_t> open_parens_;
};

unsigned checked_exponent(const BigInt& e) {
    if (e < 0 || e > 1000000) throw Error("exponent out of range: " + e.str());
    return e.convert_to<unsigned>();
}

int precedence(const NodePtr& n) {
    switch (n->kind) {
        case Kind::Add: return 1;
        case Kind::Neg: return 1;
        case Kind::Mul: return 2;
        case Kind::Pow: return 3;
        default: return 4;  // atoms; Paren is transparent
    }
}

void print_node(const NodePtr& n, int min_prec, std::string& out);

void print_child(const NodePtr& child, int min_prec, std::string& out) {
    if (precedence(child) < min_prec) {
        out += '(';
        print_node(child, 0, out);
        out += ')';
    } else {
        print_node(child, min_prec, out);
    }
}

void print_node(const NodePtr& n, int min_prec, std::string& out) {
    switch (n->kind) {
        case Kind::GenX: out += 'x'; return;
        case Kind::GenY: out += 'y'; return;
        case Kind::GenU: out += 'u'; return;
        case Kind::QPower:
            out += 'q';
            if (n->exponent != 1) {
                out += '^';
                BigInt a = n->exponent;
                if (a < 0) {
                    out += '-';
                    a = -a;
                }
                out += a.str();
            }
            return;
        case Kind::Scalar: {
            // Lexer-made scalars are nonnegative rationals or plain i.
            if (n->scalar == GaussianRational(Rational(0), Rational(1))) {
                out += 'i';
            } else {
                out += rational_str(n->scalar.re);
            }
            return;
        }
        case Kind::Paren:
            print_child(n->kids[0], min_prec, out);
            return;
        case Kind::Neg:
            out += '-';
            print_child(n->kids[0], 2, out);
            return;
        case Kind::Add: {
            print_child(n->kids[0], 1, out);
            const NodePtr& rhs = n->kids[1];
            if (rhs->kind == Kind::Neg) {
                out += " - ";
                print_child(rhs->kids[0], 2, out);
            } else {
                out += " + ";
                print_child(rhs, 2, out);
            }
            return;
        }
        case Kind::Mul:
            print_child(n->kids[0], 2, out);
            out += '*';
            print_child(n->kids[1], 2, out);
            return;
        case Kind::Pow:
            print_child(n->kids[0], 4, out);
            out += '^';
            out += n->exponent.str();
            return;
    }
}

}  // namespace

ast::NodePtr parse_expression(std::string_view text) {
    return Parser(text).parse();
}

PlaneElement evaluate(const ast::NodePtr& node) {
    switch (node->kind) {
        case Kind::GenX: return PlaneElement::x();
        case Kind::GenY: return PlaneElement::y();
        case Kind::GenU: return PlaneElement::u();
        case Kind::Scalar: return PlaneElement::scalar(QScalar(node->scalar));
        case Kind::QPower: return PlaneElement::scalar(QScalar::q_power(node->exponent));
        case Kind::Paren: return evaluate(node->kids[0]);
        case Kind::Neg: return -evaluate(node->kids[0]);
        case Kind::Add: return evaluate(node->kids[0]) + evaluate(node->kids[1]);
        case Kind::Mul: return evaluate(node->kids[0]) * evaluate(node->kids[1]);
        case Kind::Pow: return evaluate(node->kids[0]).pow(checked_exponent(node->exponent));
    }
    throw Error("unreachable expression node");
}

std::string print_expression(const ast::NodePtr& node) {
    std::string out;
    print_node(node, 0, out);
    return out;
}

QScalar parse_scalar_expression(std::string_view text) {
    PlaneElement e = parse_to_element(text);
    const QScalar c = e.coefficient(Monomial{0, 0});
    if (!(PlaneElement::scalar(c) == e))
        throw Error("expected a scalar expression: " + std::string(text));
    return c;
}

GaussianRational parse_gaussian(std::string_view text) {
    const QScalar c = parse_scalar_expression(text);
    GaussianRational v;
    for (const auto& [exp, coeff] : c.terms()) {
        if (exp != 0) throw Error("expected a q-free scalar: " + std::string(text));
        v = coeff;
    }
    return v;
}

Complex parse_complex(std::string_view text) {
    const std::string s(text);
    const char* p = s.c_str();
    char* end = nullptr;
    auto read_number = [&](double& out) -> bool {
        out = std::strtod(p, &end);
        if (end == p) return false;
        p = end;
        return true;
    };
    auto skip_ws = [&] {
        while (*p == ' ' || *p == '\t') ++p;
    };
    auto eat_i = [&]() -> bool {
        skip_ws();
        if (*p == '*') ++p;
        skip_ws();
        if (*p == 'i') {
            ++p;
            return true;
        }
        return false;
    };

    skip_ws();
    double first = 0.0;
    double re = 0.0, im = 0.0;
    if (!read_number(first)) {
        // pure "i" / "-i"
        double sign = 1.0;
        if (*p == '+' || *p == '-') {
            if (*p == '-') sign = -1.0;
            ++p;
        }
        if (!eat_i()) throw Error("bad complex literal: " + s);
        im = sign;
    } else if (eat_i()) {
        im = first;
    } else {
        re = first;
        skip_ws();
        if (*p == '+' || *p == '-') {
            const double sign = (*p == '-') ? -1.0 : 1.0;
            ++p;
            skip_ws();
            double second = 1.0;
            const bool had_digits = read_number(second);
            if (!eat_i()) throw Error("bad complex literal: " + s);
            im = sign * (had_digits ? second : 1.0);
        }
    }
    skip_ws();
    if (*p != '\0') throw Error("bad complex literal: " + s);
    return Complex(re, im);
}

}  // namespace qplane
