#include "tnlb/presentation.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "tnlb/errors.hpp"

namespace tnlb {

namespace {

struct Token {
    enum Kind { Ident, Int, Colon, Comma, Semi, Caret, End } kind;
    std::string text;
    long value = 0;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        skip();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Token::End;
            tok_.text.clear();
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t s = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                step();
            tok_.kind = Token::Ident;
            tok_.text = src_.substr(s, pos_ - s);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
            size_t s = pos_;
            step();
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                step();
            std::string t = src_.substr(s, pos_ - s);
            if (t == "-" || t == "+")
                throw ParseError("expected an integer", tok_.line, tok_.col);
            tok_.kind = Token::Int;
            tok_.text = t;
            tok_.value = std::stol(t);
            return;
        }
        switch (c) {
            case ':': tok_.kind = Token::Colon; break;
            case ',': tok_.kind = Token::Comma; break;
            case ';': tok_.kind = Token::Semi; break;
            case '^': tok_.kind = Token::Caret; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        tok_.text = std::string(1, c);
        step();
    }

    void skip() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') step();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                step();
            } else {
                break;
            }
        }
    }

    void step() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

[[noreturn]] void expected(const std::string& what, const Token& got) {
    throw ParseError("expected " + what +
                         (got.kind == Token::End ? " but reached end of input"
                                                 : " but found '" + got.text + "'"),
                     got.line, got.col);
}

void expect_keyword(Lexer& lx, const std::string& kw) {
    Token t = lx.next();
    if (t.kind != Token::Ident || t.text != kw) expected("'" + kw + "'", t);
}

void expect(Lexer& lx, Token::Kind k, const std::string& what) {
    Token t = lx.next();
    if (t.kind != k) expected(what, t);
}

}  // namespace

GroupPresentation parse_presentation(const std::string& text) {
    Lexer lx(text);
    GroupPresentation p;
    std::map<std::string, int> index;

    expect_keyword(lx, "gens");
    expect(lx, Token::Colon, "':'");
    while (true) {
        Token t = lx.next();
        if (t.kind != Token::Ident) expected("generator name", t);
        if (index.count(t.text))
            throw ParseError("duplicate generator name '" + t.text + "'", t.line, t.col);
        index[t.text] = static_cast<int>(p.generator_names.size());
        p.generator_names.push_back(t.text);
        Token sep = lx.next();
        if (sep.kind == Token::Semi) break;
        if (sep.kind != Token::Comma) expected("',' or ';'", sep);
    }
    if (p.generator_names.empty()) throw ParseError("empty generator list");

    expect_keyword(lx, "rels");
    expect(lx, Token::Colon, "':'");
    if (lx.peek().kind == Token::Semi) {
        lx.next();
    } else {
        while (true) {
            std::vector<Letter> letters;
            while (lx.peek().kind == Token::Ident) {
                Token name = lx.next();
                auto it = index.find(name.text);
                if (it == index.end())
                    throw ParseError("unknown generator name '" + name.text + "'", name.line,
                                     name.col);
                long power = 1;
                if (lx.peek().kind == Token::Caret) {
                    lx.next();
                    Token e = lx.next();
                    if (e.kind != Token::Int) expected("integer exponent", e);
                    if (e.value == 0)
                        throw ParseError("exponent must be a nonzero integer", e.line, e.col);
                    power = e.value;
                }
                int sign = power > 0 ? 1 : -1;
                for (long i = 0; i < (power > 0 ? power : -power); ++i)
                    letters.push_back(Letter{it->second, sign});
            }
            if (letters.empty()) {
                Token t = lx.peek();
                if (t.kind == Token::Comma || t.kind == Token::Semi)
                    ;  // empty word is legal; it reduces to the identity
                else
                    expected("a word", t);
            }
            p.relators.emplace_back(std::move(letters));
            Token sep = lx.next();
            if (sep.kind == Token::Semi) break;
            if (sep.kind != Token::Comma) expected("',' or ';'", sep);
        }
    }
    Token tail = lx.next();
    if (tail.kind != Token::End) expected("end of input", tail);
    return p;
}

std::string GroupPresentation::str() const {
    std::ostringstream out;
    out << "gens: ";
    for (size_t i = 0; i < generator_names.size(); ++i)
        out << (i ? ", " : "") << generator_names[i];
    out << "; rels: ";
    for (size_t i = 0; i < relators.size(); ++i)
        out << (i ? ", " : "") << relators[i].str(generator_names);
    out << ";";
    return out.str();
}

}  // namespace tnlb
