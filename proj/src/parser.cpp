#include "polymin/parser.hpp"

#include <cctype>
#include <map>
#include <set>

#include "polymin/error.hpp"

namespace polymin {
namespace {

enum class Tok { Ident, String, LParen, RParen, Comma, Bang, Amp, Bar, Equals, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space_and_comments();
            const std::size_t line = line_, col = col_;
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", line, col});
                return out;
            }
            const char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string word;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    word += advance();
                out.push_back({Tok::Ident, std::move(word), line, col});
            } else if (c == '"') {
                advance();
                std::string text;
                while (true) {
                    if (pos_ >= src_.size() || src_[pos_] == '\n') throw ParseError("unterminated string", line, col);
                    char ch = advance();
                    if (ch == '"') break;
                    if (ch == '\\') {
                        if (pos_ >= src_.size()) throw ParseError("unterminated string", line, col);
                        ch = advance();
                    }
                    text += ch;
                }
                out.push_back({Tok::String, std::move(text), line, col});
            } else {
                Tok kind;
                switch (c) {
                case '(': kind = Tok::LParen; break;
                case ')': kind = Tok::RParen; break;
                case ',': kind = Tok::Comma; break;
                case '!': kind = Tok::Bang; break;
                case '&': kind = Tok::Amp; break;
                case '|': kind = Tok::Bar; break;
                case '=': kind = Tok::Equals; break;
                default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
                }
                advance();
                out.push_back({kind, std::string(1, c), line, col});
            }
        }
    }

private:
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
                advance();
            } else if (src_.substr(pos_, 2) == "//") {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

const std::set<std::string>& reserved_words() {
    static const std::set<std::string> words{"true", "ap", "eta", "gamma", "diamond", "let", "save", "load", "model"};
    return words;
}

class Parser {
public:
    // `bindings` null means bare identifiers are atoms.
    Parser(std::vector<Token> tokens, const std::map<std::string, Formula>* bindings)
        : tokens_(std::move(tokens)), bindings_(bindings) {}

    Formula formula() { return disjunction(); }

    const Token& peek() const { return tokens_[pos_]; }
    bool at(Tok kind) const { return peek().kind == kind; }
    bool at_word(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }

    Token expect(Tok kind, std::string_view what) {
        if (!at(kind)) fail("expected " + std::string(what));
        return tokens_[pos_++];
    }

    void expect_word(std::string_view w) {
        if (!at_word(w)) fail("expected '" + std::string(w) + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(msg + ", found " + found, t.line, t.column);
    }

    void set_bindings(const std::map<std::string, Formula>* b) { bindings_ = b; }

private:
    Formula disjunction() {
        Formula lhs = conjunction();
        while (at(Tok::Bar)) {
            ++pos_;
            lhs = Formula::disj(std::move(lhs), conjunction());
        }
        return lhs;
    }

    Formula conjunction() {
        Formula lhs = unary();
        while (at(Tok::Amp)) {
            ++pos_;
            lhs = Formula::conj(std::move(lhs), unary());
        }
        return lhs;
    }

    Formula unary() {
        if (at(Tok::Bang)) {
            ++pos_;
            return Formula::negate(unary());
        }
        return primary();
    }

    Formula binary_call(Formula (*make)(Formula, Formula)) {
        ++pos_;
        expect(Tok::LParen, "'('");
        Formula a = formula();
        expect(Tok::Comma, "','");
        Formula b = formula();
        expect(Tok::RParen, "')'");
        return make(std::move(a), std::move(b));
    }

    Formula primary() {
        if (at(Tok::LParen)) {
            ++pos_;
            Formula inner = formula();
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (!at(Tok::Ident)) fail("expected a formula");
        const Token& t = peek();
        if (t.text == "true") {
            ++pos_;
            return Formula::top();
        }
        if (t.text == "ap") {
            ++pos_;
            expect(Tok::LParen, "'('");
            Token name = expect(Tok::String, "a quoted atom name");
            expect(Tok::RParen, "')'");
            return Formula::atom(name.text);
        }
        if (t.text == "eta") return binary_call(&Formula::eta);
        if (t.text == "gamma") return binary_call(&Formula::gamma);
        if (t.text == "diamond") {
            ++pos_;
            expect(Tok::LParen, "'('");
            Formula inner = formula();
            expect(Tok::RParen, "')'");
            return Formula::diamond(std::move(inner));
        }
        if (reserved_words().contains(t.text)) fail("unexpected keyword");
        if (bindings_ == nullptr) {
            ++pos_;
            return Formula::atom(t.text);
        }
        const auto it = bindings_->find(t.text);
        if (it == bindings_->end())
            throw ParseError("undefined identifier '" + t.text + "'", t.line, t.column);
        ++pos_;
        return it->second;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const std::map<std::string, Formula>* bindings_;
};

}  // namespace

Formula parse_formula(std::string_view text) {
    Parser p(Lexer(text).run(), nullptr);
    Formula f = p.formula();
    if (!p.at(Tok::End)) p.fail("expected end of formula");
    return f;
}

Script parse_script(std::string_view text) {
    std::map<std::string, Formula> env;
    Parser p(Lexer(text).run(), &env);
    Script script;
    std::set<std::string> save_names;

    if (p.at_word("load")) {
        p.expect_word("load");
        p.expect_word("model");
        p.expect(Tok::Equals, "'='");
        script.model_path = p.expect(Tok::String, "a quoted model path").text;
    }
    while (!p.at(Tok::End)) {
        if (p.at_word("let")) {
            p.expect_word("let");
            const Token name = p.expect(Tok::Ident, "an identifier");
            if (reserved_words().contains(name.text))
                throw ParseError("cannot bind keyword '" + name.text + "'", name.line, name.column);
            p.expect(Tok::Equals, "'='");
            Formula body = p.formula();
            env.insert_or_assign(name.text, body);
            script.bindings.emplace_back(name.text, std::move(body));
        } else if (p.at_word("save")) {
            p.expect_word("save");
            const Token name = p.expect(Tok::String, "a quoted result name");
            if (!save_names.insert(name.text).second)
                throw ParseError("duplicate save name \"" + name.text + "\"", name.line, name.column);
            script.saves.push_back({name.text, p.formula()});
        } else {
            p.fail("expected 'let' or 'save'");
        }
    }
    return script;
}

}  // namespace polymin
